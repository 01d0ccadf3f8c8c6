"""Four-qubit invariant IV and semi-invariants F1..F10, D1..D3.

Every polynomial is written once, over a plain sequence ``a`` of sixteen
amplitudes, and evaluated on whichever scalar type the state carries.  For
exact states the common ``1/sqrt(root)`` factor is applied afterwards using
homogeneity: IV has degree 2, every F_i and D_i degree 4.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exact import GaussianRational, Rational
from .state import LocalOperation, PureState, apply_local

__all__ = [
    "InvariantVector",
    "iv",
    "f_components",
    "f_aggregate",
    "d_components",
    "invariant_vector",
    "iv_poly",
    "f_polys",
    "d_polys",
    "residual_iv_covariance",
    "residual_f_semiinvariance",
    "residual_f910_semiinvariance",
    "residual_d_semiinvariance",
    "is_zero",
    "ZERO_TOL",
    "SLOTS",
    "DEGREE",
]

ZERO_TOL = 1e-9
SLOTS = {"A": 0, "B": 1, "C": 2, "D": 3}
DEGREE = {"IV": 2, "F": 4, "D": 4}


def iv_poly(a: Sequence):
    return (a[2] * a[13] - a[3] * a[12]) + (a[4] * a[11] - a[5] * a[10]) \
        - (a[0] * a[15] - a[1] * a[14]) - (a[6] * a[9] - a[7] * a[8])


def f_polys(a: Sequence) -> tuple:
    F1 = (a[0] * a[7] - a[2] * a[5] + (a[1] * a[6] - a[3] * a[4])) ** 2 \
        - 4 * (a[2] * a[4] - a[0] * a[6]) * (a[3] * a[5] - a[1] * a[7])
    F2 = ((a[8] * a[15] - a[11] * a[12]) + (a[9] * a[14] - a[10] * a[13])) ** 2 \
        - 4 * (a[11] * a[13] - a[9] * a[15]) * (a[10] * a[12] - a[8] * a[14])
    F3 = (a[0] * a[11] - a[2] * a[9] + a[1] * a[10] - a[3] * a[8]) ** 2 \
        - 4 * (a[2] * a[8] - a[0] * a[10]) * (a[3] * a[9] - a[1] * a[11])
    F4 = (a[4] * a[15] - a[6] * a[13] + a[5] * a[14] - a[7] * a[12]) ** 2 \
        - 4 * (a[6] * a[12] - a[4] * a[14]) * (a[7] * a[13] - a[5] * a[15])
    F5 = (a[0] * a[13] - a[4] * a[9] + a[1] * a[12] - a[5] * a[8]) ** 2 \
        - 4 * (a[4] * a[8] - a[0] * a[12]) * (a[5] * a[9] - a[1] * a[13])
    F6 = (a[2] * a[15] - a[6] * a[11] + a[3] * a[14] - a[7] * a[10]) ** 2 \
        - 4 * (a[6] * a[10] - a[2] * a[14]) * (a[7] * a[11] - a[3] * a[15])
    F7 = (a[0] * a[14] - a[4] * a[10] + a[2] * a[12] - a[6] * a[8]) ** 2 \
        - 4 * (a[4] * a[8] - a[0] * a[12]) * (a[6] * a[10] - a[2] * a[14])
    F8 = (a[1] * a[15] - a[5] * a[11] + a[3] * a[13] - a[7] * a[9]) ** 2 \
        - 4 * (a[5] * a[9] - a[1] * a[13]) * (a[7] * a[11] - a[3] * a[15])
    F9 = ((a[0] * a[15] - a[2] * a[13]) + (a[1] * a[14] - a[3] * a[12])) ** 2 \
        - 4 * (a[0] * a[14] - a[2] * a[12]) * (a[1] * a[15] - a[3] * a[13])
    F10 = ((a[4] * a[11] - a[7] * a[8]) + (a[5] * a[10] - a[6] * a[9])) ** 2 \
        - 4 * (a[7] * a[9] - a[5] * a[11]) * (a[6] * a[8] - a[4] * a[10])
    return (F1, F2, F3, F4, F5, F6, F7, F8, F9, F10)


def d_polys(a: Sequence) -> tuple:
    D1 = (a[1] * a[4] - a[0] * a[5]) * (a[11] * a[14] - a[10] * a[15]) \
        - (a[3] * a[6] - a[2] * a[7]) * (a[9] * a[12] - a[8] * a[13])
    D2 = (a[4] * a[7] - a[5] * a[6]) * (a[8] * a[11] - a[9] * a[10]) \
        - (a[0] * a[3] - a[1] * a[2]) * (a[12] * a[15] - a[13] * a[14])
    D3 = (a[3] * a[5] - a[1] * a[7]) * (a[10] * a[12] - a[8] * a[14]) \
        - (a[2] * a[4] - a[0] * a[6]) * (a[11] * a[13] - a[9] * a[15])
    return (D1, D2, D3)


# ---------------------------------------------------------------------------
# evaluation on states


def _require4(s: PureState):
    if s.n != 4:
        raise ValueError(f"four-qubit state required, got {s.n} qubits")


def _carrier(s: PureState):
    """Amplitude list for polynomial evaluation, and a result wrapper.

    Real exact states are evaluated on bare rationals, which is several
    times faster than going through GaussianRational.
    """
    if not s.exact:
        return list(s.amps), lambda v, deg: v
    root = Rational(s.root)
    if all(not x.im for x in s.amps):
        a = [x.re for x in s.amps]

        def wrap(v, deg):
            return GaussianRational._new(v / root ** (deg // 2), Rational(0))
    else:
        a = list(s.amps)

        def wrap(v, deg):
            return v / root ** (deg // 2)
    return a, wrap


def iv(s: PureState):
    """IV(s); exact states give a GaussianRational, floating ones a complex."""
    _require4(s)
    a, wrap = _carrier(s)
    return wrap(iv_poly(a), 2)


def f_components(s: PureState) -> tuple:
    _require4(s)
    a, wrap = _carrier(s)
    return tuple(wrap(v, 4) for v in f_polys(a))


def d_components(s: PureState) -> tuple:
    _require4(s)
    a, wrap = _carrier(s)
    return tuple(wrap(v, 4) for v in d_polys(a))


def f_aggregate(s: PureState) -> float:
    """F = 4 * sum of |F_i| over the ten components."""
    return 4.0 * sum(abs(complex(v)) for v in f_components(s))


@dataclass(frozen=True)
class InvariantVector:
    iv: object
    f: tuple
    f_aggregate: float
    d: tuple
    exact: bool

    def items(self):
        """(name, value) pairs in display order."""
        yield "IV", self.iv
        for k, v in enumerate(self.f, 1):
            yield f"F{k}", v
        yield "F", self.f_aggregate
        for k, v in enumerate(self.d, 1):
            yield f"D{k}", v


def invariant_vector(s: PureState) -> InvariantVector:
    _require4(s)
    a, wrap = _carrier(s)
    f = tuple(wrap(v, 4) for v in f_polys(a))
    return InvariantVector(
        iv=wrap(iv_poly(a), 2),
        f=f,
        f_aggregate=4.0 * sum(abs(complex(v)) for v in f),
        d=tuple(wrap(v, 4) for v in d_polys(a)),
        exact=s.exact,
    )


def is_zero(value, degree: int, norm2: float = 1.0, tol: float = ZERO_TOL) -> bool:
    """Zero test for an invariant value of the given polynomial degree.

    Exact values are compared with zero.  Floating values are first rescaled
    to a unit-norm state (``norm2`` is the squared norm of the state the value
    came from) and then compared against ``tol``.
    """
    if isinstance(value, GaussianRational):
        return not value
    return abs(complex(value)) / norm2 ** (degree / 2) < tol


# ---------------------------------------------------------------------------
# transformation laws


def _diff(x, y, exact: bool):
    d = x - y
    return d if exact else abs(complex(d))


def _check_identity(L: LocalOperation, slots, what: str):
    for k in slots:
        if not L[k].is_identity():
            raise ValueError(f"{what} requires the operator on qubit {'ABCD'[k]} to be the identity")


def _prep(s: PureState, L):
    _require4(s)
    L = L if isinstance(L, LocalOperation) else LocalOperation(L)
    if len(L) != 4:
        raise ValueError("four operators required")
    exact = s.exact and L.exact
    if not exact:
        s = s.to_float()
    return s, L, apply_local(s, L), exact


def residual_iv_covariance(s: PureState, L):
    """``IV(L s) - IV(s) * det(a)det(b)det(c)det(d)``.

    Exact inputs give the exact difference; otherwise its magnitude.
    """
    s, L, t, exact = _prep(s, L)
    da, db, dc, dd = L.dets()
    return _diff(iv(t), iv(s) * (da * db * dc * dd), exact)


_F_PAIR = {"A": (0, 1), "B": (2, 3), "C": (4, 5), "D": (6, 7)}


def residual_f_semiinvariance(s: PureState, L, slot: str):
    """Residuals of the law for the F pair tied to ``slot``.

    ``slot`` in A, B, C, D selects (F1, F2), (F3, F4), (F5, F6), (F7, F8);
    that qubit's operator must be the identity and the pair then scales by
    the squared determinants of the other three operators.
    """
    if slot not in _F_PAIR:
        raise ValueError(f"slot must be one of A, B, C, D; got {slot!r}")
    s, L, t, exact = _prep(s, L)
    k = SLOTS[slot]
    _check_identity(L, [k], f"slot {slot}")
    factor = 1
    for j, d in enumerate(L.dets()):
        if j != k:
            factor = factor * d * d
    f0, f1 = f_components(s), f_components(t)
    return tuple(_diff(f1[i], f0[i] * factor, exact) for i in _F_PAIR[slot])


def residual_f910_semiinvariance(s: PureState, L):
    """With the A and B operators fixed to the identity, F9 and F10 scale by
    ``det(c)^2 det(d)^2``."""
    s, L, t, exact = _prep(s, L)
    _check_identity(L, [0, 1], "the F9/F10 law")
    dc, dd = L[2].det(), L[3].det()
    factor = dc * dc * dd * dd
    f0, f1 = f_components(s), f_components(t)
    return tuple(_diff(f1[i], f0[i] * factor, exact) for i in (8, 9))


# identity slots and scaling slots of each D law
_D_LAW = {1: ((0, 2), (1, 3)), 2: ((0, 1), (2, 3)), 3: ((0, 3), (1, 2))}


def residual_d_semiinvariance(s: PureState, L, which: int):
    """Residual of the D_which law.

    D1: A, C identity, scales by det(b)^2 det(d)^2.
    D2: A, B identity, scales by det(c)^2 det(d)^2.
    D3: A, D identity, scales by det(b)^2 det(c)^2.
    """
    if which not in _D_LAW:
        raise ValueError("which must be 1, 2 or 3")
    s, L, t, exact = _prep(s, L)
    fixed, scaled = _D_LAW[which]
    _check_identity(L, fixed, f"the D{which} law")
    factor = 1
    for j in scaled:
        d = L[j].det()
        factor = factor * d * d
    return _diff(d_components(t)[which - 1], d_components(s)[which - 1] * factor, exact)
