"""Zero-pattern signatures, the sufficient conditions for true four-qubit
entanglement, and necessary-condition class matching."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .catalog import ClassProperties, all_class_names, class_properties
from .exact import GaussianRational
from .invariants import ZERO_TOL, invariant_vector
from .state import PureState, normalize

__all__ = [
    "Signature",
    "Certification",
    "Distinction",
    "signature",
    "signature_from_values",
    "certify_true_entanglement",
    "match_classes",
    "class_admits",
    "distinguish_states",
    "conditional_holds",
]


@dataclass(frozen=True)
class Signature:
    iv_zero: bool
    f_aggregate_zero: bool
    fi_zero: tuple
    di_zero: tuple
    rel_f9_eq_f10: bool
    rel_f1f2_eq_f9sq: bool
    rel_f3f4_eq_f9sq: bool
    tolerance: Optional[float]
    exact: bool

    def f_zero(self, i: int) -> bool:
        return self.fi_zero[i - 1]

    def d_zero(self, i: int) -> bool:
        return self.di_zero[i - 1]

    def relation(self, name: str) -> bool:
        return {
            "F9=F10": self.rel_f9_eq_f10,
            "F1F2=F9^2": self.rel_f1f2_eq_f9sq,
            "F3F4=F9^2": self.rel_f3f4_eq_f9sq,
        }[name]

    def nonzero_f(self) -> list[int]:
        return [i for i in range(1, 11) if not self.f_zero(i)]

    def nonzero_d(self) -> list[int]:
        return [i for i in range(1, 4) if not self.d_zero(i)]


def _close(x, y, tol, scale) -> bool:
    if tol is None:
        return x == y
    return abs(complex(x) - complex(y)) <= max(tol, tol * scale)


def signature_from_values(iv, f, d, tol: Optional[float] = ZERO_TOL) -> Signature:
    """Signature of already evaluated (unit-norm) invariant values.

    ``tol=None`` means exact comparison.
    """
    if tol is None:
        zero = lambda v: not v  # noqa: E731
    else:
        zero = lambda v: abs(complex(v)) < tol  # noqa: E731
    fi_zero = tuple(zero(v) for v in f)
    f9 = abs(complex(f[8]))
    return Signature(
        iv_zero=zero(iv),
        f_aggregate_zero=all(fi_zero),
        fi_zero=fi_zero,
        di_zero=tuple(zero(v) for v in d),
        rel_f9_eq_f10=_close(f[8], f[9], tol, f9),
        rel_f1f2_eq_f9sq=_close(f[0] * f[1], f[8] * f[8], tol, f9 * f9),
        rel_f3f4_eq_f9sq=_close(f[2] * f[3], f[8] * f[8], tol, f9 * f9),
        tolerance=tol,
        exact=tol is None,
    )


def signature(s: PureState, tol: float = ZERO_TOL, exact: Optional[bool] = None) -> Signature:
    """Zero pattern of IV, F_i, D_i and the three F relations.

    Exact states are classified exactly unless ``exact=False``; floating
    states are normalized first and compared against ``tol``.
    """
    if s.n != 4:
        raise ValueError("four-qubit state required")
    if not any(s.amps):
        raise ValueError("zero state")
    if exact is None:
        exact = s.exact
    if exact and not s.exact:
        raise ValueError("exact signature needs an exact state")
    if exact:
        v = invariant_vector(s)
        return signature_from_values(v.iv, v.f, v.d, None)
    v = invariant_vector(normalize(s.to_float()))
    return signature_from_values(v.iv, v.f, v.d, tol)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Certification:
    certified: bool
    condition: Optional[int]
    witness: str

    def __str__(self):
        if not self.certified:
            return "not certified"
        return f"true entanglement, condition ({self.condition}): {self.witness}"


def certify_true_entanglement(sig: Signature) -> Certification:
    """Apply the three sufficient conditions in order; the first hit wins.

    (1) IV = 0 and some D_i != 0;
    (2) IV != 0 and some F_i != 0 with i in 1..8;
    (3) IV != 0 and two of the D_i nonzero.
    """
    nd = sig.nonzero_d()
    if sig.iv_zero and nd:
        return Certification(True, 1, f"IV=0, D{nd[0]}!=0")
    if not sig.iv_zero:
        nf = [i for i in sig.nonzero_f() if i <= 8]
        if nf:
            return Certification(True, 2, f"IV!=0, F{nf[0]}!=0")
        if len(nd) >= 2:
            return Certification(True, 3, f"IV!=0, D{nd[0]}!=0, D{nd[1]}!=0")
    return Certification(False, None, "")


# ---------------------------------------------------------------------------


def conditional_holds(k: int, sig: Signature) -> Optional[bool]:
    """Check conditional #k: None when its antecedent fails, else whether the
    consequent holds."""
    z = sig.f_zero
    if k in (0, 1):
        if not ((z(1) or z(2)) and (z(3) or z(4))):
            return None
        if k == 0:
            return z(9) != z(10)
        return z(9) and z(10)
    if k in (2, 3):
        ante = (z(1) or z(2)) if k == 2 else (z(3) or z(4))
        if not ante:
            return None
        return sig.rel_f9_eq_f10 and not z(9)
    if k in (4, 5):
        if not any(all(z(i) for i in t) for t in itertools.combinations(range(1, 5), 3)):
            return None
        if k == 4:
            return (not (z(9) and z(10))) and (z(9) or z(10))
        return not z(9)
    raise ValueError(f"unknown conditional #{k}")


def class_admits(props: ClassProperties, sig: Signature) -> bool:
    """Whether ``sig`` is compatible with every class-level condition.

    "opt" entries never exclude a state.
    """
    if sig.iv_zero != props.iv_zero:
        return False
    if props.f_positive == sig.f_aggregate_zero:
        return False
    for k, flag in enumerate(props.d_flags):
        if flag == "zero" and not sig.di_zero[k]:
            return False
    if any(not sig.f_zero(i) for i in props.f_zero_set):
        return False
    if any(sig.f_zero(i) for i in props.f_nonzero):
        return False
    if any(sig.f_zero(i) and sig.f_zero(j) for i, j in props.f_nonzero_pairs):
        return False
    if any(not sig.relation(r) for r in props.relations):
        return False
    return all(conditional_holds(k, sig) is not False for k in props.conditionals)


def match_classes(sig: Signature, corrected: bool = False) -> list[str]:
    """Names of all true and degenerate classes whose necessary conditions
    ``sig`` satisfies.  ``corrected`` uses the class errata."""
    return [name for name in all_class_names() if class_admits(class_properties(name, corrected), sig)]


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Distinction:
    inequivalent: bool
    reason: str

    @property
    def verdict(self) -> str:
        return "provably-inequivalent" if self.inequivalent else "undecided"

    def __str__(self):
        return f"{self.verdict}: {self.reason}" if self.reason else self.verdict


def _iv_zero(s: PureState, tol: float) -> bool:
    from .invariants import iv

    if s.exact:
        return not iv(s)
    return abs(iv(normalize(s))) < tol


def distinguish_states(s1: PureState, s2: PureState, tol: float = ZERO_TOL) -> Distinction:
    """Provably inequivalent exactly when one IV vanishes and the other does
    not; the individual F_i and D_i flags are never used here."""
    for s in (s1, s2):
        if s.n != 4:
            raise ValueError("four-qubit states required")
    z1, z2 = _iv_zero(s1, tol), _iv_zero(s2, tol)
    if z1 != z2:
        which = "first" if z1 else "second"
        return Distinction(True, f"IV vanishes only for the {which} state")
    return Distinction(False, "IV is zero for both" if z1 else "IV is nonzero for both")
