"""Pure states of n qubits and the action of local operators.

Basis index ``i`` of an n-qubit state encodes the ket ``|i>`` with qubit A
(qubit 0) as the most significant bit, so ``|0011> = |3>``.

A :class:`PureState` is carried either exactly or in floating point.  Exact
states hold Gaussian-rational amplitudes ``b_i`` together with a positive
integer ``root``; the amplitude of ``|i>`` is ``b_i / sqrt(root)``.  This lets
normalized catalog states such as ``(|0> + |15>)/sqrt(2)`` stay exact.
Floating states hold Python complex numbers and always have ``root == 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .exact import GaussianRational, Rational, as_exact, det2, is_exact_scalar

__all__ = [
    "PureState",
    "LocalOperator",
    "LocalOperation",
    "make_state",
    "normalize",
    "apply_local",
    "permute_qubits",
    "swap_qubits",
    "random_invertible",
    "random_local_operation",
    "random_rational_operator",
    "random_rational_state",
    "scale_state",
    "state_from_terms",
    "MAX_QUBITS",
]

MAX_QUBITS = 8

# squarefree canonicalisation is by trial division; huge cofactors are left
# alone (equality does not depend on the canonical form, see PureState.__eq__)
_TRIAL_LIMIT = 10_000


def _squarefree_split(r: int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``r == k*k*m``; m is squarefree when r is small."""
    k, m = 1, 1
    p = 2
    while p * p <= r and p <= _TRIAL_LIMIT:
        e = 0
        while r % p == 0:
            r //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            m *= p
        p += 1 if p == 2 else 2
    s = math.isqrt(r)
    if s * s == r:
        k *= s
    else:
        m *= r
    return k, m


def _is_square_rational(q: Fraction) -> bool:
    a, b = q.numerator, q.denominator
    return a >= 0 and math.isqrt(a) ** 2 == a and math.isqrt(b) ** 2 == b


def _sqrt_rational(q: Fraction) -> Fraction:
    return Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator))


def _check_complex(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite amplitude {z!r}")
    return z


@dataclass(frozen=True, eq=False)
class PureState:
    """Dense pure state; see the module docstring for the carriers."""

    n: int
    amps: tuple
    root: int = 1

    def __post_init__(self):
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {self.n!r}")
        if len(self.amps) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} amplitudes, got {len(self.amps)}")
        exact = all(isinstance(a, GaussianRational) for a in self.amps)
        if exact:
            if not isinstance(self.root, int) or self.root < 1:
                raise ValueError("root must be a positive integer")
        else:
            if self.root != 1:
                raise ValueError("floating states carry root == 1")
            object.__setattr__(self, "amps", tuple(_check_complex(a) for a in self.amps))
        if not any(self.amps):
            raise ValueError("zero state")

    @property
    def exact(self) -> bool:
        return isinstance(self.amps[0], GaussianRational)

    @property
    def dim(self) -> int:
        return 1 << self.n

    def support(self) -> list[int]:
        return [i for i, a in enumerate(self.amps) if a]

    def norm2(self):
        """Squared 2-norm (exact rational for exact states)."""
        if self.exact:
            return sum((a.abs2() for a in self.amps), Rational(0)) / self.root
        return sum(abs(a) ** 2 for a in self.amps)

    def norm(self) -> float:
        return math.sqrt(float(self.norm2()))

    def values(self) -> list[complex]:
        """Amplitudes as complex floats, the root factor included."""
        if self.exact:
            s = math.sqrt(self.root)
            return [complex(a) / s for a in self.amps]
        return list(self.amps)

    def vector(self) -> np.ndarray:
        return np.array(self.values(), dtype=complex)

    def to_float(self) -> "PureState":
        return self if not self.exact else PureState(self.n, tuple(self.values()))

    def __eq__(self, other):
        if not isinstance(other, PureState):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.exact and other.exact:
            # b/sqrt(r) == c/sqrt(u)  iff  b == c*sqrt(r/u) with r/u a square
            ratio = Fraction(self.root, other.root)
            if not _is_square_rational(ratio):
                return False
            f = _sqrt_rational(ratio)
            return all(a == b * f for a, b in zip(self.amps, other.amps))
        if self.exact or other.exact:
            return False
        return self.amps == other.amps

    def __hash__(self):
        return hash((self.n, tuple(bool(a) for a in self.amps)))

    def isclose(self, other: "PureState", tol: float = 1e-12) -> bool:
        """Elementwise closeness of the complex values."""
        if self.n != other.n:
            return False
        return bool(np.allclose(self.vector(), other.vector(), rtol=0, atol=tol))

    def __repr__(self):
        from .ket import format_state

        return f"PureState(n={self.n}, {format_state(self)!r})"


def _canonical_exact(n: int, amps: Sequence[GaussianRational], root=1) -> PureState:
    """Build an exact state with ``root`` reduced to its squarefree part.

    ``root`` may be a positive rational; ``b/sqrt(p/q) = b*q/sqrt(p*q)``.
    """
    root = Fraction(root)
    if root <= 0:
        raise ValueError("root must be positive")
    amps = [as_exact(a) for a in amps]
    r = root.numerator * root.denominator
    scale = Rational(root.denominator)
    k, m = _squarefree_split(r)
    scale = scale / k
    if scale != 1:
        amps = [a * scale for a in amps]
    return PureState(n, tuple(amps), m)


def make_state(n: int, entries: Iterable[tuple[int, object]], root=1) -> PureState:
    """State with the given ``(index, amplitude)`` entries and zeros elsewhere.

    Exact scalars (int, Fraction, mpq, GaussianRational) give an exact state;
    any float or complex entry makes the whole state floating.  ``root`` is an
    optional common ``1/sqrt(root)`` factor (exact states only).
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"qubit count must be in 1..{MAX_QUBITS}, got {n!r}")
    entries = list(entries)
    seen = set()
    for idx, _ in entries:
        if not isinstance(idx, int) or not 0 <= idx < (1 << n):
            raise ValueError(f"index {idx!r} out of range for {n} qubits")
        if idx in seen:
            raise ValueError(f"duplicate index {idx}")
        seen.add(idx)
    if not entries:
        raise ValueError("zero state: no amplitudes given")
    exact = all(is_exact_scalar(v) for _, v in entries)
    if exact:
        amps = [GaussianRational(0)] * (1 << n)
        for idx, v in entries:
            amps[idx] = as_exact(v)
        if not any(amps):
            raise ValueError("zero state")
        return _canonical_exact(n, amps, root)
    amps = [0j] * (1 << n)
    scale = 1 / math.sqrt(float(root))
    for idx, v in entries:
        amps[idx] = complex(v) * scale
    return PureState(n, tuple(amps))


def state_from_terms(n: int, terms: Iterable[tuple[int, object, object]]) -> PureState:
    """Sum of terms ``coeff * sqrt(radicand) |index>``.

    ``radicand`` is a positive rational.  When every coefficient is exact and
    all radicands agree up to rational squares the result is exact;
    otherwise it is floating.  Repeated indices are added.
    """
    parts = []
    for idx, c, rad in terms:
        if not isinstance(idx, int) or not 0 <= idx < (1 << n):
            raise ValueError(f"index {idx!r} out of range for {n} qubits")
        rad = Fraction(rad)
        if rad <= 0:
            raise ValueError("radicand must be positive")
        # sqrt(p/q) = k*sqrt(m)/q with p*q = k*k*m
        k, m = _squarefree_split(rad.numerator * rad.denominator)
        parts.append((idx, c, Fraction(k, rad.denominator), m))
    roots = {m for *_, m in parts}
    if len(roots) == 1 and all(is_exact_scalar(c) for _, c, _, _ in parts):
        m = roots.pop()
        amps = [GaussianRational(0)] * (1 << n)
        for idx, c, f, _ in parts:
            amps[idx] = amps[idx] + as_exact(c) * Rational(f) * m  # c*sqrt(m) = c*m/sqrt(m)
        if not any(amps):
            raise ValueError("zero state")
        return _canonical_exact(n, amps, m)
    amps = [0j] * (1 << n)
    for idx, c, f, m in parts:
        amps[idx] += complex(c) * float(f) * math.sqrt(m)
    if not any(amps):
        raise ValueError("zero state")
    return PureState(n, tuple(amps))


def scale_state(s: PureState, lam) -> PureState:
    """Multiply every amplitude by the scalar ``lam``."""
    if s.exact and is_exact_scalar(lam):
        lam = as_exact(lam)
        if not lam:
            raise ValueError("zero state")
        return PureState(s.n, tuple(a * lam for a in s.amps), s.root)
    lam = complex(lam)
    return PureState(s.n, tuple(a * lam for a in s.values()))


def normalize(s: PureState) -> PureState:
    """Unit-norm state in the same direction.

    Exact states stay exact: the new root is the squared norm of ``amps``.
    """
    if s.exact:
        nrm2 = sum((a.abs2() for a in s.amps), Rational(0))
        return _canonical_exact(s.n, s.amps, Fraction(int(nrm2.numerator), int(nrm2.denominator)))
    v = s.vector()
    return PureState(s.n, tuple(v / np.linalg.norm(v)))


# ---------------------------------------------------------------------------
# local operators


@dataclass(frozen=True)
class LocalOperator:
    """2x2 matrix ``[[m1, m2], [m3, m4]]`` acting on one qubit."""

    m1: object
    m2: object
    m3: object
    m4: object

    def __iter__(self):
        return iter((self.m1, self.m2, self.m3, self.m4))

    @classmethod
    def identity(cls, exact: bool = True) -> "LocalOperator":
        one, zero = (GaussianRational(1), GaussianRational(0)) if exact else (1 + 0j, 0j)
        return cls(one, zero, zero, one)

    @classmethod
    def of(cls, m1, m2, m3, m4) -> "LocalOperator":
        """Coerce entries: exact when all four are exact scalars."""
        ms = (m1, m2, m3, m4)
        if all(is_exact_scalar(m) for m in ms):
            return cls(*(as_exact(m) for m in ms))
        return cls(*(_check_complex(m) for m in ms))

    @property
    def exact(self) -> bool:
        return all(isinstance(m, GaussianRational) for m in self)

    def det(self):
        return det2(self)

    def is_identity(self) -> bool:
        return self.m1 == 1 and self.m2 == 0 and self.m3 == 0 and self.m4 == 1

    def __matmul__(self, other: "LocalOperator") -> "LocalOperator":
        a1, a2, a3, a4 = self
        b1, b2, b3, b4 = other
        return LocalOperator(a1 * b1 + a2 * b3, a1 * b2 + a2 * b4, a3 * b1 + a4 * b3, a3 * b2 + a4 * b4)

    def matrix(self) -> np.ndarray:
        return np.array([[complex(self.m1), complex(self.m2)], [complex(self.m3), complex(self.m4)]])


class LocalOperation(tuple):
    """A tuple of :class:`LocalOperator`, one per qubit (A first)."""

    def __new__(cls, ops: Iterable[LocalOperator]):
        ops = tuple(op if isinstance(op, LocalOperator) else LocalOperator.of(*op) for op in ops)
        return super().__new__(cls, ops)

    @classmethod
    def identity(cls, n: int, exact: bool = True) -> "LocalOperation":
        return cls(LocalOperator.identity(exact) for _ in range(n))

    @property
    def exact(self) -> bool:
        return all(op.exact for op in self)

    def dets(self) -> list:
        return [op.det() for op in self]

    def compose(self, other: "LocalOperation") -> "LocalOperation":
        """Slotwise product ``self[k] @ other[k]`` (apply ``other`` first)."""
        if len(self) != len(other):
            raise ValueError("operations act on different qubit counts")
        return LocalOperation(a @ b for a, b in zip(self, other))

    def replace(self, slot: int, op: LocalOperator) -> "LocalOperation":
        ops = list(self)
        ops[slot] = op
        return LocalOperation(ops)

    def __repr__(self):
        return f"LocalOperation({list(self)!r})"


def _as_operation(L) -> LocalOperation:
    return L if isinstance(L, LocalOperation) else LocalOperation(L)


def _all_real(values) -> bool:
    return all(not v.im for v in values)


def _apply_exact(n: int, amps: Sequence[GaussianRational], ops: LocalOperation) -> list:
    real = _all_real(amps) and all(_all_real(op) for op in ops)
    if real:
        out = [a.re for a in amps]
        mats = [tuple(m.re for m in op) for op in ops]
    else:
        out = list(amps)
        mats = [tuple(op) for op in ops]
    dim = 1 << n
    for q, (m1, m2, m3, m4) in enumerate(mats):
        if m1 == 1 and m2 == 0 and m3 == 0 and m4 == 1:
            continue
        bit = 1 << (n - 1 - q)
        new = list(out)
        for i in range(dim):
            if i & bit:
                continue
            x0, x1 = out[i], out[i | bit]
            new[i] = m1 * x0 + m2 * x1
            new[i | bit] = m3 * x0 + m4 * x1
        out = new
    if real:
        return [GaussianRational._new(x, Rational(0)) for x in out]
    return out


def apply_local(s: PureState, L) -> PureState:
    """Return ``(L[0] (x) L[1] (x) ... ) s``.

    Exact states with exact operators stay exact (the root is unchanged);
    otherwise the result is floating.  Singular operators are rejected.
    """
    L = _as_operation(L)
    if len(L) != s.n:
        raise ValueError(f"operation has {len(L)} operators for a {s.n}-qubit state")
    for k, op in enumerate(L):
        d = op.det()
        if not d:
            raise ValueError(f"operator {k} is singular")
    if s.exact and L.exact:
        return PureState(s.n, tuple(_apply_exact(s.n, s.amps, L)), s.root)
    psi = s.vector().reshape((2,) * s.n)
    for q, op in enumerate(L):
        if op.is_identity():
            continue
        psi = np.moveaxis(np.tensordot(op.matrix(), psi, axes=([1], [q])), 0, q)
    return PureState(s.n, tuple(psi.reshape(-1).tolist()))


def _check_perm(perm, n: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"invalid permutation {perm!r} of {n} qubits")
    return perm


def permute_qubits(s: PureState, perm: Sequence[int]) -> PureState:
    """Relabel qubits: old qubit ``q`` becomes qubit ``perm[q]``.

    Equivalently, bit ``k`` (counted from the most significant end) of the
    new index equals bit ``perm^-1(k)`` of the old one.
    """
    perm = _check_perm(perm, s.n)
    n = s.n
    new = [None] * s.dim
    for i, a in enumerate(s.amps):
        j = 0
        for q in range(n):
            if i >> (n - 1 - q) & 1:
                j |= 1 << (n - 1 - perm[q])
        new[j] = a
    return PureState(n, tuple(new), s.root)


def permute_operation(L, perm: Sequence[int]) -> LocalOperation:
    """Move operator ``L[q]`` to slot ``perm[q]``, matching :func:`permute_qubits`."""
    L = _as_operation(L)
    perm = _check_perm(perm, len(L))
    ops = [None] * len(L)
    for q, op in enumerate(L):
        ops[perm[q]] = op
    return LocalOperation(ops)


def swap_qubits(s: PureState, a: int, b: int) -> PureState:
    perm = list(range(s.n))
    perm[a], perm[b] = b, a
    return permute_qubits(s, perm)


# ---------------------------------------------------------------------------
# sampling


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_invertible(seed=None, det_min: float = 0.1) -> LocalOperator:
    """Floating operator with entries uniform in ``[-1,1] + i[-1,1]``.

    Rejection sampling until ``|det| >= det_min``; deterministic for a fixed
    seed.  ``seed`` may also be a :class:`numpy.random.Generator`.
    """
    if not det_min > 0:
        raise ValueError("det_min must be positive")
    rng = _rng(seed)
    while True:
        x = rng.uniform(-1.0, 1.0, size=8)
        m = [complex(x[2 * k], x[2 * k + 1]) for k in range(4)]
        if abs(m[0] * m[3] - m[1] * m[2]) >= det_min:
            return LocalOperator(*m)


def random_local_operation(seed=None, n: int = 4, det_min: float = 0.1) -> LocalOperation:
    rng = _rng(seed)
    return LocalOperation(random_invertible(rng, det_min) for _ in range(n))


def _random_rational(rng, max_num: int, max_den: int):
    return Rational(int(rng.integers(-max_num, max_num + 1)), int(rng.integers(1, max_den + 1)))


def random_rational_operator(
    seed=None,
    max_num: int = 8,
    max_den: int = 8,
    gaussian: bool = False,
    zero: Iterable[int] = (),
) -> LocalOperator:
    """Exact operator with small rational entries, rejected while singular.

    ``zero`` lists entry positions (1..4, row-major) forced to zero, which is
    how targeted antecedents are produced.  With ``gaussian`` the entries get
    independent imaginary parts drawn the same way.
    """
    rng = _rng(seed)
    zero = set(zero)
    if zero in ({1, 2}, {3, 4}, {1, 3}, {2, 4}) or len(zero) > 2:
        raise ValueError(f"zero pattern {sorted(zero)} forces a singular operator")
    while True:
        m = []
        for k in range(1, 5):
            re = _random_rational(rng, max_num, max_den)
            im = _random_rational(rng, max_num, max_den) if gaussian else Rational(0)
            m.append(GaussianRational(0) if k in zero else GaussianRational._new(re, im))
        op = LocalOperator(*m)
        if op.det():
            return op


def random_rational_state(seed=None, n: int = 4, max_num: int = 8, max_den: int = 8,
                          gaussian: bool = True) -> PureState:
    """Exact state with small (Gaussian-)rational amplitudes."""
    rng = _rng(seed)
    while True:
        amps = []
        for _ in range(1 << n):
            re = _random_rational(rng, max_num, max_den)
            im = _random_rational(rng, max_num, max_den) if gaussian else Rational(0)
            amps.append(GaussianRational._new(re, im))
        if any(amps):
            return PureState(n, tuple(amps))
