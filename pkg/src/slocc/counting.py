"""Census of degenerate SLOCC classes of n qubits.

A degenerate class splits the n qubits into k >= 2 groups, each truly
entangled.  Summing over the partitions r_1 <= ... <= r_k of n,

    d(n) = sum  n! / (r_1! ... r_k!) * t(r_1) ... t(r_k) / (s_1! ... s_l!)

where t(m) counts the true classes of m qubits and s_j are the
multiplicities of repeated part sizes.  t(1) = t(2) = 1 and t(3) = 2 are
built in; t(m) for m >= 4 stays symbolic unless supplied.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

__all__ = ["Partition", "ClassCount", "KNOWN_T", "partitions", "partition_term", "degenerate_count"]

# t(1): a lone qubit; t(2): only the two-qubit GHZ class; t(3): GHZ and W
KNOWN_T = {1: 1, 2: 1, 3: 2}


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        if len(self.parts) < 2 or any(p < 1 for p in self.parts) or list(self.parts) != sorted(self.parts):
            raise ValueError(f"not a partition with >= 2 non-decreasing parts: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def multiplicities(self) -> tuple:
        return tuple(Counter(self.parts)[v] for v in sorted(set(self.parts)))

    def ways(self) -> int:
        """n!/(r_1!..r_k!) / (s_1!..s_l!): unordered groupings of labelled qubits."""
        num = math.factorial(self.n)
        den = math.prod(math.factorial(r) for r in self.parts)
        den *= math.prod(math.factorial(s) for s in self.multiplicities)
        q, rem = divmod(num, den)
        assert rem == 0
        return q

    def __str__(self):
        return "+".join(map(str, self.parts))


def _partitions(n: int, smallest: int):
    # non-decreasing partitions of n with every part >= smallest, lexicographic
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` into at least two parts, in lexicographic
    order of their non-decreasing part tuples."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return [Partition(p) for p in _partitions(n, 1) if len(p) >= 2]


@dataclass(frozen=True)
class ClassCount:
    """``constant + sum coeffs[mono] * prod t(m) for m in mono``.

    Keys of ``coeffs`` are non-decreasing tuples of unknown sizes m >= 4, so
    ``(4,)`` is t(4) and ``(4, 4)`` is t(4)^2.
    """

    constant: int = 0
    coeffs: Mapping = field(default_factory=dict)

    def coefficient(self, m: int) -> int:
        """Coefficient of the linear term t(m)."""
        return self.coeffs.get((m,), 0)

    def is_integer(self) -> bool:
        return not self.coeffs

    def evaluate(self, t: Mapping[int, int]) -> int:
        total = self.constant
        for mono, c in self.coeffs.items():
            missing = [m for m in mono if m not in t]
            if missing:
                raise KeyError(f"t({missing[0]}) not supplied")
            total += c * math.prod(t[m] for m in mono)
        return total

    def __str__(self):
        pieces = []
        for mono in sorted(self.coeffs, key=lambda mo: (len(mo), mo), reverse=True):
            powers = Counter(mono)
            factor = "*".join(f"t({m})" + (f"^{e}" if e > 1 else "") for m, e in sorted(powers.items(), reverse=True))
            pieces.append(f"{self.coeffs[mono]}*{factor}")
        if self.constant or not pieces:
            pieces.append(str(self.constant))
        return " + ".join(pieces)


def _t_values(known_t: Optional[Mapping[int, int]]) -> dict:
    t = dict(KNOWN_T)
    for m, v in (known_t or {}).items():
        m, v = int(m), int(v)
        if m < 1 or v < 0:
            raise ValueError(f"bad value t({m}) = {v}")
        if m in KNOWN_T and KNOWN_T[m] != v:
            raise ValueError(f"t({m}) is fixed at {KNOWN_T[m]}")
        t[m] = v
    return t


def partition_term(p: Partition, known_t: Optional[Mapping[int, int]] = None) -> ClassCount:
    """Contribution of one partition, symbolic in any unknown t(m)."""
    t = _t_values(known_t)
    coeff = p.ways()
    unknown = []
    for r in p.parts:
        if r in t:
            coeff *= t[r]
        else:
            unknown.append(r)
    if not unknown:
        return ClassCount(coeff, {})
    return ClassCount(0, {tuple(unknown): coeff} if coeff else {})


def degenerate_count(n: int, known_t: Optional[Mapping[int, int]] = None,
                     symbolic: bool = True) -> Union[ClassCount, int]:
    """Number of degenerate classes of ``n`` qubits.

    Symbolic mode returns a :class:`ClassCount` with the unknown t(m) kept
    as variables; numeric mode returns an ``int`` and needs every t(m) that
    occurs to be supplied in ``known_t``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    constant = 0
    coeffs: dict = {}
    for p in partitions(n):
        term = partition_term(p, known_t)
        constant += term.constant
        for mono, c in term.coeffs.items():
            coeffs[mono] = coeffs.get(mono, 0) + c
    count = ClassCount(constant, coeffs)
    if symbolic:
        return count
    if coeffs:
        missing = sorted({m for mono in coeffs for m in mono})
        raise ValueError("numeric count needs " + ", ".join(f"t({m})" for m in missing))
    return constant
