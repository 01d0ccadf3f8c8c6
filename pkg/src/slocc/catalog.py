"""Named four-qubit states and the encoded class properties.

Class names are romanized: ``kappa4`` for the Greek kappa class and so on.
``phi4`` and ``varphi4`` are the two phi variants.  :data:`DISPLAY` maps each
identifier to its Greek rendering.

Representatives are stored unnormalized with integer amplitudes; pass
``normalized=True`` to :func:`representative` for the unit-norm version
(still exact, with a ``1/sqrt(k)`` factor).
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping

from .exact import GaussianRational, Rational, as_exact, is_exact_scalar
from .state import PureState, make_state, normalize, state_from_terms

__all__ = [
    "NamedState",
    "ClassProperties",
    "TRUE_CLASSES",
    "DEGENERATE_CLASSES",
    "DISPLAY",
    "REPRESENTATIVE_PATTERNS",
    "REPRESENTATIVE_PATTERN_ERRATA",
    "CLASS_ERRATA",
    "PAIR_D_PATTERNS",
    "RELATIONS",
    "representative",
    "representatives",
    "degenerate_state",
    "degenerate_representative",
    "family_state",
    "conjecture_state",
    "class_properties",
    "all_class_names",
    "lookup_state",
]

# index -> integer amplitude, before normalization
_REPS: dict[str, dict[int, int]] = {
    "GHZ": {0: 1, 15: 1},
    "W": {1: 1, 2: 1, 4: 1, 8: 1},
    "C4": {3: 1, 5: 1, 6: 1, 9: 1, 10: 1, 12: 1},
    "kappa4": {0: 1, 3: 1, 10: 1, 15: -1},
    "E4": {0: 1, 5: 1, 9: 1, 15: -1},
    "L4": {0: 1, 3: 1, 9: 1, 15: -1},
    "H4": {3: 1, 6: 1, 12: 1},
    "lambda4": {5: 1, 6: 1, 10: 1},
    "M4": {3: 1, 5: 1, 12: 1},
    "pi4": {0: 1, 3: 1, 5: 1, 6: 1, 10: 1, 15: 1},
    "theta4": {0: 1, 5: 1, 6: 1, 10: 1, 12: 1, 15: 1},
    "sigma4": {0: 1, 3: 1, 9: 1, 10: 1, 12: 1, 15: 1},
    "rho4": {0: 1, 3: 1, 6: 1, 10: 1, 12: 1, 15: 1},
    "xi4": {0: 1, 6: 1, 9: 1, 10: 1, 12: 1, 15: 1},
    "epsilon4": {0: 1, 3: 1, 6: 1, 9: 1, 10: 1, 15: 1},
    "chi4": {0: 1, 3: 1, 6: 1, 10: 1, 12: 1, 15: -1},
    "psi4": {0: 1, 5: 1, 10: 1, 15: -1},
    "phi4": {0: 1, 3: 1, 12: 1, 15: -1},
    "mu4": {0: 1, 6: 1, 9: 1, 15: -1},
    "varphi4": {1: 1, 6: 1, 11: 1},
    "vartheta4": {2: 1, 5: 1, 11: 1},
    "tau4": {1: 1, 7: 1, 10: 1},
    "varrho4": {2: 1, 7: 1, 9: 1},
    "zeta4": {0: 1, 11: 1, 12: 1},
    "iota4": {0: 1, 3: 1, 13: 1},
    "upsilon4": {2: 1, 5: 1, 9: 1, 11: 1},
    "omega4": {0: 1, 5: 1, 8: 1, 14: 1},
    "varpi4": {2: 1, 5: 1, 8: 1, 12: 1},
}

# classes with IV != 0 first, then IV == 0
TRUE_CLASSES = (
    "GHZ", "C4", "kappa4", "E4", "L4", "H4", "lambda4", "M4",
    "pi4", "theta4", "sigma4", "rho4", "xi4", "epsilon4",
    "W", "chi4", "upsilon4", "varpi4", "psi4", "phi4", "mu4",
    "varphi4", "zeta4", "vartheta4", "tau4", "varrho4", "iota4", "omega4",
)

DISPLAY = {
    "GHZ": "|GHZ>", "W": "|W>", "C4": "|C₄>", "kappa4": "|κ₄>", "E4": "|E₄>",
    "L4": "|L₄>", "H4": "|H₄>", "lambda4": "|λ₄>", "M4": "|M₄>", "pi4": "|π₄>",
    "theta4": "|θ₄>", "sigma4": "|σ₄>", "rho4": "|ρ₄>", "xi4": "|ξ₄>",
    "epsilon4": "|ε₄>", "chi4": "|χ₄>", "psi4": "|ψ₄>", "phi4": "|φ₄>",
    "mu4": "|μ₄>", "varphi4": "|φ'₄>", "vartheta4": "|ϑ₄>", "tau4": "|τ₄>",
    "varrho4": "|ϱ₄>", "zeta4": "|ζ₄>", "iota4": "|ι₄>", "upsilon4": "|υ₄>",
    "omega4": "|ω₄>", "varpi4": "|ϖ₄>",
    "GHZ123xq4": "|GHZ>_ABC ⊗ (s|0>+t|1>)_D",
    "GHZ124xq3": "|GHZ>_ABD ⊗ (s|0>+t|1>)_C",
    "GHZ134xq2": "|GHZ>_ACD ⊗ (s|0>+t|1>)_B",
    "q1xGHZ234": "(s|0>+t|1>)_A ⊗ |GHZ>_BCD",
    "W123xq4": "|W>_ABC ⊗ (s|0>+t|1>)_D",
    "W124xq3": "|W>_ABD ⊗ (s|0>+t|1>)_C",
    "W134xq2": "|W>_ACD ⊗ (s|0>+t|1>)_B",
    "q1xW234": "(s|0>+t|1>)_A ⊗ |W>_BCD",
    "GHZ12xGHZ34": "|GHZ>_AB ⊗ |GHZ>_CD",
    "GHZ13xGHZ24": "|GHZ>_AC ⊗ |GHZ>_BD",
    "GHZ14xGHZ23": "|GHZ>_AD ⊗ |GHZ>_BC",
    "GHZ12xq3xq4": "|GHZ>_AB ⊗ qubit_C ⊗ qubit_D",
    "GHZ13xq2xq4": "|GHZ>_AC ⊗ qubit_B ⊗ qubit_D",
    "GHZ14xq2xq3": "|GHZ>_AD ⊗ qubit_B ⊗ qubit_C",
    "GHZ23xq1xq4": "|GHZ>_BC ⊗ qubit_A ⊗ qubit_D",
    "GHZ24xq1xq3": "|GHZ>_BD ⊗ qubit_A ⊗ qubit_C",
    "GHZ34xq1xq2": "|GHZ>_CD ⊗ qubit_A ⊗ qubit_B",
    "product": "qubit_A ⊗ qubit_B ⊗ qubit_C ⊗ qubit_D",
}


@dataclass(frozen=True)
class NamedState:
    name: str
    state: PureState
    source: str
    display: str = ""


def _exact_state(amps: Mapping[int, object], n: int = 4) -> PureState:
    return make_state(n, sorted(amps.items()))


def representative(name: str, normalized: bool = False) -> NamedState:
    """Representative state of one of the 28 true entanglement classes."""
    if name not in _REPS:
        raise KeyError(f"unknown class {name!r}")
    s = _exact_state(_REPS[name])
    if normalized:
        s = normalize(s)
    return NamedState(name, s, "true-class representative", DISPLAY[name])


def representatives(normalized: bool = False) -> list[NamedState]:
    return [representative(name, normalized) for name in TRUE_CLASSES]


# ---------------------------------------------------------------------------
# degenerate classes

_GHZ3 = {0: 1, 7: 1}
_W3 = {1: 1, 2: 1, 4: 1}
_GHZ2 = {0: 1, 3: 1}

# kind -> list of (qubits, factor); a factor of None is the free qubit s|0>+t|1>
_DEGENERATE_LAYOUT = {
    "GHZ123xq4": [((0, 1, 2), _GHZ3), ((3,), None)],
    "GHZ124xq3": [((0, 1, 3), _GHZ3), ((2,), None)],
    "GHZ134xq2": [((0, 2, 3), _GHZ3), ((1,), None)],
    "q1xGHZ234": [((0,), None), ((1, 2, 3), _GHZ3)],
    "W123xq4": [((0, 1, 2), _W3), ((3,), None)],
    "W124xq3": [((0, 1, 3), _W3), ((2,), None)],
    "W134xq2": [((0, 2, 3), _W3), ((1,), None)],
    "q1xW234": [((0,), None), ((1, 2, 3), _W3)],
    "GHZ12xGHZ34": [((0, 1), _GHZ2), ((2, 3), _GHZ2)],
    "GHZ13xGHZ24": [((0, 2), _GHZ2), ((1, 3), _GHZ2)],
    "GHZ14xGHZ23": [((0, 3), _GHZ2), ((1, 2), _GHZ2)],
    "GHZ12xq3xq4": [((0, 1), _GHZ2), ((2,), None), ((3,), None)],
    "GHZ13xq2xq4": [((0, 2), _GHZ2), ((1,), None), ((3,), None)],
    "GHZ14xq2xq3": [((0, 3), _GHZ2), ((1,), None), ((2,), None)],
    "GHZ23xq1xq4": [((1, 2), _GHZ2), ((0,), None), ((3,), None)],
    "GHZ24xq1xq3": [((1, 3), _GHZ2), ((0,), None), ((2,), None)],
    "GHZ34xq1xq2": [((2, 3), _GHZ2), ((0,), None), ((1,), None)],
    "product": [((0,), None), ((1,), None), ((2,), None), ((3,), None)],
}

DEGENERATE_CLASSES = tuple(_DEGENERATE_LAYOUT)


def _tensor(layout, s, t, n: int = 4) -> PureState:
    partial = [({}, 1)]
    for qubits, factor in layout:
        local = factor if factor is not None else {0: s, 1: t}
        grown = []
        for bits, amp in partial:
            for li, v in local.items():
                if not v:
                    continue
                b = dict(bits)
                for pos, q in enumerate(qubits):
                    b[q] = (li >> (len(qubits) - 1 - pos)) & 1
                grown.append((b, amp * v))
        partial = grown
    entries = [(sum(bit << (n - 1 - q) for q, bit in bits.items()), amp) for bits, amp in partial]
    return make_state(n, entries)


def degenerate_state(kind: str, s=1, t=0) -> PureState:
    """Product state of the given degenerate kind.

    Every free single-qubit factor is ``s|0> + t|1>``; ``(s, t)`` must not be
    ``(0, 0)`` when the kind has such a factor.
    """
    if kind not in _DEGENERATE_LAYOUT:
        raise KeyError(f"unknown degenerate class {kind!r}")
    layout = _DEGENERATE_LAYOUT[kind]
    if any(f is None for _, f in layout) and not s and not t:
        raise ValueError("qubit factor s|0>+t|1> is zero")
    return _tensor(layout, s, t)


def degenerate_representative(kind: str) -> NamedState:
    """The degenerate state at ``(s, t) = (1, 1)``."""
    return NamedState(kind, degenerate_state(kind, 1, 1), "degenerate product", DISPLAY[kind])


# ---------------------------------------------------------------------------
# families and the extra state outside the 28 classes

FAMILIES = ("L_ab3", "L_a4", "L_a2_03+1")


def family_state(family: str, a=0, b=0) -> PureState:
    """Representative of a parameterised family (parameters a, b).

    ``L_ab3``: a(|0000>+|1111>) + (a+b)/2 (|0101>+|1010>) + (a-b)/2 (|0110>+|1001>)
    + i/sqrt(2) (|0001>+|0010>+|0111>+|1011>).
    ``L_a4``: a(|0000>+|0101>+|1010>+|1111>) + i|0001> + |0110> - i|1011>.
    ``L_a2_03+1``: a(|0000>+|1111>) + |0011>+|0101>+|0110>.

    Exact parameters give an exact state whenever the coefficients share one
    square-root factor (``L_ab3`` only at a = b = 0); otherwise floating.
    """
    if is_exact_scalar(a) and is_exact_scalar(b):
        a, b = as_exact(a), as_exact(b)
        one, i_, half = GaussianRational(1), GaussianRational(0, 1), Rational(1, 2)
    else:
        a, b = complex(a), complex(b)
        one, i_, half = 1.0, 1j, 0.5
    if family == "L_ab3":
        terms = [(0, a, 1), (15, a, 1), (5, (a + b) * half, 1), (10, (a + b) * half, 1),
                 (6, (a - b) * half, 1), (9, (a - b) * half, 1)]
        terms += [(k, i_, Fraction(1, 2)) for k in (1, 2, 7, 11)]
    elif family == "L_a4":
        terms = [(k, a, 1) for k in (0, 5, 10, 15)] + [(1, i_, 1), (6, one, 1), (11, -i_, 1)]
    elif family == "L_a2_03+1":
        terms = [(0, a, 1), (15, a, 1)] + [(k, one, 1) for k in (3, 5, 6)]
    else:
        raise KeyError(f"unknown family {family!r}; expected one of {FAMILIES}")
    # zero coefficients must not influence the carrier choice
    return state_from_terms(4, [t for t in terms if t[1]])


def conjecture_state() -> NamedState:
    """(sqrt(2)|15> + |8> + |4> + |2> + |1>)/sqrt(6), in floating point.

    It has IV = 0 and all four pair sums |F1|+|F2|, |F3|+|F4|, |F5|+|F6|,
    |F7|+|F8| nonzero, a combination none of the 28 classes allows.
    """
    s = state_from_terms(4, [(15, 1, 2), (8, 1, 1), (4, 1, 1), (2, 1, 1), (1, 1, 1)])
    return NamedState("conjecture", normalize(s), "state outside the 28 classes", "|Ψ_c>")


# ---------------------------------------------------------------------------
# class properties

RELATIONS = ("F9=F10", "F1F2=F9^2", "F3F4=F9^2")


@dataclass(frozen=True)
class ClassProperties:
    """Class-level zero pattern.

    ``d_flags`` entries are ``"zero"`` (vanishes on the whole class) or
    ``"opt"`` (vanishes for some states of the class and not for others).
    ``f_nonzero_pairs`` lists pairs (i, j) with |F_i|+|F_j| != 0 on the class;
    ``f_nonzero`` lists indices that are individually nonzero.
    """

    name: str
    kind: str
    iv_zero: bool
    f_positive: bool
    d_flags: tuple
    f_zero_set: frozenset = frozenset()
    f_nonzero_pairs: tuple = ()
    f_nonzero: frozenset = frozenset()
    relations: frozenset = frozenset()
    conditionals: frozenset = frozenset()

    def __post_init__(self):
        if len(self.d_flags) != 3 or any(f not in ("zero", "opt") for f in self.d_flags):
            raise ValueError(f"{self.name}: bad d_flags {self.d_flags!r}")
        bad = set(self.relations) - set(RELATIONS)
        if bad:
            raise ValueError(f"{self.name}: unknown relations {bad}")
        for i, j in self.f_nonzero_pairs:
            if i in self.f_zero_set and j in self.f_zero_set:
                raise ValueError(f"{self.name}: pair ({i},{j}) is forced zero")
            if i in self.f_zero_set or j in self.f_zero_set:
                raise ValueError(f"{self.name}: pair ({i},{j}) overlaps the zero set")
        if self.f_nonzero & self.f_zero_set:
            raise ValueError(f"{self.name}: index both zero and nonzero")
        if self.f_zero_set >= frozenset(range(1, 11)) and self.f_positive:
            raise ValueError(f"{self.name}: F > 0 with every F_i zero")

    def d_opt(self) -> list[int]:
        return [k + 1 for k, f in enumerate(self.d_flags) if f == "opt"]

    def d_zero(self) -> list[int]:
        return [k + 1 for k, f in enumerate(self.d_flags) if f == "zero"]


def _p(name, kind, iv_zero, f_positive, d, zero=(), pairs=(), nonzero=(), rel=(), cond=()):
    flags = tuple("opt" if c == "o" else "zero" for c in d)
    return ClassProperties(
        name=name, kind=kind, iv_zero=iv_zero, f_positive=f_positive, d_flags=flags,
        f_zero_set=frozenset(zero), f_nonzero_pairs=tuple(pairs), f_nonzero=frozenset(nonzero),
        relations=frozenset(rel), conditionals=frozenset(cond),
    )


_ALL = range(1, 11)
_T = "true"
_D = "degenerate"

# d string: one character per D_i, "o" = opt, "z" = forced zero
_PROPS = {p.name: p for p in [
    # IV != 0, F > 0
    _p("GHZ", _T, False, True, "zzz", cond=[0]),
    _p("C4", _T, False, True, "ooo", cond=[4]),
    _p("kappa4", _T, False, True, "ooz", cond=[0]),
    _p("E4", _T, False, True, "ozo", cond=[0]),
    _p("L4", _T, False, True, "zoo", cond=[0]),
    _p("H4", _T, False, True, "ozz", cond=[0]),
    _p("lambda4", _T, False, True, "zoz", cond=[0]),
    _p("M4", _T, False, True, "zzo", cond=[0]),
    _p("pi4", _T, False, True, "ozz", zero=[3, 4, 7, 8], pairs=[(1, 2), (5, 6)], cond=[2]),
    _p("theta4", _T, False, True, "ozz", zero=[1, 2, 5, 6], pairs=[(3, 4), (7, 8)], cond=[3]),
    _p("sigma4", _T, False, True, "zoz", zero=[5, 6, 7, 8], pairs=[(1, 2), (3, 4)], cond=[1]),
    _p("rho4", _T, False, True, "zoz", zero=[1, 2, 3, 4, 9, 10], pairs=[(5, 6), (7, 8)]),
    _p("xi4", _T, False, True, "zzo", zero=[3, 4, 5, 6], pairs=[(1, 2), (7, 8)], cond=[2]),
    _p("epsilon4", _T, False, True, "zzo", zero=[1, 2, 7, 8], pairs=[(3, 4), (5, 6)], cond=[3]),
    # IV == 0
    _p("W", _T, True, False, "zzz", zero=_ALL),
    _p("chi4", _T, True, True, "ooo", pairs=[(5, 6), (7, 8)], cond=[0]),
    _p("upsilon4", _T, True, True, "zoo", zero=[5, 6], pairs=[(1, 2), (3, 4), (7, 8)], cond=[1]),
    _p("varpi4", _T, True, True, "ozo", zero=[3, 4], pairs=[(1, 2), (5, 6), (7, 8)],
       rel=["F9=F10", "F1F2=F9^2"]),
    _p("psi4", _T, True, True, "ozz", rel=["F9=F10"], cond=[5]),
    _p("phi4", _T, True, True, "zoz", cond=[0]),
    _p("mu4", _T, True, True, "zzo", rel=["F9=F10"], cond=[5]),
    _p("varphi4", _T, True, True, "ozz", zero=[3, 4, 7, 8], pairs=[(1, 2), (5, 6)],
       rel=["F9=F10", "F1F2=F9^2"]),
    _p("zeta4", _T, True, True, "zoz", zero=[5, 6, 7, 8], pairs=[(1, 2), (3, 4)], cond=[1]),
    _p("vartheta4", _T, True, True, "zzo", zero=[3, 4, 5, 6], pairs=[(1, 2), (7, 8)],
       rel=["F9=F10", "F1F2=F9^2"]),
    _p("tau4", _T, True, True, "zzz", zero=[1, 2, 7, 8], pairs=[(3, 4), (5, 6)],
       rel=["F9=F10", "F3F4=F9^2"]),
    _p("varrho4", _T, True, True, "zzz", zero=[1, 2, 5, 6], pairs=[(3, 4), (7, 8)],
       rel=["F9=F10", "F3F4=F9^2"]),
    _p("iota4", _T, True, True, "zzz", zero=[1, 2, 3, 4, 9, 10], pairs=[(5, 6), (7, 8)]),
    _p("omega4", _T, True, True, "zzz", zero=[1, 2], pairs=[(3, 4), (5, 6), (7, 8)],
       rel=["F9=F10", "F3F4=F9^2"]),
    # degenerate classes
    _p("GHZ123xq4", _D, True, True, "zzz", zero=[1, 2, 3, 4, 5, 6, 9, 10], pairs=[(7, 8)]),
    _p("GHZ124xq3", _D, True, True, "zzz", zero=[1, 2, 3, 4, 7, 8, 9, 10], pairs=[(5, 6)]),
    _p("GHZ134xq2", _D, True, True, "zzz", zero=[1, 2, 5, 6, 7, 8], pairs=[(3, 4)],
       rel=["F9=F10", "F3F4=F9^2"]),
    _p("q1xGHZ234", _D, True, True, "zzz", zero=[3, 4, 5, 6, 7, 8], pairs=[(1, 2)],
       rel=["F9=F10", "F1F2=F9^2"]),
    *[_p(k, _D, True, False, "zzz", zero=_ALL) for k in ("W123xq4", "W124xq3", "W134xq2", "q1xW234")],
    _p("GHZ12xGHZ34", _D, False, False, "zoz", zero=_ALL),
    _p("GHZ13xGHZ24", _D, False, True, "ozz", zero=range(1, 9), nonzero=[9, 10], rel=["F9=F10"]),
    _p("GHZ14xGHZ23", _D, False, True, "zzo", zero=range(1, 9), nonzero=[9, 10], rel=["F9=F10"]),
    *[_p(k, _D, True, False, "zzz", zero=_ALL) for k in (
        "GHZ12xq3xq4", "GHZ13xq2xq4", "GHZ14xq2xq3", "GHZ23xq1xq4", "GHZ24xq1xq3",
        "GHZ34xq1xq2", "product")],
]}


# Class-level claims that fail on explicit orbit points.  chi4: with
# gamma = [[1, 1], [1, -1]] both F5 and F6 vanish, and with
# delta = [[1, i], [1, -i]] both F7 and F8 vanish, so neither pair is
# nonzero on the whole class.
CLASS_ERRATA = {
    "chi4": replace(_PROPS["chi4"], f_nonzero_pairs=()),
}


def class_properties(name: str, corrected: bool = False) -> ClassProperties:
    """Encoded properties of ``name``; ``corrected`` swaps in
    :data:`CLASS_ERRATA` where a printed claim has a counterexample."""
    if name not in _PROPS:
        raise KeyError(f"unknown class {name!r}")
    if corrected and name in CLASS_ERRATA:
        return CLASS_ERRATA[name]
    return _PROPS[name]


def all_class_names() -> tuple[str, ...]:
    return TRUE_CLASSES + DEGENERATE_CLASSES


# State-level pattern of each representative: (D1, D2, D3 nonzero?), nonzero
# F indices.  Transcribed as published; see REPRESENTATIVE_PATTERN_ERRATA.
REPRESENTATIVE_PATTERNS = {
    "GHZ": ((False, False, False), frozenset({9})),
    "C4": ((True, True, True), frozenset({9})),
    "kappa4": ((False, False, False), frozenset({9})),
    "E4": ((False, False, False), frozenset({9})),
    "L4": ((False, False, False), frozenset({9})),
    "H4": ((False, False, False), frozenset({9})),
    "lambda4": ((False, True, False), frozenset({10})),
    "M4": ((False, False, False), frozenset({9})),
    "pi4": ((True, False, False), frozenset({1, 6, 9, 10})),
    "theta4": ((True, False, False), frozenset({4, 7, 9, 10})),
    "sigma4": ((False, True, False), frozenset({2, 3})),
    "rho4": ((False, True, False), frozenset({6, 7})),
    "xi4": ((False, False, True), frozenset({2, 7, 9, 10})),
    "epsilon4": ((False, False, True), frozenset({3, 6, 9, 10})),
    "W": ((False, False, False), frozenset()),
    "chi4": ((False, True, False), frozenset({6, 7, 9})),
    "upsilon4": ((False, False, False), frozenset({1, 3, 8})),
    "varpi4": ((False, False, False), frozenset({1, 5, 7})),
    "psi4": ((True, False, False), frozenset({3, 4, 9, 10})),
    "phi4": ((False, True, False), frozenset({9})),
    "mu4": ((False, False, True), frozenset({9, 10})),
    "varphi4": ((False, False, False), frozenset({1, 6})),
    "zeta4": ((False, False, False), frozenset({2, 3})),
    "vartheta4": ((False, False, False), frozenset({1, 8})),
    "tau4": ((False, False, False), frozenset({3, 6})),
    "varrho4": ((False, False, False), frozenset({3, 8})),
    "iota4": ((False, False, False), frozenset({5, 8})),
    "omega4": ((False, False, False), frozenset({4, 5, 7})),
}

# Rows of REPRESENTATIVE_PATTERNS that disagree with direct evaluation of the representative,
# with the evaluated pattern.  lambda4: D2 of (|5>+|6>+|10>)/sqrt(3) is 0
# since every D2 monomial needs two of a0..a3 or a12..a15.  psi4: F3 and F4
# of (|0>+|5>+|10>-|15>)/2 vanish identically.
REPRESENTATIVE_PATTERN_ERRATA = {
    "lambda4": ((False, False, False), frozenset({10})),
    "psi4": ((True, False, False), frozenset({9, 10})),
}

# D pattern (nonzero?) of the three GHZ-pair products at (s, t) = (1, 1).
PAIR_D_PATTERNS = {
    "GHZ12xGHZ34": (False, True, False),
    "GHZ13xGHZ24": (True, False, False),
    "GHZ14xGHZ23": (False, False, True),
}


def lookup_state(name: str, normalized: bool = False) -> NamedState:
    """Representative of any true or degenerate class by name."""
    if name in _REPS:
        return representative(name, normalized)
    if name in _DEGENERATE_LAYOUT:
        ns = degenerate_representative(name)
        return NamedState(ns.name, normalize(ns.state) if normalized else ns.state, ns.source, ns.display)
    if name == "conjecture":
        return conjecture_state()
    raise KeyError(f"unknown state name {name!r}")
