"""Randomized verification along SLOCC orbits.

Every check is driven by a seed; sample ``k`` of a run with seed ``S``
draws from ``numpy.random.default_rng(S + k)``, so runs are reproducible
and samples are independent of one another.

Exact orbit samples use generic small rationals for even ``k``, integer
lattice points in [-1, 1] for ``k = 1 mod 4`` and Gaussian integers with
parts in [-1, 1] for ``k = 3 mod 4``.  Generic samples keep "opt"
quantities nonzero; the lattice ones hit the accidental zeros that serve as
vanishing witnesses and as counterexamples to overly strong claims.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

import numpy as np

from .catalog import (
    DEGENERATE_CLASSES,
    REPRESENTATIVE_PATTERNS,
    REPRESENTATIVE_PATTERN_ERRATA,
    PAIR_D_PATTERNS,
    TRUE_CLASSES,
    class_properties,
    degenerate_state,
    representative,
)
from .classifier import (
    Signature,
    certify_true_entanglement,
    conditional_holds,
    distinguish_states,
    signature,
)
from .exact import Rational
from .invariants import (
    invariant_vector,
    iv,
    residual_d_semiinvariance,
    residual_f910_semiinvariance,
    residual_f_semiinvariance,
    residual_iv_covariance,
)
from .oracles import ORACLE_CLASSES, predict
from .state import (
    LocalOperation,
    LocalOperator,
    PureState,
    apply_local,
    normalize,
    random_local_operation,
    random_rational_operator,
    random_rational_state,
)

__all__ = [
    "OrbitSample",
    "OrbitSampleReport",
    "IdentityResult",
    "ST_VALUES",
    "TARGET_PATTERNS",
    "CONDITIONAL_BRANCHES",
    "IDENTITIES",
    "sample_orbit",
    "verify_class_zero_pattern",
    "verify_pair_d_patterns",
    "verify_representatives",
    "verify_conditionals",
    "closed_form_oracle",
    "verify_oracles",
    "verify_identity",
    "fuzz_distinguish",
    "fuzz_certify_degenerate",
]

# (s, t) values of the free qubit factor s|0> + t|1> in degenerate classes
ST_VALUES = (
    (1, 0), (0, 1), (1, 1), (1, -1), (2, 1),
    (1, 2), (-1, 3), (3, 2), (Rational(1, 2), 1), (2, -3),
)

# entry positions of alpha and beta forced to zero in targeted runs
_ZERO_SETS = ((), (1,), (2,), (3,), (4,), (1, 4), (2, 3))
TARGET_PATTERNS = tuple(itertools.product(_ZERO_SETS, _ZERO_SETS))

# consequent branches worth covering, per conditional
CONDITIONAL_BRANCHES = {
    0: ("F9!=0,F10=0", "F9=0,F10!=0"),
    1: ("F9=F10=0",),
    2: ("F9=F10!=0",),
    3: ("F9=F10!=0",),
    4: ("F9!=0,F10=0", "F9=0,F10!=0"),
    5: ("F9!=0",),
}


@dataclass(frozen=True)
class OrbitSample:
    index: int
    seed: int
    operation: LocalOperation
    state: PureState


@dataclass
class OrbitSampleReport:
    class_name: str
    samples: int = 0
    violations: list = field(default_factory=list)  # (seed, property, values)
    opt_witnesses: dict = field(default_factory=dict)  # "D1" -> (zero seed, nonzero seed)
    branches: dict = field(default_factory=dict)  # "#0 F9!=0,F10=0" -> hits

    @property
    def passed(self) -> bool:
        # a missing opt witness is not a violation; see missing_witnesses()
        return not self.violations

    def missing_witnesses(self) -> list[str]:
        return [k for k, (z, nz) in self.opt_witnesses.items() if z is None or nz is None]

    def lines(self) -> list[tuple[str, str, str]]:
        """(class, property, status) rows for machine-readable output."""
        rows = [(self.class_name, "samples", str(self.samples))]
        bad = {}
        for seed, prop, _ in self.violations:
            bad.setdefault(prop, seed)
        for prop, seed in bad.items():
            rows.append((self.class_name, prop, f"FAIL seed={seed}"))
        for key, (z, nz) in self.opt_witnesses.items():
            ok = z is not None and nz is not None
            rows.append((self.class_name, f"opt {key}", f"ok zero={z} nonzero={nz}" if ok else
                         f"MISSING zero={z} nonzero={nz}"))
        for key, hits in self.branches.items():
            rows.append((self.class_name, f"branch {key}", str(hits)))
        if not bad:
            rows.append((self.class_name, "violations", "none"))
        return rows


def _known(name: str):
    if name not in TRUE_CLASSES and name not in DEGENERATE_CLASSES:
        raise KeyError(f"unknown class {name!r}")


def _base_state(name: str, k: int) -> PureState:
    if name in DEGENERATE_CLASSES:
        s, t = ST_VALUES[k % len(ST_VALUES)]
        return degenerate_state(name, s, t)
    return representative(name, normalized=True).state


def _exact_operation(rng, k: int, zero_a=(), zero_b=()) -> LocalOperation:
    if k % 2 == 0:
        draw = dict(max_num=8, max_den=8)
    elif k % 4 == 1:
        draw = dict(max_num=1, max_den=1)
    else:
        draw = dict(max_num=1, max_den=1, gaussian=True)
    return LocalOperation([
        random_rational_operator(rng, zero=zero_a, **draw),
        random_rational_operator(rng, zero=zero_b, **draw),
        random_rational_operator(rng, **draw),
        random_rational_operator(rng, **draw),
    ])


def sample_orbit(name: str, n_samples: int, seed: int = 0, carrier: str = "exact") -> Iterator[OrbitSample]:
    """Yield ``n_samples`` random points ``L psi`` on the orbit of ``name``.

    Degenerate classes cycle their free-qubit factor through
    :data:`ST_VALUES`.  ``carrier`` is ``"exact"`` (rational operators) or
    ``"float"`` (complex operators with |det| >= 0.1).
    """
    _known(name)
    if carrier not in ("exact", "float"):
        raise ValueError(f"carrier must be 'exact' or 'float', not {carrier!r}")
    for k in range(n_samples):
        rng = np.random.default_rng(seed + k)
        if carrier == "exact":
            L = _exact_operation(rng, k)
        else:
            L = random_local_operation(rng, 4)
        yield OrbitSample(k, seed + k, L, apply_local(_base_state(name, k), L))


def _sig(s: PureState, carrier: str) -> Signature:
    return signature(s) if carrier == "exact" else signature(s, exact=False)


def _sig_values(s: PureState):
    v = invariant_vector(s if s.exact else normalize(s))
    return {"IV": v.iv, **{f"F{i}": x for i, x in enumerate(v.f, 1)}, **{f"D{i}": x for i, x in enumerate(v.d, 1)}}


def _pattern_violations(props, sig: Signature) -> list[str]:
    out = []
    if sig.iv_zero != props.iv_zero:
        out.append("IV=0" if props.iv_zero else "IV!=0")
    if props.f_positive == sig.f_aggregate_zero:
        out.append("F>0" if props.f_positive else "F=0")
    for i in props.d_zero():
        if not sig.d_zero(i):
            out.append(f"D{i}=0")
    for i in sorted(props.f_zero_set):
        if not sig.f_zero(i):
            out.append(f"F{i}=0")
    for i in sorted(props.f_nonzero):
        if sig.f_zero(i):
            out.append(f"F{i}!=0")
    for i, j in props.f_nonzero_pairs:
        if sig.f_zero(i) and sig.f_zero(j):
            out.append(f"|F{i}|+|F{j}|!=0")
    for r in sorted(props.relations):
        if not sig.relation(r):
            out.append(r)
    for c in sorted(props.conditionals):
        if conditional_holds(c, sig) is False:
            out.append(f"#{c}")
    return out


def verify_class_zero_pattern(name: str, n_samples: int = 500, seed: int = 0,
                              carrier: str = "exact", apply_errata: bool = False) -> OrbitSampleReport:
    """Check the encoded class-level pattern on every orbit sample and look
    for a vanishing and a non-vanishing sample of each "opt" D_i.

    The (normalized) representative counts as sample ``"rep"`` for witness
    purposes.  ``apply_errata`` checks the corrected class properties.
    """
    props = class_properties(name, apply_errata)
    report = OrbitSampleReport(name)
    witnesses = {i: [None, None] for i in props.d_opt()}

    def note(sig, label):
        for i, w in witnesses.items():
            slot = 0 if sig.d_zero(i) else 1
            if w[slot] is None:
                w[slot] = label

    note(_sig(_base_state(name, 2), "exact"), "rep")  # (s, t) = (1, 1) for degenerate classes
    for sample in sample_orbit(name, n_samples, seed, carrier):
        sig = _sig(sample.state, carrier)
        report.samples += 1
        for prop in _pattern_violations(props, sig):
            report.violations.append((sample.seed, prop, _sig_values(sample.state)))
        note(sig, sample.seed)
    report.opt_witnesses = {f"D{i}": tuple(w) for i, w in witnesses.items()}
    return report


def verify_pair_d_patterns() -> dict:
    """Observed D pattern of each GHZ-pair product at (s, t) = (1, 1) against
    the tabulated one: name -> (expected, observed)."""
    out = {}
    for name, expected in PAIR_D_PATTERNS.items():
        sig = signature(degenerate_state(name, 1, 1))
        out[name] = (expected, tuple(not z for z in sig.di_zero))
    return out


def verify_representatives(apply_errata: bool = False) -> dict:
    """Exact D flags and nonzero F indices of each representative against
    the tabulated row: name -> (expected, observed)."""
    out = {}
    for name in TRUE_CLASSES:
        expected = REPRESENTATIVE_PATTERN_ERRATA.get(name, REPRESENTATIVE_PATTERNS[name]) if apply_errata else REPRESENTATIVE_PATTERNS[name]
        sig = signature(representative(name).state)
        observed = (tuple(not z for z in sig.di_zero), frozenset(sig.nonzero_f()))
        out[name] = (expected, observed)
    return out


def _branch(k: int, sig: Signature) -> str:
    z9, z10 = sig.f_zero(9), sig.f_zero(10)
    if k in (0, 4):
        return ("F9!=0" if not z9 else "F9=0") + "," + ("F10=0" if z10 else "F10!=0")
    if k == 1:
        return "F9=F10=0" if z9 and z10 else "other"
    if k in (2, 3):
        return "F9=F10!=0" if sig.rel_f9_eq_f10 and not z9 else "other"
    return "F9!=0" if not z9 else "F9=0"


def verify_conditionals(name: str, targeted: bool = True, n_samples: int = 490,
                        seed: int = 0) -> OrbitSampleReport:
    """Assert each conditional of ``name`` wherever its antecedent holds.

    In targeted mode sample ``k`` zeroes the alpha and beta entries listed
    in ``TARGET_PATTERNS[k % 49]``, which is what forces F_1..F_4 to vanish
    along GHZ-like orbits.  ``report.branches`` counts which consequent
    branch each firing sample took.
    """
    props = class_properties(name)
    report = OrbitSampleReport(name)
    for c in sorted(props.conditionals):
        for b in CONDITIONAL_BRANCHES[c]:
            report.branches[f"#{c} {b}"] = 0
    base = _base_state(name, 2)
    for k in range(n_samples):
        rng = np.random.default_rng(seed + k)
        za, zb = TARGET_PATTERNS[k % len(TARGET_PATTERNS)] if targeted else ((), ())
        L = _exact_operation(rng, k, za, zb)
        s = apply_local(base, L)
        sig = signature(s)
        report.samples += 1
        for c in sorted(props.conditionals):
            held = conditional_holds(c, sig)
            if held is None:
                continue
            if not held:
                report.violations.append((seed + k, f"#{c}", _sig_values(s)))
            key = f"#{c} {_branch(c, sig)}"
            report.branches[key] = report.branches.get(key, 0) + 1
    return report


# ---------------------------------------------------------------------------
# closed-form oracles


def closed_form_oracle(name: str, L, apply_errata: bool = False):
    """Closed-form (IV, F1..F10, D1..D3) on ``L`` applied to the normalized
    representative of ``name``; see :mod:`slocc.oracles`."""
    return predict(name, L, corrected=apply_errata)


def verify_oracles(name: str, trials: int = 100, seed: int = 0,
                   apply_errata: bool = False) -> OrbitSampleReport:
    """Compare the closed forms with direct exact evaluation on ``trials``
    random rational operations (Gaussian entries on odd trials)."""
    if name not in ORACLE_CLASSES:
        raise KeyError(f"no closed form for class {name!r}")
    report = OrbitSampleReport(name)
    base = representative(name, normalized=True).state
    for k in range(trials):
        rng = np.random.default_rng(seed + k)
        L = LocalOperation(random_rational_operator(rng, gaussian=bool(k % 2)) for _ in range(4))
        v = invariant_vector(apply_local(base, L))
        p = predict(name, L, corrected=apply_errata)
        pairs = [("IV", p.iv, v.iv)]
        pairs += [(f"F{i}", a, b) for i, (a, b) in enumerate(zip(p.f, v.f), 1)]
        pairs += [(f"D{i}", a, b) for i, (a, b) in enumerate(zip(p.d, v.d), 1)]
        report.samples += 1
        for key, predicted, direct in pairs:
            if predicted != direct:
                report.violations.append((seed + k, key, {"predicted": predicted, "direct": direct}))
    return report


# ---------------------------------------------------------------------------
# transformation laws as polynomial identities


@dataclass(frozen=True)
class IdentityResult:
    identity: str
    passed: bool
    trials: int
    counterexample: Optional[dict] = None

    def __str__(self):
        if self.passed:
            return f"{self.identity}: pass ({self.trials} trials)"
        return f"{self.identity}: FAIL at seed {self.counterexample['seed']}"


def _corrupted_iv(s, L):
    # covariance law with det(delta) dropped; must fail
    return iv(apply_local(s, L)) - iv(s) * L[0].det() * L[1].det() * L[2].det()


# id -> (slots held at identity, residual)
IDENTITIES: dict[str, tuple[tuple[int, ...], Callable]] = {
    "iv-covariance": ((), residual_iv_covariance),
    "f-slot-A": ((0,), lambda s, L: residual_f_semiinvariance(s, L, "A")),
    "f-slot-B": ((1,), lambda s, L: residual_f_semiinvariance(s, L, "B")),
    "f-slot-C": ((2,), lambda s, L: residual_f_semiinvariance(s, L, "C")),
    "f-slot-D": ((3,), lambda s, L: residual_f_semiinvariance(s, L, "D")),
    "f910": ((0, 1), residual_f910_semiinvariance),
    "d1": ((0, 2), lambda s, L: residual_d_semiinvariance(s, L, 1)),
    "d2": ((0, 1), lambda s, L: residual_d_semiinvariance(s, L, 2)),
    "d3": ((0, 3), lambda s, L: residual_d_semiinvariance(s, L, 3)),
    "iv-covariance-corrupted": ((), _corrupted_iv),
}


def _nonzero(r) -> bool:
    if isinstance(r, (tuple, list)):
        return any(_nonzero(x) for x in r)
    return bool(r)


def verify_identity(identity: str, trials: int = 50, seed: int = 0) -> IdentityResult:
    """Evaluate a transformation law exactly at ``trials`` random points
    (Gaussian-rational state, rational operators) and report the first
    nonzero residual."""
    if identity not in IDENTITIES:
        raise KeyError(f"unknown identity {identity!r}; known: {', '.join(IDENTITIES)}")
    fixed, residual = IDENTITIES[identity]
    for k in range(trials):
        rng = np.random.default_rng(seed + k)
        s = random_rational_state(rng, 4, gaussian=True)
        L = LocalOperation(
            LocalOperator.identity() if q in fixed else random_rational_operator(rng, gaussian=bool(k % 2))
            for q in range(4)
        )
        r = residual(s, L)
        if _nonzero(r):
            return IdentityResult(identity, False, k + 1,
                                  {"seed": seed + k, "state": s, "operation": L, "residual": r})
    return IdentityResult(identity, True, trials)


# ---------------------------------------------------------------------------
# classifier fuzzing


def fuzz_distinguish(trials: int = 500, seed: int = 0) -> list:
    """States paired with random orbit points of themselves; returns the
    seeds where ``distinguish_states`` wrongly claimed inequivalence."""
    bad = []
    names = TRUE_CLASSES + DEGENERATE_CLASSES
    for k in range(trials):
        rng = np.random.default_rng(seed + k)
        if k % 2:
            s = random_rational_state(rng, 4, gaussian=True)
        else:
            s = _base_state(names[(k // 2) % len(names)], k)
        L = _exact_operation(rng, k)
        if distinguish_states(s, apply_local(s, L)).inequivalent:
            bad.append(seed + k)
    return bad


def fuzz_certify_degenerate(n_samples: int = 1000, seed: int = 0) -> list:
    """Orbit samples spread over every degenerate class; returns
    (class, seed, condition) for each sample the sufficient conditions
    certify, which should never happen."""
    bad = []
    for k in range(n_samples):
        name = DEGENERATE_CLASSES[k % len(DEGENERATE_CLASSES)]
        rng = np.random.default_rng(seed + k)
        L = _exact_operation(rng, k)
        s = apply_local(_base_state(name, k // len(DEGENERATE_CLASSES)), L)
        cert = certify_true_entanglement(signature(s))
        if cert.certified:
            bad.append((name, seed + k, cert.condition))
    return bad
