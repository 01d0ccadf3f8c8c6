"""Acceptance criteria 1-10.

Each test prints one ``criterion N: PASS|FAIL`` line.  Run directly
(``python3 -m tests.test_acceptance``) for just the summary.
"""
import time

import pytest

from slocc.catalog import DEGENERATE_CLASSES, all_class_names, class_properties, representative
from slocc.classifier import certify_true_entanglement, signature
from slocc.counting import degenerate_count
from slocc.exact import GaussianRational as G
from slocc.invariants import d_components, f_components, iv
from slocc.nqubit import f_n, ghz_n, w_n
from slocc.orbit import (
    CONDITIONAL_BRANCHES, IDENTITIES, fuzz_certify_degenerate, fuzz_distinguish, verify_class_zero_pattern,
    verify_conditionals, verify_identity, verify_oracles, verify_representatives, verify_pair_d_patterns,
)
from slocc.oracles import ORACLE_CLASSES


def _rep(name):
    return representative(name, normalized=True).state


def criterion_1():
    t = time.perf_counter()
    bad = [n for n, (e, o) in verify_representatives().items() if e != o]
    elapsed = time.perf_counter() - t
    return not bad and elapsed < 1.0, f"mismatched rows {bad}, {elapsed:.2f}s"


def criterion_2():
    checks = {
        "IV(GHZ)": iv(_rep("GHZ")) == G(-1) / 2,
        "F9(GHZ)": f_components(_rep("GHZ"))[8] == G(1) / 4,
        "D(C4)": d_components(_rep("C4")) == (G(-1) / 36, G(1) / 36, G(1) / 36),
        "D2(phi4)": d_components(_rep("phi4"))[1] == G(1) / 16,
        "D1(psi4)": d_components(_rep("psi4"))[0] == G(-1) / 16,
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, f"wrong {bad}"


def criterion_3():
    t = time.perf_counter()
    laws = [k for k in IDENTITIES if not k.endswith("corrupted")]
    bad = [k for k in laws if not verify_identity(k, 50).passed]
    control = verify_identity("iv-covariance-corrupted", 50)
    elapsed = time.perf_counter() - t
    return not bad and not control.passed and elapsed < 10, \
        f"failing laws {bad}, control passed={control.passed}, {elapsed:.2f}s"


def criterion_4():
    bad = {}
    for name in ORACLE_CLASSES:
        r = verify_oracles(name, 100)
        if r.violations:
            bad[name] = sorted({prop for _, prop, _ in r.violations})
    return not bad, f"mismatches {bad}"


def criterion_5():
    bad = {}
    for name in DEGENERATE_CLASSES:
        r = verify_class_zero_pattern(name, 500)
        if r.violations:
            bad[name] = sorted({prop for _, prop, _ in r.violations})
    pair_bad = [n for n, (e, o) in verify_pair_d_patterns().items() if e != o]
    return not bad and not pair_bad, f"violations {bad}, pair D mismatches {pair_bad}"


def criterion_6():
    missing = {}
    for name in all_class_names():
        if not class_properties(name).d_opt():
            continue
        gaps = verify_class_zero_pattern(name, 500).missing_witnesses()
        if gaps:
            missing[name] = gaps
    return not missing, f"missing witnesses {missing}"


def criterion_7():
    problems = {}
    for name in ORACLE_CLASSES:
        props = class_properties(name)
        if not props.conditionals:
            continue
        r = verify_conditionals(name)
        unhit = [f"#{c} {b}" for c in props.conditionals for b in CONDITIONAL_BRANCHES[c]
                 if not r.branches.get(f"#{c} {b}")]
        if r.violations or unhit:
            problems[name] = (len(r.violations), unhit)
    return not problems, f"problems {problems}"


def criterion_8():
    checks = [
        degenerate_count(4, symbolic=False) == 18,
        str(degenerate_count(5)) == "5*t(4) + 66",
        str(degenerate_count(6)) == "6*t(5) + 30*t(4) + 276",
        degenerate_count(5, {4: 28}, symbolic=False) == 206,
    ]
    return all(checks), f"checks {checks}"


def criterion_9():
    t = time.perf_counter()
    w = {n: f_n(w_n(n)) for n in range(3, 9)}
    g = {n: f_n(ghz_n(n)) for n in range(3, 9)}
    elapsed = time.perf_counter() - t
    ok = all(v == 0 for v in w.values()) and all(v > 0 for v in g.values()) and elapsed < 30
    return ok, f"W {w}, GHZ {g}, {elapsed:.2f}s"


def criterion_10():
    wrong = fuzz_distinguish(500)
    conds = {name: certify_true_entanglement(signature(_rep(name))).condition for name in ("C4", "psi4", "pi4")}
    degenerate = fuzz_certify_degenerate(1000)
    ok = not wrong and conds == {"C4": 3, "psi4": 1, "pi4": 2} and not degenerate
    return ok, f"distinguish failures {wrong}, conditions {conds}, degenerate certified {degenerate}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def _line(k, ok, detail):
    return f"criterion {k}: {'PASS' if ok else 'FAIL'}" + ("" if ok else f"  ({detail})")


@pytest.mark.parametrize("k", range(1, 11))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _line(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    for k, fn in enumerate(CRITERIA, 1):
        print(_line(k, *fn()))
