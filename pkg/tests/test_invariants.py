import re
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slocc.catalog import representative
from slocc.exact import GaussianRational as G
from slocc.invariants import (
    d_components, f_aggregate, f_components, invariant_vector, iv, residual_d_semiinvariance,
    residual_f910_semiinvariance, residual_f_semiinvariance, residual_iv_covariance,
)
from slocc.state import (
    permute_qubits, random_local_operation,
    LocalOperation, LocalOperator, apply_local, make_state, normalize, random_rational_operator,
    random_rational_state, scale_state, swap_qubits,
)

from .strategies import exact_operations, exact_states, float_states, gaussian

# Re-typed independently of the implementation, in the a_i notation.
IV_TEXT = "(a2a13-a3a12)+(a4a11-a5a10)-(a0a15-a1a14)-(a6a9-a7a8)"
F_TEXT = [
    "(a0a7-a2a5+(a1a6-a3a4))^2-4(a2a4-a0a6)(a3a5-a1a7)",
    "((a8a15-a11a12)+(a9a14-a10a13))^2-4(a11a13-a9a15)(a10a12-a8a14)",
    "(a0a11-a2a9+a1a10-a3a8)^2-4(a2a8-a0a10)(a3a9-a1a11)",
    "(a4a15-a6a13+a5a14-a7a12)^2-4(a6a12-a4a14)(a7a13-a5a15)",
    "(a0a13-a4a9+a1a12-a5a8)^2-4(a4a8-a0a12)(a5a9-a1a13)",
    "(a2a15-a6a11+a3a14-a7a10)^2-4(a6a10-a2a14)(a7a11-a3a15)",
    "(a0a14-a4a10+a2a12-a6a8)^2-4(a4a8-a0a12)(a6a10-a2a14)",
    "(a1a15-a5a11+a3a13-a7a9)^2-4(a5a9-a1a13)(a7a11-a3a15)",
    "((a0a15-a2a13)+(a1a14-a3a12))^2-4(a0a14-a2a12)(a1a15-a3a13)",
    "((a4a11-a7a8)+(a5a10-a6a9))^2-4(a7a9-a5a11)(a6a8-a4a10)",
]
D_TEXT = [
    "(a1a4-a0a5)(a11a14-a10a15)-(a3a6-a2a7)(a9a12-a8a13)",
    "(a4a7-a5a6)(a8a11-a9a10)-(a0a3-a1a2)(a12a15-a13a14)",
    "(a3a5-a1a7)(a10a12-a8a14)-(a2a4-a0a6)(a11a13-a9a15)",
]


def _compile(text):
    tokens = re.findall(r"a\d+|\d+|[-+()^]", text)
    out, prev = [], None
    for tok in tokens:
        if prev is not None and (prev.startswith("a") or prev == ")" or prev.isdigit()) \
                and (tok.startswith("a") or tok == "("):
            out.append("*")
        out.append(f"a[{tok[1:]}]" if tok.startswith("a") else "**" if tok == "^" else tok)
        prev = tok
    return eval("lambda a: " + "".join(out))


IV_REF = _compile(IV_TEXT)
F_REF = [_compile(t) for t in F_TEXT]
D_REF = [_compile(t) for t in D_TEXT]

GHZ = make_state(4, [(0, 1), (15, 1)])
W = make_state(4, [(1, 1), (2, 1), (4, 1), (8, 1)])
PHI4 = make_state(4, [(0, 1), (3, 1), (12, 1), (15, -1)])
GHZ12_34 = make_state(4, [(0, 1), (3, 1), (12, 1), (15, 1)])


@given(exact_states())
def test_matches_transcribed_formulas(s):
    a = list(s.amps)
    assert iv(s) == IV_REF(a)
    assert f_components(s) == tuple(f(a) for f in F_REF)
    assert d_components(s) == tuple(d(a) for d in D_REF)


@pytest.mark.parametrize("k", range(10))
def test_each_f_sees_its_own_monomials(k):
    # a nonzero F on an indicator state of each leading product a_i a_j
    for i, j in re.findall(r"a(\d+)a(\d+)", F_TEXT[k].split("^")[0]):
        s = make_state(4, [(int(i), 1), (int(j), 1)])
        assert f_components(s)[k] == 1


def test_ghz_values():
    s = normalize(GHZ)
    assert iv(s) == G(-1) / 2
    f = f_components(s)
    assert f[8] == G(1) / 4 and all(v == 0 for i, v in enumerate(f) if i != 8)
    assert f_aggregate(s) == 1.0
    assert d_components(s) == (0, 0, 0)


def test_w_values():
    s = normalize(W)
    assert iv(s) == 0
    assert all(v == 0 for v in f_components(s))
    assert f_aggregate(s) == 0


def test_c4_values():
    s = representative("C4", normalized=True).state
    assert iv(s) == G(-1) / 2
    assert d_components(s) == (G(-1) / 36, G(1) / 36, G(1) / 36)


def test_phi4_values():
    f = f_components(normalize(PHI4))
    assert f[8] == G(1) / 4 and all(v == 0 for i, v in enumerate(f) if i != 8)


def test_ghz12_ghz34():
    s = normalize(GHZ12_34)
    assert f_aggregate(s) == 0
    assert d_components(s) == (0, G(-1) / 16, 0)


def test_wrong_qubit_count():
    s = make_state(3, [(0, 1)])
    for fn in (iv, f_components, d_components, f_aggregate, invariant_vector):
        with pytest.raises(ValueError):
            fn(s)


@given(float_states())
def test_aggregate_is_four_times_sum(s):
    v = invariant_vector(s)
    assert v.f_aggregate == pytest.approx(4 * sum(abs(x) for x in v.f), rel=1e-12)


@given(exact_states(), gaussian.filter(bool))
def test_homogeneity(s, lam):
    t = scale_state(s, lam)
    assert iv(t) == lam * lam * iv(s)
    lam4 = lam ** 4
    assert f_components(t) == tuple(lam4 * v for v in f_components(s))
    assert d_components(t) == tuple(lam4 * v for v in d_components(s))


@settings(max_examples=100)
@given(exact_states())
def test_permutation_relation(s):
    f = f_components(s)
    for other, pair in ((1, 2), (2, 4), (3, 6)):
        g = f_components(swap_qubits(s, 0, other))
        assert (f[pair], f[pair + 1]) == (g[0], g[1])


def _magnitudes(s, k=10):
    return sorted(abs(complex(v)) for v in f_components(s)[:k])


@pytest.mark.parametrize("a,b", [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
@settings(max_examples=20)
@given(s=exact_states())
def test_f_magnitude_multiset_under_swap(s, a, b):
    # stated for every swap; F9/F10 only follow swaps inside AB or CD
    assert _magnitudes(swap_qubits(s, a, b)) == pytest.approx(_magnitudes(s), rel=1e-12, abs=1e-15)


@given(exact_states(), st.permutations(range(4)))
def test_f1_to_f8_multiset_under_permutation(s, perm):
    t = permute_qubits(s, perm)
    assert _magnitudes(t, 8) == pytest.approx(_magnitudes(s, 8), rel=1e-12, abs=1e-15)


@given(exact_states(), st.sampled_from([(0, 1), (2, 3)]))
def test_f_aggregate_under_pair_preserving_swap(s, ab):
    t = swap_qubits(s, *ab)
    assert f_aggregate(t) == pytest.approx(f_aggregate(s), rel=1e-12)


@given(float_states())
def test_exact_and_float_agree(s):
    # floats are dyadic rationals, so the exact copy holds the same numbers
    exact = make_state(4, [(i, G(Fraction(a.real), Fraction(a.imag))) for i, a in enumerate(s.amps)])
    x, y = invariant_vector(exact), invariant_vector(s)
    for a, b in zip(x.items(), y.items()):
        assert complex(a[1]) == pytest.approx(complex(b[1]), rel=1e-10, abs=1e-10)


# residual laws

def test_identity_residuals_vanish(ghz):
    I = LocalOperation.identity(4)
    assert residual_iv_covariance(ghz, I) == 0
    for slot in "ABCD":
        assert residual_f_semiinvariance(ghz, I, slot) == (0, 0)
    assert residual_f910_semiinvariance(ghz, I) == (0, 0)
    for k in (1, 2, 3):
        assert residual_d_semiinvariance(ghz, I, k) == 0


def _ops(seed, identity=()):
    rng = np.random.default_rng(seed)
    return LocalOperation(LocalOperator.identity() if q in identity else random_rational_operator(rng, gaussian=True)
                          for q in range(4))


def test_iv_covariance_seeded(ghz):
    assert residual_iv_covariance(ghz, random_local_operation(3)) < 1e-10
    assert residual_iv_covariance(ghz, _ops(3)) == 0


def test_iv_covariance_fuzz():
    rng = np.random.default_rng(0)
    for k in range(200):
        s = make_state(4, list(enumerate(rng.normal(size=16) + 1j * rng.normal(size=16))))
        L = random_local_operation(rng)
        scale = abs(iv(s)) * abs(np.prod([complex(d) for d in L.dets()])) + 1
        assert residual_iv_covariance(s, L) / scale < 1e-9


def test_f_semiinvariance_seeded(ghz):
    assert residual_f_semiinvariance(ghz, _ops(5, identity=(0,)), "A") == (0, 0)


def test_f_slot_mismatch():
    with pytest.raises(ValueError):
        residual_f_semiinvariance(GHZ, _ops(5), "A")
    with pytest.raises(ValueError):
        residual_f_semiinvariance(GHZ, LocalOperation.identity(4), "E")


def test_f910_seeded(ghz):
    assert residual_f910_semiinvariance(ghz, _ops(1, identity=(0, 1))) == (0, 0)
    s = make_state(4, [(0, 1), (5, 2), (10, -1), (15, G(0, 1))])
    assert residual_f910_semiinvariance(s, _ops(11, identity=(0, 1))) == (0, 0)
    with pytest.raises(ValueError):
        residual_f910_semiinvariance(s, _ops(11, identity=(0,)))


def test_d_laws_seeded():
    c4 = representative("C4").state
    psi4 = representative("psi4").state
    assert residual_d_semiinvariance(c4, _ops(2, identity=(0, 2)), 1) == 0
    assert residual_d_semiinvariance(psi4, _ops(2, identity=(0, 1)), 2) == 0
    with pytest.raises(ValueError):
        residual_d_semiinvariance(c4, _ops(2, identity=(0, 1)), 1)
    with pytest.raises(ValueError):
        residual_d_semiinvariance(c4, _ops(2), 4)


@settings(max_examples=25)
@given(exact_states(), exact_operations())
def test_iv_covariance_general(s, L):
    assert residual_iv_covariance(s, L) == 0


@settings(max_examples=25)
@given(exact_states(), st.data())
def test_slot_laws(s, data):
    for slot, k in zip("ABCD", range(4)):
        L = data.draw(exact_operations(identity_slots=(k,)))
        assert residual_f_semiinvariance(s, L, slot) == (0, 0)
    assert residual_f910_semiinvariance(s, data.draw(exact_operations(identity_slots=(0, 1)))) == (0, 0)
    for which, fixed in ((1, (0, 2)), (2, (0, 1)), (3, (0, 3))):
        L = data.draw(exact_operations(identity_slots=fixed))
        assert residual_d_semiinvariance(s, L, which) == 0


def test_residual_with_root():
    s = normalize(random_rational_state(7))
    assert residual_iv_covariance(s, _ops(7)) == 0
