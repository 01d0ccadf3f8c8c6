import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from slocc.exact import GaussianRational as G
from slocc.state import (
    LocalOperation,
    LocalOperator,
    apply_local,
    make_state,
    normalize,
    permute_operation,
    permute_qubits,
    random_invertible,
    random_local_operation,
    random_rational_operator,
    swap_qubits,
)

from .strategies import exact_operations, exact_states, float_states

I = LocalOperator.identity()
X = LocalOperator.of(0, 1, 1, 0)


def kron_reference(s, L):
    # dense Kronecker product, independent of the tensordot/loop paths
    m = np.array([[1.0 + 0j]])
    for op in L:
        m = np.kron(m, op.matrix())
    return m @ s.vector()


def test_make_state_ghz(ghz):
    assert ghz.support() == [0, 15]
    assert ghz.exact and ghz.n == 4


def test_make_state_three_qubit_ghz():
    s = make_state(3, [(0, 1), (7, 1)])
    assert s.dim == 8 and s.support() == [0, 7]


@pytest.mark.parametrize("entries", [[], [(0, 0)], [(16, 1)], [(-1, 1)], [(1, 1), (1, 2)]])
def test_make_state_rejects(entries):
    with pytest.raises(ValueError):
        make_state(4, entries)


def test_normalize_ghz(ghz):
    v = normalize(ghz).vector()
    assert np.allclose(v[[0, 15]], 1 / math.sqrt(2))
    assert normalize(ghz).norm2() == 1


def test_normalize_three_four_five():
    s = normalize(make_state(1, [(0, 3.0), (1, 4.0)]))
    assert np.allclose(s.vector(), [0.6, 0.8])
    exact = normalize(make_state(1, [(0, 3), (1, 4)]))
    assert exact.exact and exact.values() == [0.6, 0.8]


def test_normalize_idempotent():
    s = normalize(make_state(2, [(0, 0.3 + 0.1j), (3, -0.7)]))
    assert np.allclose(normalize(s).vector(), s.vector(), atol=1e-15)


def test_identity_is_bit_exact(ghz):
    assert apply_local(ghz, LocalOperation.identity(4)) == ghz
    f = normalize(ghz.to_float())
    assert apply_local(f, LocalOperation.identity(4, exact=False)).values() == f.values()


def test_bit_flip_on_first_qubit(ghz):
    s = apply_local(ghz, LocalOperation([X, I, I, I]))
    assert s.support() == [7, 8]


def test_diagonal_scaling(ghz):
    s = apply_local(ghz, LocalOperation([LocalOperator.of(2, 0, 0, 1), I, I, I]))
    assert s == make_state(4, [(0, 2), (15, 1)])


def test_apply_local_rejects_bad_operations(ghz):
    with pytest.raises(ValueError):
        apply_local(ghz, LocalOperation([I, I, I]))
    with pytest.raises(ValueError):
        apply_local(ghz, LocalOperation([LocalOperator.of(1, 2, 2, 4), I, I, I]))


def test_swap_first_two_qubits():
    s = make_state(4, [(4, 1)])
    t = swap_qubits(s, 0, 1)
    assert t.support() == [8]
    assert swap_qubits(t, 0, 1) == s
    assert permute_qubits(s, [0, 1, 2, 3]) == s
    with pytest.raises(ValueError):
        permute_qubits(s, [0, 0, 1, 2])


def test_random_invertible_contract():
    a, b = random_invertible(1, 0.1), random_invertible(1, 0.1)
    assert a == b and abs(a.det()) >= 0.1
    rng = np.random.default_rng(7)
    assert all(abs(random_invertible(rng, 0.3).det()) >= 0.3 for _ in range(1000))
    with pytest.raises(ValueError):
        random_invertible(0, 0)


@pytest.mark.parametrize("zero", [(1, 2), (3, 4), (1, 3), (2, 4), (1, 2, 3)])
def test_rational_operator_rejects_singular_patterns(zero):
    with pytest.raises(ValueError):
        random_rational_operator(0, zero=zero)


@given(exact_states(n=3), exact_operations(n=3), exact_operations(n=3))
def test_composition_exact(s, L, M):
    assert apply_local(s, L.compose(M)) == apply_local(apply_local(s, M), L)


@given(float_states(n=3), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_composition_float(s, a, b):
    L, M = random_local_operation(a, 3), random_local_operation(b, 3)
    lhs = apply_local(s, L.compose(M)).vector()
    rhs = apply_local(apply_local(s, M), L).vector()
    assert np.allclose(lhs, rhs, rtol=1e-12, atol=1e-12 * np.abs(rhs).max())


@given(exact_states(n=4), exact_operations(n=4))
def test_exact_matches_dense_kronecker(s, L):
    assert np.allclose(apply_local(s, L).vector(), kron_reference(s, L), atol=1e-9)


@given(float_states(n=4), st.integers(0, 10 ** 6))
def test_float_matches_dense_kronecker(s, seed):
    L = random_local_operation(seed, 4)
    assert np.allclose(apply_local(s, L).vector(), kron_reference(s, L), atol=1e-12)


def test_unitaries_preserve_norm():
    h = 1 / math.sqrt(2)
    H = LocalOperator.of(h, h, h, -h)
    Y = LocalOperator.of(0, -1j, 1j, 0)
    Z = LocalOperator.of(1, 0, 0, -1)
    rng = np.random.default_rng(3)
    s = make_state(4, list(enumerate(rng.normal(size=16) + 1j * rng.normal(size=16))))
    t = apply_local(s, LocalOperation([H, Y, Z, H]))
    assert abs(t.norm() - s.norm()) < 1e-12 * s.norm()


@given(exact_states(n=4), exact_operations(n=4), st.permutations(range(4)))
def test_permutation_conjugates_local_action(s, L, perm):
    lhs = permute_qubits(apply_local(s, L), perm)
    rhs = apply_local(permute_qubits(s, perm), permute_operation(L, perm))
    assert lhs == rhs


def test_exact_gaussian_amplitudes():
    s = make_state(2, [(1, G(0, 1)), (2, 2)])
    assert s.exact and s.values()[1] == 1j
