"""Hypothesis strategies shared by the test modules."""
from fractions import Fraction

from hypothesis import strategies as st

from slocc.exact import GaussianRational
from slocc.state import LocalOperation, LocalOperator, make_state

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
gaussian = st.builds(lambda a, b: GaussianRational(a, b), rationals, rationals)
small_complex = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)


@st.composite
def exact_states(draw, n=4, min_terms=1):
    amps = draw(st.lists(gaussian, min_size=1 << n, max_size=1 << n))
    if not any(amps):
        amps[draw(st.integers(0, (1 << n) - 1))] = GaussianRational(1)
    return make_state(n, list(enumerate(amps)))


@st.composite
def exact_operators(draw, entries=gaussian):
    while True:
        op = LocalOperator(*draw(st.lists(entries, min_size=4, max_size=4)))
        if op.det():
            return op


@st.composite
def exact_operations(draw, n=4, identity_slots=()):
    return LocalOperation(
        LocalOperator.identity() if q in identity_slots else draw(exact_operators()) for q in range(n)
    )


@st.composite
def float_states(draw, n=4):
    amps = draw(st.lists(small_complex, min_size=1 << n, max_size=1 << n))
    if max(abs(a) for a in amps) < 1e-3:
        amps[0] = 1.0
    return make_state(n, [(i, complex(a)) for i, a in enumerate(amps)])
