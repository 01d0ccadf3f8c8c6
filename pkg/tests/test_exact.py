from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from slocc.exact import GaussianRational as G
from slocc.exact import as_exact, det2, is_exact_scalar
from slocc.state import LocalOperator

from .strategies import gaussian


def to_sympy(z: G):
    return sympy.Rational(int(z.re.numerator), int(z.re.denominator)) + sympy.I * sympy.Rational(
        int(z.im.numerator), int(z.im.denominator))


def test_conjugate_pair_product():
    half = Fraction(1, 2)
    assert G(half, half) * G(half, -half) == G(half)


def test_additive_inverse_is_exact_zero():
    x = G(Fraction(3, 7), Fraction(-2, 5))
    assert x + (-x) == 0
    assert not (x + (-x))


def test_canonical_form_reduces():
    assert G(Fraction(2, 4)) == G(Fraction(1, 2))
    assert str(G(Fraction(2, 4))) == "1/2"
    assert hash(G(Fraction(2, 4))) == hash(G(Fraction(1, 2)))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        G(1, 1) / G(0)


def test_str_forms():
    assert str(G(0)) == "0"
    assert str(G(Fraction(1, 2), Fraction(-1, 3))) == "1/2-1/3 i"
    assert str(G(0, 1)) == "0+1 i"


def test_float_operand_falls_back_to_complex():
    assert isinstance(G(1, 1) * 0.5, complex)
    assert G(1, 1) * 0.5 == 0.5 + 0.5j


def test_as_exact_rejects_floats():
    assert is_exact_scalar(3) and is_exact_scalar(Fraction(1, 3))
    assert not is_exact_scalar(0.5)
    with pytest.raises(TypeError):
        as_exact(0.5)


@pytest.mark.parametrize("entries,expected", [
    ((1, 0, 0, 1), 1),
    ((2, 0, 0, 3), 6),
    ((1, 2, 3, 6), 0),
])
def test_det2(entries, expected):
    assert det2(LocalOperator(*map(G, entries))) == expected


@given(gaussian, gaussian, gaussian)
def test_field_ops_match_sympy(x, y, z):
    X, Y, Z = map(to_sympy, (x, y, z))
    assert to_sympy(x + y * z) == sympy.expand(X + Y * Z)
    assert to_sympy(x - y) == sympy.expand(X - Y)
    assert to_sympy(x.conjugate()) == sympy.conjugate(X)
    if y:
        assert to_sympy(x / y) == sympy.expand_complex(X / Y)


@given(gaussian, gaussian, gaussian)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if x:
        assert x * (1 / x) == 1


@given(gaussian, st.integers(0, 5))
def test_power_and_abs2(x, k):
    p = G(1)
    for _ in range(k):
        p = p * x
    assert x ** k == p
    assert x.abs2() == (x * x.conjugate()).re


@given(gaussian)
def test_complex_conversion_agrees(x):
    assert abs(complex(x) - complex(float(x.re), float(x.im))) < 1e-15
