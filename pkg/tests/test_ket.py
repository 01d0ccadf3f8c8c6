import math
import re

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from slocc.catalog import TRUE_CLASSES, representative
from slocc.exact import GaussianRational as G
from slocc.ket import KetSyntaxError, format_state, parse, parse_file, read_state_text
from slocc.state import make_state, normalize

from .strategies import exact_states, float_states


def test_ghz_bitstrings():
    s = parse("(|0000>+|1111>)/sqrt(2)")
    assert s.n == 4 and s.support() == [0, 15]
    assert np.allclose(s.vector()[[0, 15]], 1 / math.sqrt(2))


def test_basis_ket_with_declared_width():
    s = parse("|5>", 4)
    assert s.n == 4 and s.support() == [5] and s.amps[5] == 1


def test_imaginary_unit_binds_as_factor():
    s = parse("i|1> + 2|2> - |3>", 4)
    assert s.amps[1] == G(0, 1) and s.amps[2] == 2 and s.amps[3] == -1


@pytest.mark.parametrize("text,n,support", [
    ("|0>+|15>", None, [0, 15]),
    ("|01>", None, [1]),
    ("|0011>", None, [3]),
    ("|10> + |1>", 4, [1, 10]),
    ("3/2|7> - 1/2 * |0>", 3, [0, 7]),
])
def test_index_width_rules(text, n, support):
    assert parse(text, n).support() == support


@pytest.mark.parametrize("text", [
    "", "|", "|2", "(|0>+|1>", "(|0>+|1>)/2x", "2", "|0> +", "|0>|1>", "|01> + |001>",
    "|16>", "|0> - |0>", "sqrt(0)|1>",
])
def test_syntax_and_value_errors(text):
    with pytest.raises(ValueError):
        parse(text, 4 if "16" in text else None)


def test_error_reports_position():
    with pytest.raises(KetSyntaxError) as e:
        parse("|0> + ?|1>")
    assert e.value.pos == 6


def test_decimals_are_exact():
    s = parse("0.25|0> + 1e-1|3>")
    assert s.exact and s.amps[0] == G(1) / 4 and s.amps[3] == G(1) / 10


def test_root_forms():
    s = parse("sqrt(2)/sqrt(6)|15> + 1/sqrt(3)|8>")
    assert s.exact
    assert np.allclose(s.vector()[[8, 15]], [1 / math.sqrt(3), 1 / math.sqrt(3)])


def test_format_ghz():
    s = parse("(|0>+|15>)/sqrt(2)")
    assert format_state(s) == "(|0> + |15>)/sqrt(2)"


def test_format_suppresses_zero_amplitudes():
    s = make_state(4, [(3, 0), (15, G(-1) / 2), (1, 1)])
    assert "|3>" not in format_state(s)


def test_format_negative_rational():
    s = make_state(4, [(0, 1), (15, G(-1) / 2)])
    assert format_state(s).endswith("- 1/2|15>")


def test_catalog_roundtrip():
    for name in TRUE_CLASSES:
        s = representative(name).state
        assert parse(format_state(s)) == s
        t = normalize(s)
        assert parse(format_state(t)) == t


@given(exact_states(n=4))
def test_roundtrip_exact(s):
    assert parse(format_state(s), 4) == s


@given(exact_states(n=3))
def test_roundtrip_exact_with_root(s):
    t = normalize(s)
    assert parse(format_state(t), 3) == t


@given(float_states(n=4))
def test_roundtrip_float_normalized(s):
    s = normalize(s)
    back = parse(format_state(s), 4)
    assert np.allclose(back.vector(), s.vector(), rtol=0, atol=1e-12)


@given(exact_states(n=4), st.randoms())
def test_whitespace_insensitive(s, rnd):
    text = format_state(s)
    tokens = re.findall(r"sqrt\(\d+\)|\|\d+>|\d+/\d+|\d+|.", text.replace(" ", ""))
    spaced = "".join(tok + " " * rnd.randint(0, 2) for tok in tokens)
    assert parse(spaced, 4) == parse(text, 4)


def test_state_file(tmp_path):
    p = tmp_path / "psi.ket"
    p.write_text("# phi4\nqubits: 4\n(|0> + |3> + |12> - |15>)/2\n")
    s = parse_file(p)
    assert s == representative("phi4", normalized=True).state
    assert read_state_text("qubits: 4\n|1>").support() == [1]
