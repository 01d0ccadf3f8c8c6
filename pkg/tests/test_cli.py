import subprocess
import sys

import pytest

from slocc.cli import run


def ok(*argv):
    code, out, err = run(list(argv))
    assert code == 0, err
    return out


def test_compute_ghz():
    out = ok("compute", "(|0>+|15>)/sqrt(2)")
    assert "-0.5" in out and "0.25" in out
    lines = dict(line.split(" = ", 1) for line in out.splitlines())
    assert lines["IV"].startswith("-1/2") and lines["F9"].startswith("1/4")
    assert all(lines[f"F{i}"] == "0" for i in range(1, 9)) and lines["F10"] == "0"
    assert lines["F"] == "1"


def test_compute_machine_exact():
    out = ok("compute", "|0> + i|15> + 1/3|5> + 2|10>", "--machine")
    rows = dict(line.split("\t") for line in out.splitlines())
    assert rows["carrier"] == "exact" and rows["IV"] == "-2/3-1 i"


def test_compute_machine_float_full_precision():
    out = ok("compute", "(|0>+|15>)/sqrt(3)", "--float", "--machine")
    rows = dict(line.split("\t") for line in out.splitlines())
    assert rows["carrier"] == "float"
    assert complex(rows["IV"]) == pytest.approx(-1 / 3, abs=1e-15)
    assert len(rows["IV"].strip("()-").split("+")[0]) > 10


def test_compute_from_file(tmp_path):
    p = tmp_path / "c4.ket"
    p.write_text("qubits: 4\n(|3>+|5>+|6>+|9>+|10>+|12>)/sqrt(6)\n")
    rows = dict(line.split("\t") for line in ok("compute", f"@{p}", "--machine").splitlines())
    assert (rows["D1"], rows["D2"], rows["D3"]) == ("-1/36", "1/36", "1/36")


def test_count_symbolic():
    assert ok("count", "5", "--symbolic").strip() == "5*t(4) + 66"


def test_count_numeric():
    assert ok("count", "4").strip() == "18"
    assert ok("count", "5", "--t", "4=28").strip() == "206"
    code, _, err = run(["count", "5"])
    assert code == 2 and "t(4)" in err


def test_verify_tables_seed1():
    code, out, err = run(["verify", "tables", "--samples", "100", "--seed", "1", "--exact"])
    assert code == 0, out.splitlines()[-5:]


def test_verify_tables_seed1_with_errata():
    code, out, _ = run(["verify", "tables", "--samples", "100", "--seed", "1", "--exact", "--errata"])
    assert code == 0
    assert out.splitlines()[0].startswith("# seed=1")
    assert out.splitlines()[-1] == "result: ok"


def test_verify_tables_reports_chi4():
    code, out, _ = run(["verify", "tables", "--samples", "100", "--seed", "1", "--class", "chi4", "--machine"])
    assert code == 1
    assert any(line.startswith("chi4\t|F") and "FAIL" in line for line in out.splitlines())


def test_verify_identities():
    code, out, _ = run(["verify", "identities", "--trials", "20"])
    assert code == 0 and "iv-covariance-corrupted: fail" in out


def test_verify_oracles():
    assert run(["verify", "oracles", "--trials", "10"])[0] == 1
    assert run(["verify", "oracles", "--trials", "10", "--errata"])[0] == 0


def test_verify_conditionals_and_states():
    assert run(["verify", "conditionals", "--class", "GHZ"])[0] == 0
    assert run(["verify", "states"])[0] == 1
    assert run(["verify", "states", "--errata"])[0] == 0


def test_classify():
    out = ok("classify", "(|3>+|5>+|6>+|9>+|10>+|12>)/sqrt(6)")
    assert "condition (3)" in out and "C4" in out


def test_match_two_states():
    out = ok("match", "|0>+|15>", "|1>+|2>+|4>+|8>")
    assert "provably-inequivalent" in out


def test_catalog():
    out = ok("catalog", "list")
    assert "chi4" in out and "GHZ12xGHZ34" in out
    assert "|0> + |3> + |6> + |10> + |12> - |15>" in ok("catalog", "show", "chi4")
    assert run(["catalog", "show", "varsigma4"])[0] == 2


def test_nf():
    out = ok("nf", "--ghz", "5")
    assert "F = 1820" in out
    assert "F = 0" in ok("nf", "--w", "6")


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["compute"], ["compute", "|0> + ?"], ["compute", "|0>", "--nope"],
    ["count", "x"], ["verify", "everything"], ["compute", "|0>+|1>"],
])
def test_usage_errors(argv):
    code, out, err = run(argv)
    assert code == 2 and err


def test_usage_error_names_token():
    _, _, err = run(["compute", "|0> + ?"])
    assert "position 6" in err
    _, _, err = run(["compute", "|0>", "--nope"])
    assert "--nope" in err


def test_seed_header_and_determinism():
    a = run(["verify", "tables", "--samples", "5", "--class", "kappa4"])
    b = run(["verify", "tables", "--samples", "5", "--class", "kappa4"])
    assert a == b and a[1].startswith("# seed=0")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "slocc", "count", "6", "--symbolic"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "6*t(5) + 30*t(4) + 276"
