import os
import subprocess
import sys

import numpy as np
import pytest

from slocc import _kernels
from slocc.nqubit import _integer_components, ghz_n, w_n
from slocc.state import random_rational_state

BACKENDS = _kernels.available_backends()


def test_python_backend_always_available():
    assert "python" in BACKENDS
    assert _kernels.BACKEND in BACKENDS


def test_compiled_backend_selected_when_built():
    if "compiled" in BACKENDS and not os.environ.get("SLOCC_PURE_PYTHON"):
        assert _kernels.BACKEND == "compiled"


def test_env_forces_python():
    code = "from slocc import _kernels; print(_kernels.BACKEND)"
    env = dict(os.environ, SLOCC_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.backend("fortran")


@pytest.mark.parametrize("name", BACKENDS)
@pytest.mark.parametrize("n", range(2, 7))
def test_counts_agree(name, n):
    assert _kernels.backend(name).count_quadruples(n) == _kernels.backend("python").count_quadruples(n)


@pytest.mark.parametrize("n", range(3, 7))
def test_float_backends_agree(n):
    rng = np.random.default_rng(n)
    a = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    values = [_kernels.backend(b).fn_float(a, n) for b in BACKENDS]
    assert values == pytest.approx([values[0]] * len(values), rel=1e-12)


@pytest.mark.parametrize("n", range(3, 7))
def test_int_backends_agree(n):
    for s in (random_rational_state(n, n=n), ghz_n(n), w_n(n)):
        re, im, _ = _integer_components(s)
        re, im = np.array(re, dtype=np.int64), np.array(im, dtype=np.int64)
        results = [_kernels.backend(b).fn_int(re, im, n) for b in BACKENDS]
        for total, nonzero in results:
            assert nonzero == results[0][1]
            assert total == pytest.approx(results[0][0], rel=1e-12)


@pytest.mark.parametrize("name", BACKENDS)
def test_wrong_length(name):
    with pytest.raises(ValueError):
        _kernels.backend(name).fn_float(np.zeros(8, dtype=complex), 4)
