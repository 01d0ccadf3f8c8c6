"""Backend selection for the n-qubit F loops.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``SLOCC_PURE_PYTHON`` is set to a non-empty value other
than ``0``, the numpy implementation is used.  ``BACKEND`` names the choice.
"""
from __future__ import annotations

import os

from . import _fn_py


def _load():
    if os.environ.get("SLOCC_PURE_PYTHON", "") not in ("", "0"):
        return _fn_py, "python"
    try:
        from . import _fn_ext
    except ImportError:
        return _fn_py, "python"
    return _fn_ext, "compiled"


_impl, BACKEND = _load()

fn_float = _impl.fn_float
fn_int = _impl.fn_int
count_quadruples = _impl.count_quadruples

__all__ = ["BACKEND", "fn_float", "fn_int", "count_quadruples", "available_backends", "backend"]


def backend(name: str):
    """Module implementing the named backend ('compiled' or 'python')."""
    if name == "python":
        return _fn_py
    if name == "compiled":
        from . import _fn_ext

        return _fn_ext
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list[str]:
    names = ["python"]
    try:
        from . import _fn_ext  # noqa: F401
    except ImportError:
        return names
    return ["compiled"] + names
