"""Backend selection for the reduction kernels.

The compiled extension is used when it imported successfully and the monomial
encoding fits in 64-bit words; otherwise the pure-Python twin runs. Setting
``MILNOR_PURE_PYTHON=1`` in the environment forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

try:
    if os.environ.get("MILNOR_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("compiled kernels disabled by MILNOR_PURE_PYTHON")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

_forced = None

COMPILED_AVAILABLE = _compiled is not None


def default_backend_name() -> str:
    return (_forced or _compiled or _kernels_py).NAME


def backend_for(encoding):
    """Kernel module to use with ``encoding``."""
    if _forced is not None:
        if _forced is _compiled and not encoding.fits64:
            return _kernels_py
        return _forced
    if _compiled is not None and encoding.fits64:
        return _compiled
    return _kernels_py


def force_backend(name: str | None) -> None:
    """Pin the backend (``"python"``, ``"cython"``) or restore automatic choice with ``None``."""
    global _forced
    if name is None:
        _forced = None
    elif name == "python":
        _forced = _kernels_py
    elif name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        _forced = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")
