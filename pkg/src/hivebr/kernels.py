"""Kernel selection.

The compiled extension ``hivebr._ckernels`` is used when it imports and
``HIVEBR_PURE`` is not set to ``1``. Hive labels are arbitrary-precision
Python ints; inputs whose labels would not fit comfortably in a C
``long long`` are always routed to the pure-Python kernel.
"""
from __future__ import annotations

import os

from . import _pykernels

try:
    if os.environ.get("HIVEBR_PURE") == "1":
        raise ImportError("pure kernels requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# rhombus sums add four labels; keep headroom against overflow
_C_LIMIT = 1 << 60


def _fast():
    return _ckernels if _ckernels is not None else _pykernels


def row_insert(word, backend: str | None = None):
    mod = _pick(backend)
    if mod is _ckernels and any(abs(x) >= _C_LIMIT for x in word):
        mod = _pykernels
    return mod.row_insert(word)


def fill_hives(values, order, cons_ptr, cons, count_only=False, backend: str | None = None):
    mod = _pick(backend)
    if mod is _ckernels:
        bound = max((abs(x) for x in values), default=0)
        # interior labels lie between boundary extremes up to a factor of the size
        if bound * max(len(values), 1) >= _C_LIMIT:
            mod = _pykernels
    return mod.fill_hives(values, order, cons_ptr, cons, count_only)


def _pick(backend):
    if backend is None:
        return _fast()
    if backend == "python":
        return _pykernels
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        return _ckernels
    raise ValueError(f"unknown backend {backend!r}")
