"""Hot kernels with a compiled fast path and a pure-Python fallback.

The compiled ``_native`` extension handles graphs with at most 128 vertices
(two 64-bit words per row).  Larger graphs, or any graph when
``SRGSWITCH_BACKEND=pure`` is set, go through :mod:`._pure`.  Both backends
return identical results.
"""
from __future__ import annotations

import os

from . import _pure

try:
    from . import _native
except ImportError:  # extension not built
    _native = None

NATIVE_MAX_N = 128


def _choose() -> str:
    want = os.environ.get("SRGSWITCH_BACKEND", "auto").lower()
    if want == "pure" or _native is None:
        return "pure"
    return "native"


BACKEND = _choose()


def native_available() -> bool:
    return _native is not None


def _use_native(g, backend: str | None) -> bool:
    b = backend or BACKEND
    if b == "native" and _native is None:
        raise RuntimeError("native kernels are not built")
    return b == "native" and g.n <= NATIVE_MAX_N


def gm_block(g, c1: int, backend: str | None = None):
    if _use_native(g, backend):
        return _native.gm_block(g.words(), g.n, c1)
    return _pure.gm_block(g.rows, g.n, c1)


def wqh_block(g, ell: int, x: int, backend: str | None = None):
    if _use_native(g, backend):
        return _native.wqh_block(g.words(), g.n, ell, x)
    return _pure.wqh_block(g.rows, g.n, ell, x)


def canon_label(g, backend: str | None = None):
    if _use_native(g, backend):
        return _native.canon_label(g.words(), g.n)
    return _pure.canon_label(g.rows, g.n)
