"""Kernel backend selection: compiled extension if available, else pure Python.

Set RINGCODE_BACKEND=python to force the fallback (used by the benchmark to
compare both).  The active backend's name is exposed as BACKEND.
"""

from __future__ import annotations

import os

import numpy as np

from .gf import FieldSpec

if os.environ.get("RINGCODE_BACKEND", "").lower() == "python":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND_NAME

exhaustive_scan = _impl.exhaustive_scan
colrank_first_dependent = _impl.colrank_first_dependent

_TABLE_CACHE: dict = {}


def field_tables(F: FieldSpec):
    """uint8 (add, sub, mul, inv) tables for kernel calls; q must fit uint8."""
    key = (F.p, F.m, F.modulus)
    if key not in _TABLE_CACHE:
        q = F.q
        if q > 256:
            raise ValueError(f"kernel tables require q <= 256, got {q}")
        add = np.zeros((q, q), dtype=np.uint8)
        sub = np.zeros((q, q), dtype=np.uint8)
        mul = np.zeros((q, q), dtype=np.uint8)
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(q):
            for b in range(q):
                add[a, b] = F.add(a, b)
                sub[a, b] = F.sub(a, b)
                mul[a, b] = F.mul(a, b)
            if a:
                inv[a] = F.inv(a)
        _TABLE_CACHE[key] = (add, sub, mul, inv)
    return _TABLE_CACHE[key]
