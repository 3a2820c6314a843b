"""Selects the compiled kernels when built, else the pure-Python ones.

Set ``GOGEULER_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os
from types import ModuleType
from typing import Sequence

import numpy as np

from . import _pykernels

_compiled: ModuleType | None
try:
    from . import _ckernels as _compiled
except ImportError:  # extension not built
    _compiled = None

if _compiled is not None and os.environ.get("GOGEULER_PURE_PYTHON", "") not in ("", "0"):
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _compiled_module() is not None else [])


def _compiled_module() -> ModuleType | None:
    if _compiled is not None:
        return _compiled
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


def surface_hom_count(mul: Sequence[Sequence[int]], inv: Sequence[int], g: int, backend: str | None = None) -> int:
    if (backend or BACKEND) == "cython":
        mod = _compiled_module()
        if mod is None:
            raise RuntimeError("compiled kernels are not built")
        return int(mod.surface_hom_count(
            np.ascontiguousarray(mul, dtype=np.intc), np.ascontiguousarray(inv, dtype=np.intc), g))
    return _pykernels.surface_hom_count(mul, inv, g)


def pointed_keys(
    a_gens: Sequence[Sequence[int]],
    b_homs: Sequence[Sequence[Sequence[int]]],
    s: int,
    backend: str | None = None,
) -> set[bytes]:
    if (backend or BACKEND) == "cython":
        mod = _compiled_module()
        if mod is None:
            raise RuntimeError("compiled kernels are not built")
        a = np.asarray(a_gens, dtype=np.intc).reshape(len(a_gens), s)
        kb = len(b_homs[0]) if len(b_homs) else 0
        b = np.asarray(b_homs, dtype=np.intc).reshape(len(b_homs), kb, s)
        return mod.pointed_keys(np.ascontiguousarray(a), np.ascontiguousarray(b), s)
    return _pykernels.pointed_keys(a_gens, b_homs, s)
