"""Kernel selection: compiled MCFE search when built, pure Python otherwise.

Set ``FIBERSURF_PURE_PYTHON=1`` to force the Python implementation.
"""
from __future__ import annotations

import os
from typing import Sequence

from fibersurf._mcfe_py import mcfe_search as mcfe_search_py

try:
    from fibersurf._mcfe_kernel import mcfe_search as mcfe_search_compiled
except ImportError:  # extension not built
    mcfe_search_compiled = None

# headroom so that a coefficient plus two neighbour shifts stays inside int64
_INT64_SAFE = 1 << 62

USE_COMPILED = mcfe_search_compiled is not None and not os.environ.get("FIBERSURF_PURE_PYTHON")


def backend() -> str:
    return "cython" if USE_COMPILED else "python"


def mcfe_search(coeffs: Sequence[int], positions: bool = False) -> list[tuple[int, ...]]:
    if USE_COMPILED and all(-_INT64_SAFE < c < _INT64_SAFE for c in coeffs):
        return mcfe_search_compiled(coeffs, positions)
    return mcfe_search_py(coeffs, positions)
