"""Backend selection for the two hot loops.

The compiled extension is used when it imported and a cheap a-priori bound
says every intermediate count fits in a signed 64-bit integer; otherwise the
pure-Python kernels (unbounded ints) run.
"""

from __future__ import annotations

from math import prod
from typing import Optional

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

HAVE_COMPILED = _compiled is not None
BACKENDS = ("python", "compiled") if HAVE_COMPILED else ("python",)

_INT64_BOUND = 1 << 62


def _pick(backend: Optional[str], bound: int):
    if backend == "python":
        return _kernels_py
    if backend == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled kernels are not available")
        if bound >= _INT64_BOUND:
            raise OverflowError("instance may overflow the 64-bit kernel")
        return _compiled
    if backend is not None:
        raise ValueError(f"unknown backend {backend!r}")
    if HAVE_COMPILED and bound < _INT64_BOUND:
        return _compiled
    return _kernels_py


def count_chains(groups, los, his, backend: Optional[str] = None) -> int:
    # Each partial count is at most the number of grid points below its row.
    bound = 1
    for lo, hi in zip(los[1:], his[1:]):
        bound *= prod(max(h - l + 1, 0) for l, h in zip(lo, hi))
    return int(_pick(backend, bound).count_chains(list(groups), list(los), list(his)))


def count_nilp(starts, ends, path_counts, backend: Optional[str] = None) -> int:
    """``path_counts`` are the unconstrained counts per pair; their product bounds the answer."""
    return int(_pick(backend, prod(path_counts)).count_nilp(list(starts), list(ends)))
