"""Kernel selection: compiled core when importable, pure Python otherwise.

Set ``TORICBORDISM_PURE_PYTHON=1`` to force the fallback.  Calls whose integer
magnitudes could overflow int64 are routed to the fallback automatically.
"""
from __future__ import annotations

import os

from . import _kernels_py as _py

_c = None
if os.environ.get("TORICBORDISM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _c  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build
        _c = None

BACKEND = "compiled" if _c is not None else "python"
_LIMIT = 1 << 60


def _mag(rows) -> int:
    return max((abs(int(x)) for r in rows for x in r), default=0)


def _safe(A, extent: int, *extra) -> bool:
    n = len(A[0]) if A else 1
    bound = _mag(A) * extent * n + max((abs(int(x)) for e in extra for x in e), default=0)
    return bound < _LIMIT and extent < _LIMIT


def box_points(A, b, lo, hi):
    A = [list(map(int, r)) for r in A]
    b = list(map(int, b))
    ext = max((abs(int(x)) for x in list(lo) + list(hi)), default=0)
    if _c is not None and _safe(A, ext, b):
        return _c.box_points(A, b, list(lo), list(hi))
    return _py.box_points(A, b, list(lo), list(hi))


def minkowski_cover(targets, base, A, b) -> int:
    A = [list(map(int, r)) for r in A]
    b = list(map(int, b))
    ext = max(_mag(targets), _mag(base))
    if _c is not None and _safe(A, 2 * ext, b):
        return _c.minkowski_cover(targets, base, A, b)
    return _py.minkowski_cover(targets, base, A, b)


def cone_reduce(cands, A) -> list[int]:
    A = [list(map(int, r)) for r in A]
    if _c is not None and _safe(A, 2 * _mag(cands)):
        return _c.cone_reduce(cands, A)
    return _py.cone_reduce(cands, A)
