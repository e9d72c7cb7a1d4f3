"""Incremental double description for pointed cones.

``extreme_rays(C)`` returns the extreme rays of {x : <c, x> >= 0 for c in C}.
Adjacency of two rays is decided combinatorially: their common zero set must
not be contained in the zero set of any third ray.
"""
from __future__ import annotations

from typing import Sequence

from .linalg import dot, independent_rows, inverse, primitive, transpose


class NotPointedError(ValueError):
    pass


def extreme_rays(constraints: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    cons = []
    seen = set()
    for c in constraints:
        p = primitive(c)
        if any(p) and p not in seen:
            seen.add(p)
            cons.append(p)
    base = independent_rows(cons)
    if len(base) < dim:
        raise NotPointedError("cone has a nontrivial lineality space")
    B = [cons[i] for i in base]
    cols = transpose(inverse(B))
    rays = [primitive(c) for c in cols]
    zeros = [frozenset(base[i] for i in range(dim) if i != j) for j in range(dim)]
    in_base = set(base)
    for k, c in enumerate(cons):
        if k in in_base:
            continue
        s = [dot(c, r) for r in rays]
        pos = [i for i, x in enumerate(s) if x > 0]
        neg = [i for i, x in enumerate(s) if x < 0]
        zer = [i for i, x in enumerate(s) if x == 0]
        if not neg:
            zeros = [z | {k} if s[i] == 0 else z for i, z in enumerate(zeros)]
            continue
        new_rays, new_zeros = [], []
        for p in pos:
            for q in neg:
                common = zeros[p] & zeros[q]
                if len(common) < dim - 2:
                    continue
                if any(common <= zeros[o] for o in range(len(rays)) if o != p and o != q):
                    continue
                r = tuple(s[p] * b - s[q] * a for a, b in zip(rays[p], rays[q]))
                new_rays.append(primitive(r))
                new_zeros.append(common | {k})
        keep_r = [rays[i] for i in pos] + [rays[i] for i in zer] + new_rays
        keep_z = [zeros[i] for i in pos] + [zeros[i] | {k} for i in zer] + new_zeros
        rays, zeros = keep_r, keep_z
    return sorted(set(rays))
