"""Pure-Python versions of the hot loops.  Same contracts as the compiled core.

All inputs are integer lists: ``A`` is a list of rows, ``b`` a list of offsets,
and a point x is accepted when A x + b >= 0 componentwise.
"""
from __future__ import annotations


def box_points(A, b, lo, hi):
    """Integer points of the box [lo, hi] satisfying A x + b >= 0, in lex order."""
    n = len(lo)
    if n == 0:
        return [()] if all(x >= 0 for x in b) else []
    if any(l > h for l, h in zip(lo, hi)):
        return []
    m = len(A)
    out = []
    x = list(lo)
    # partial[i][k] = b[k] + sum_{j < i} A[k][j] * x[j]
    partial = [[0] * m for _ in range(n + 1)]
    partial[0] = list(b)
    for i in range(n):
        partial[i + 1] = [partial[i][k] + A[k][i] * x[i] for k in range(m)]
    i = n - 1
    while True:
        acc = partial[n]
        if all(v >= 0 for v in acc):
            out.append(tuple(x))
        # odometer increment
        i = n - 1
        while i >= 0 and x[i] == hi[i]:
            x[i] = lo[i]
            i -= 1
        if i < 0:
            break
        x[i] += 1
        for j in range(i, n):
            pj = partial[j]
            partial[j + 1] = [pj[k] + A[k][j] * x[j] for k in range(m)]
    return out


def minkowski_cover(targets, base, A, b):
    """Index of the first target x with no y in base such that A(x-y) + b >= 0.

    Returns -1 when every target is covered.
    """
    base_img = [[sum(r[j] * y[j] for j in range(len(y))) for r in A] for y in base]
    m = len(A)
    for t, x in enumerate(targets):
        img = [sum(r[j] * x[j] for j in range(len(x))) + bk for r, bk in zip(A, b)]
        ok = False
        for yi in base_img:
            if all(img[k] - yi[k] >= 0 for k in range(m)):
                ok = True
                break
        if not ok:
            return t
    return -1


def cone_reduce(cands, A):
    """Indices of the irreducible elements of a degree-sorted candidate list.

    x is reducible when x - h lies in the cone {A y >= 0} for an earlier
    irreducible h.
    """
    imgs = [[sum(r[j] * x[j] for j in range(len(x))) for r in A] for x in cands]
    m = len(A)
    keep = []
    for i, xi in enumerate(imgs):
        red = False
        for h in keep:
            hi_ = imgs[h]
            if all(xi[k] - hi_[k] >= 0 for k in range(m)) and cands[h] != cands[i]:
                red = True
                break
        if not red:
            keep.append(i)
    return keep
