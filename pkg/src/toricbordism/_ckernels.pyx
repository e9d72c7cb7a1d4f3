# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled hot loops.  Contracts match ``_kernels_py``; callers guarantee that
all intermediate values fit in int64 (checked in ``kernels``)."""

from libcpp.vector cimport vector
from libc.stdint cimport int64_t


cdef vector[int64_t] _flat(rows, Py_ssize_t ncols):
    cdef vector[int64_t] out
    for r in rows:
        for j in range(ncols):
            out.push_back(<int64_t>r[j])
    return out


def box_points(A, b, lo, hi):
    cdef Py_ssize_t n = len(lo)
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t i, j, k
    if n == 0:
        return [()] if all(x >= 0 for x in b) else []
    for i in range(n):
        if lo[i] > hi[i]:
            return []
    cdef vector[int64_t] a = _flat(A, n)          # a[k*n + j]
    cdef vector[int64_t] x, l, h
    cdef vector[int64_t] part                      # part[i*m + k]
    x.resize(n); l.resize(n); h.resize(n)
    part.resize((n + 1) * m)
    for i in range(n):
        l[i] = lo[i]; h[i] = hi[i]; x[i] = lo[i]
    for k in range(m):
        part[k] = b[k]
    for i in range(n):
        for k in range(m):
            part[(i + 1) * m + k] = part[i * m + k] + a[k * n + i] * x[i]
    cdef vector[int64_t] found
    cdef bint ok
    while True:
        ok = True
        for k in range(m):
            if part[n * m + k] < 0:
                ok = False
                break
        if ok:
            for j in range(n):
                found.push_back(x[j])
        i = n - 1
        while i >= 0 and x[i] == h[i]:
            x[i] = l[i]
            i -= 1
        if i < 0:
            break
        x[i] += 1
        for j in range(i, n):
            for k in range(m):
                part[(j + 1) * m + k] = part[j * m + k] + a[k * n + j] * x[j]
    cdef Py_ssize_t cnt = found.size() // n
    return [tuple([found[t * n + j] for j in range(n)]) for t in range(cnt)]


cdef vector[int64_t] _images(pts, vector[int64_t]& a, Py_ssize_t m, Py_ssize_t n):
    cdef vector[int64_t] out
    cdef Py_ssize_t k, j
    cdef int64_t s
    cdef vector[int64_t] p
    p.resize(n)
    for x in pts:
        for j in range(n):
            p[j] = x[j]
        for k in range(m):
            s = 0
            for j in range(n):
                s += a[k * n + j] * p[j]
            out.push_back(s)
    return out


def minkowski_cover(targets, base, A, b):
    if not targets:
        return -1
    cdef Py_ssize_t n = len(targets[0])
    cdef Py_ssize_t m = len(A)
    cdef vector[int64_t] a = _flat(A, n)
    cdef vector[int64_t] ti = _images(targets, a, m, n)
    cdef vector[int64_t] bi = _images(base, a, m, n)
    cdef vector[int64_t] bb
    for k in range(m):
        bb.push_back(b[k])
    cdef Py_ssize_t nt = len(targets), nb = len(base), t, y, k2
    cdef bint ok, fits
    for t in range(nt):
        ok = False
        for y in range(nb):
            fits = True
            for k2 in range(m):
                if ti[t * m + k2] + bb[k2] - bi[y * m + k2] < 0:
                    fits = False
                    break
            if fits:
                ok = True
                break
        if not ok:
            return t
    return -1


def cone_reduce(cands, A):
    if not cands:
        return []
    cdef Py_ssize_t n = len(cands[0])
    cdef Py_ssize_t m = len(A)
    cdef vector[int64_t] a = _flat(A, n)
    cdef vector[int64_t] im = _images(cands, a, m, n)
    cdef vector[Py_ssize_t] keep
    cdef Py_ssize_t i, h, k, q
    cdef bint red, inside
    for i in range(len(cands)):
        red = False
        for q in range(<Py_ssize_t>keep.size()):
            h = keep[q]
            inside = True
            for k in range(m):
                if im[i * m + k] - im[h * m + k] < 0:
                    inside = False
                    break
            if inside and cands[h] != cands[i]:
                red = True
                break
        if not red:
            keep.push_back(i)
    return [keep[q] for q in range(<Py_ssize_t>keep.size())]
