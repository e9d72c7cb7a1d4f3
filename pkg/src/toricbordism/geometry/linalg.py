"""Exact linear algebra over Z and Q.

Matrices are lists of rows; entries are ``int`` or ``Fraction``.  Nothing here
touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Vec = tuple
Matrix = list


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vscale(c, a):
    return tuple(c * x for x in a)


def vec_gcd(v: Iterable[int]) -> int:
    return reduce(gcd, (int(x) for x in v), 0)


def denominator_lcm(v: Iterable) -> int:
    out = 1
    for x in v:
        out = lcm(out, frac(x).denominator)
    return out


def integral(v: Iterable) -> bool:
    return all(frac(x).denominator == 1 for x in v)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Positive rescaling of a rational vector to a primitive integer vector."""
    q = denominator_lcm(v)
    w = [int(frac(x) * q) for x in v]
    g = vec_gcd(w)
    if g == 0:
        return tuple(w)
    return tuple(x // g for x in w)


def is_primitive(v: Sequence[int]) -> bool:
    return integral(v) and vec_gcd(v) == 1


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q.  Returns (nonzero rows, pivot columns)."""
    m = [[frac(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Indices of a greedy maximal independent subset, in input order."""
    chosen: list[int] = []
    basis: list[list[Fraction]] = []
    for i, r in enumerate(rows):
        cand = basis + [[frac(x) for x in r]]
        if len(rref(cand)[1]) == len(cand):
            basis = cand
            chosen.append(i)
    return chosen


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Canonical integer basis of the rational kernel {x : rows . x = 0}.

    The basis is the primitive rescaling of the standard RREF kernel basis, so
    it depends only on the row space.
    """
    red, piv = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in zip(red, piv):
            x[p] = -r[f]
        out.append(primitive(x))
    return out


def canonical_subspace(rows: Sequence[Sequence]) -> tuple[tuple[int, ...], ...]:
    """Canonical form of a row space: primitive rescaled RREF rows."""
    red, _ = rref(rows) if rows else ([], [])
    return tuple(primitive(r) for r in red)


def inverse(mat: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [[frac(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red]


def matvec(mat: Sequence[Sequence], v: Sequence):
    return tuple(dot(r, v) for r in mat)


def transpose(mat: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*mat)]


def solve(mat: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """One solution of mat . x = b over Q, or None when inconsistent."""
    ncols = len(mat[0])
    aug = [[frac(x) for x in r] + [frac(y)] for r, y in zip(mat, b)]
    red, piv = rref(aug)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for r, p in zip(red, piv):
        x[p] = r[ncols]
    return tuple(x)


def project_onto_span(vec: Sequence, basis: Sequence[Sequence]) -> tuple[Fraction, ...]:
    """Orthogonal projection of vec onto the row span of basis."""
    if not basis:
        return tuple(Fraction(0) for _ in vec)
    g = [[frac(dot(a, b)) for b in basis] for a in basis]
    rhs = [frac(dot(a, vec)) for a in basis]
    coeff = solve(g, rhs)
    assert coeff is not None
    out = [Fraction(0)] * len(vec)
    for c, a in zip(coeff, basis):
        for j, x in enumerate(a):
            out[j] += c * x
    return tuple(out)


# --- integer lattices -------------------------------------------------------

def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hnf_rows(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Output rows are a basis, echelon with positive pivots and entries above each
    pivot reduced into [0, pivot).  Canonical for the lattice.
    """
    m = [list(map(int, r)) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    out: list[list[int]] = []
    for c in range(ncols):
        live = [r for r in m if r[c] != 0]
        if not live:
            continue
        rest = [r for r in m if r[c] == 0]
        piv = live[0]
        for r in live[1:]:
            g, s, t = xgcd(piv[c], r[c])
            a, b = piv[c] // g, r[c] // g
            new_piv = [s * x + t * y for x, y in zip(piv, r)]
            other = [b * x - a * y for x, y in zip(piv, r)]
            piv = new_piv
            if any(other):
                rest.append(other)
        if piv[c] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        m = [r for r in rest if any(r)]
    # back-reduce entries above pivots
    for i in range(len(out)):
        pc = next(k for k, x in enumerate(out[i]) if x != 0)
        for j in range(i):
            q = out[j][pc] // out[i][pc]
            if q:
                out[j] = [x - q * y for x, y in zip(out[j], out[i])]
    return [tuple(r) for r in out]


def hnf_reduce(vec: Sequence[int], basis_hnf: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Canonical representative of vec modulo the lattice given in HNF."""
    w = list(vec)
    for row in basis_hnf:
        pc = next(k for k, x in enumerate(row) if x != 0)
        q = w[pc] // row[pc]
        if q:
            w = [x - q * y for x, y in zip(w, row)]
    return tuple(w)


def row_column_reduce(v: Sequence[int]) -> tuple[int, list[list[int]]]:
    """Unimodular C with v . C = (g, 0, ..., 0), g = gcd(v) >= 0."""
    n = len(v)
    cols = [[int(i == j) for i in range(n)] for j in range(n)]  # columns of C
    vals = [int(x) for x in v]
    for j in range(1, n):
        if vals[j] == 0:
            continue
        g, s, t = xgcd(vals[0], vals[j])
        a, b = vals[0] // g, vals[j] // g
        c0 = [s * x + t * y for x, y in zip(cols[0], cols[j])]
        cj = [-b * x + a * y for x, y in zip(cols[0], cols[j])]
        cols[0], cols[j] = c0, cj
        vals[0], vals[j] = g, 0
    if vals[0] < 0:
        cols[0] = [-x for x in cols[0]]
        vals[0] = -vals[0]
    return vals[0], transpose(cols)


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    """HNF basis of the lattice {x in Z^n : rows . x = 0}."""
    # kernel lattice = saturation of the rational kernel
    rat = nullspace(rows, ncols)
    if not rat:
        return []
    return saturate(rat)


def saturate(gens: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """HNF basis of (R-span of gens) intersected with Z^n."""
    n = len(gens[0])
    span = canonical_subspace(gens)
    k = len(span)
    if k == 0:
        return []
    # the saturated lattice is the kernel of a basis of the orthogonal complement;
    # compute it by column-reducing the complement matrix
    comp = nullspace(span, n)
    if not comp:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    cur = [list(r) for r in comp]
    ops = [[int(i == j) for j in range(n)] for i in range(n)]  # columns as rows: ops[j] = column j
    # column-reduce the complement matrix to echelon; track column operations
    colvecs = [[r[j] for r in cur] + ops[j] for j in range(n)]
    m = len(cur)
    done = 0
    for row in range(m):
        live = [j for j in range(done, n) if colvecs[j][row] != 0]
        if not live:
            continue
        # bring gcd into position `done`
        first = live[0]
        colvecs[done], colvecs[first] = colvecs[first], colvecs[done]
        for j in range(done + 1, n):
            if colvecs[j][row] == 0:
                continue
            a, b = colvecs[done][row], colvecs[j][row]
            g, s, t = xgcd(a, b)
            aa, bb = a // g, b // g
            c0 = [s * x + t * y for x, y in zip(colvecs[done], colvecs[j])]
            cj = [-bb * x + aa * y for x, y in zip(colvecs[done], colvecs[j])]
            colvecs[done], colvecs[j] = c0, cj
        done += 1
    kern = [tuple(c[m:]) for c in colvecs[done:]]
    return hnf_rows(kern)


def in_lattice_coords(vec: Sequence[int], basis: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Integer coordinates of vec in a lattice basis (rows)."""
    sol = solve(transpose(basis), vec)
    if sol is None or not integral(sol):
        raise ValueError("vector not in lattice")
    return tuple(int(x) for x in sol)
