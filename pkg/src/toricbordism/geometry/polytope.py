"""Rational and lattice polytopes with both representations populated.

A polytope is stored by its vertices (lexicographic), its facets relative to the
affine span (primitive inward normals, rational offsets, meaning
<u, normal> + offset >= 0) and the equations of the span.  Facet normals of a
lower-dimensional polytope are taken inside the direction space of the span,
which makes them canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Sequence

from .. import kernels
from .dd import extreme_rays
from .linalg import (
    canonical_subspace, denominator_lcm, dot, frac, integral, nullspace, primitive,
    project_onto_span, rank as mat_rank, rref, vsub,
)


class GeometryError(ValueError):
    pass


class EmptyError(GeometryError):
    pass


class UnboundedError(GeometryError):
    pass


@dataclass(frozen=True, order=True)
class Halfspace:
    normal: tuple[int, ...]
    offset: Fraction

    def value(self, u: Sequence) -> Fraction:
        return dot(self.normal, u) + self.offset

    def scaled_rows(self) -> tuple[list[int], int]:
        q = self.offset.denominator
        return [x * q for x in self.normal], int(self.offset * q)

    def to_json(self):
        return {"normal": list(self.normal), "offset": fmt(self.offset)}


def fmt(x):
    """JSON form of a rational: int when integral, else "p/q"."""
    x = frac(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_vec(v):
    return [fmt(x) for x in v]


@dataclass(frozen=True, eq=False)
class RationalPolytope:
    rank: int
    vertices: tuple[tuple[Fraction, ...], ...]
    facets: tuple[Halfspace, ...]
    equations: tuple[Halfspace, ...]
    dim: int

    def __eq__(self, other):
        if not isinstance(other, RationalPolytope):
            return NotImplemented
        return self.rank == other.rank and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.rank, self.vertices))

    def __repr__(self):
        vs = ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"{type(self).__name__}(dim={self.dim}, vertices=[{vs}])"

    @property
    def is_lattice(self) -> bool:
        return all(integral(v) for v in self.vertices)

    @property
    def full_dimensional(self) -> bool:
        return self.dim == self.rank

    def contains(self, u) -> bool:
        return (all(f.value(u) >= 0 for f in self.facets)
                and all(e.value(u) == 0 for e in self.equations))

    def direction_space(self) -> tuple[tuple[int, ...], ...]:
        """Canonical basis of the linear space parallel to the affine span."""
        if self.dim == 0:
            return ()
        p0 = self.vertices[0]
        return canonical_subspace([vsub(p, p0) for p in self.vertices[1:]])

    def dilate(self, m) -> "RationalPolytope":
        m = frac(m)
        if m <= 0:
            raise GeometryError("dilation factor must be positive")
        verts = tuple(tuple(m * x for x in v) for v in self.vertices)
        facets = tuple(Halfspace(f.normal, f.offset * m) for f in self.facets)
        eqs = tuple(Halfspace(e.normal, e.offset * m) for e in self.equations)
        return _make(self.rank, verts, facets, eqs, self.dim)

    def translate(self, w) -> "RationalPolytope":
        w = tuple(frac(x) for x in w)
        verts = tuple(tuple(a + b for a, b in zip(v, w)) for v in self.vertices)
        facets = tuple(Halfspace(f.normal, f.offset - dot(f.normal, w)) for f in self.facets)
        eqs = tuple(Halfspace(e.normal, e.offset - dot(e.normal, w)) for e in self.equations)
        return _make(self.rank, verts, facets, eqs, self.dim)

    def bounds(self, v) -> tuple[Fraction, Fraction]:
        vals = [dot(p, v) for p in self.vertices]
        return min(vals), max(vals)

    def integer_rows(self, with_equations: bool = True) -> tuple[list[list[int]], list[int]]:
        A, b = [], []
        for f in self.facets:
            r, c = f.scaled_rows()
            A.append(r)
            b.append(c)
        if with_equations:
            for e in self.equations:
                r, c = e.scaled_rows()
                A.append(r)
                b.append(c)
                A.append([-x for x in r])
                b.append(-c)
        return A, b

    def incident_facets(self, i: int) -> frozenset[int]:
        v = self.vertices[i]
        return frozenset(k for k, f in enumerate(self.facets) if f.value(v) == 0)

    def facet_vertices(self, k: int) -> frozenset[int]:
        f = self.facets[k]
        return frozenset(i for i, v in enumerate(self.vertices) if f.value(v) == 0)

    def to_json(self):
        return {
            "rank": self.rank,
            "dim": self.dim,
            "vertices": [fmt_vec(v) for v in self.vertices],
            "facets": [f.to_json() for f in self.facets],
            "equations": [e.to_json() for e in self.equations],
        }


class LatticePolytope(RationalPolytope):
    """Full-dimensional with integer vertices: a polarized toric pair."""


def _make(rank, verts, facets, eqs, dim) -> RationalPolytope:
    cls = LatticePolytope if dim == rank and all(integral(v) for v in verts) else RationalPolytope
    return cls(rank, tuple(verts), tuple(facets), tuple(eqs), dim)


# --- canonicalization -------------------------------------------------------

def canonicalize(points: Iterable[Sequence] | None = None, *, halfspaces=None,
                 equations=None, rank: int | None = None) -> RationalPolytope:
    """Build a canonical polytope from points or from halfspaces.

    ``halfspaces`` and ``equations`` are (normal, offset) pairs read as
    <u, normal> + offset >= 0 (resp. = 0).
    """
    if points is not None:
        pts = [tuple(frac(x) for x in p) for p in points]
        if not pts:
            raise EmptyError("no points given")
        n = len(pts[0]) if rank is None else rank
        if any(len(p) != n for p in pts):
            raise GeometryError("inconsistent point dimensions")
        return _from_points(pts, n)
    hs = [(tuple(frac(x) for x in a), frac(c)) for a, c in (halfspaces or [])]
    eqs = [(tuple(frac(x) for x in a), frac(c)) for a, c in (equations or [])]
    if rank is None:
        if not hs and not eqs:
            raise GeometryError("empty input")
        rank = len((hs or eqs)[0][0])
    return _from_halfspaces(hs, eqs, rank)


def _from_points(pts, n) -> RationalPolytope:
    pts = sorted(set(pts))
    if n == 0:
        return _make(0, [()], [], [], 0)
    p0 = pts[0]
    diffs = [vsub(p, p0) for p in pts[1:]]
    dirs, piv = rref(diffs) if diffs else ([], [])
    d = len(piv)
    eq_normals = nullspace(dirs, n) if d < n else []
    eqs = [Halfspace(e, -dot(e, p0)) for e in eq_normals]
    if d == 0:
        return _make(n, [p0], [], sorted(eqs), 0)
    ys = [tuple(p[j] for j in piv) for p in pts]
    gens = []
    for y in ys:
        q = denominator_lcm(y)
        gens.append(tuple(int(x * q) for x in y) + (q,))
    dual = extreme_rays(gens, d + 1)
    facets = []
    tight_rows = []
    for h in dual:
        a = h[:d]
        normal = [Fraction(0)] * n
        for j, c in zip(piv, a):
            normal[j] = Fraction(c)
        if d < n:
            normal = project_onto_span(normal, dirs)
        nv = primitive(normal)
        off = -min(dot(nv, p) for p in pts)
        facets.append(Halfspace(nv, off))
        tight_rows.append(a)
    facets = sorted(set(facets))
    verts = []
    for p, y in zip(pts, ys):
        tight = [f.normal for f in facets if f.value(p) == 0]
        if tight and mat_rank(tight) == d:
            verts.append(p)
    return _make(n, verts, facets, sorted(eqs), d)


def _from_halfspaces(hs, eqs, n) -> RationalPolytope:
    rows = []
    for a, c in hs:
        rows.append(primitive(a + (c,)) if any(a) or c else None)
    rows = [r for r in rows if r is not None]
    for a, c in eqs:
        r = primitive(a + (c,))
        rows.append(r)
        rows.append(tuple(-x for x in r))
    # constant constraints: c >= 0 needs c >= 0
    for r in rows:
        if not any(r[:n]) and r[n] < 0:
            raise EmptyError("infeasible constant constraint")
    arow = [r[:n] for r in rows if any(r[:n])]
    full_rank = bool(arow) and mat_rank(arow) == n
    if not full_rank:
        if _feasible_reduced(rows, n):
            raise UnboundedError("region contains a line")
        raise EmptyError("empty region")
    cone_rows = rows + [tuple([0] * n + [1])]
    rays = extreme_rays(cone_rows, n + 1)
    verts = [tuple(Fraction(x, r[n]) for x in r[:n]) for r in rays if r[n] > 0]
    rec = [r for r in rays if r[n] == 0]
    if not verts:
        raise EmptyError("empty region")
    if rec:
        raise UnboundedError("region is unbounded")
    return _from_points(verts, n)


def _feasible_reduced(rows, n) -> bool:
    arow = [r[:n] for r in rows]
    red, piv = rref(arow)
    if not piv:
        return all(r[n] >= 0 for r in rows)
    sub = [(tuple(Fraction(r[j]) for j in piv), Fraction(r[n])) for r in rows]
    try:
        _from_halfspaces(sub, [], len(piv))
    except EmptyError:
        return False
    except UnboundedError:
        return True
    return True


# --- faces ------------------------------------------------------------------

@dataclass(frozen=True)
class Face:
    vertices: frozenset[int]
    facets: frozenset[int]
    dim: int


def affine_rank(pts: Sequence[Sequence]) -> int:
    if not pts:
        return -1
    p0 = pts[0]
    return mat_rank([vsub(p, p0) for p in pts[1:]]) if len(pts) > 1 else 0


def faces(P: RationalPolytope) -> list[Face]:
    """Every face once, including the empty face and P, sorted by (dim, vertices)."""
    nv = len(P.vertices)
    inc = [P.facet_vertices(k) for k in range(len(P.facets))]
    full = frozenset(range(nv))
    found = {full, frozenset()}
    frontier = [full]
    while frontier:
        nxt = []
        for S in frontier:
            for F in inc:
                T = S & F
                if T not in found:
                    found.add(T)
                    nxt.append(T)
        frontier = nxt
    out = []
    for S in found:
        act = frozenset(k for k, F in enumerate(inc) if S <= F)
        d = affine_rank([P.vertices[i] for i in sorted(S)])
        out.append(Face(S, act, d))
    out.sort(key=lambda f: (f.dim, sorted(f.vertices)))
    return out


def f_vector(P: RationalPolytope) -> tuple[int, ...]:
    fs = faces(P)
    return tuple(sum(1 for f in fs if f.dim == k) for k in range(P.dim + 1))


def face_polytope(P: RationalPolytope, face_vertices: Iterable[int]) -> RationalPolytope:
    return canonicalize([P.vertices[i] for i in sorted(face_vertices)], rank=P.rank)


# --- lattice points, slices -------------------------------------------------

def lattice_points(P: RationalPolytope) -> list[tuple[int, ...]]:
    if P.rank == 0:
        return [()]
    A, b = P.integer_rows()
    lo = [ceil(min(v[j] for v in P.vertices)) for j in range(P.rank)]
    hi = [floor(max(v[j] for v in P.vertices)) for j in range(P.rank)]
    return kernels.box_points(A, b, lo, hi)


def slice_polytope(P: RationalPolytope, v: Sequence[int], tau) -> RationalPolytope:
    """P intersected with the level set <u, v> = tau."""
    tau = frac(tau)
    lo, hi = P.bounds(v)
    if not lo <= tau <= hi:
        raise GeometryError(f"level {tau} outside the v-range [{lo}, {hi}]")
    hs = [(f.normal, f.offset) for f in P.facets]
    eqs = [(e.normal, e.offset) for e in P.equations] + [(tuple(v), -tau)]
    return canonicalize(halfspaces=hs, equations=eqs, rank=P.rank)


def slab(P: RationalPolytope, v: Sequence[int], lo, hi) -> RationalPolytope:
    """P intersected with lo <= <u, v> <= hi."""
    lo, hi = frac(lo), frac(hi)
    hs = [(f.normal, f.offset) for f in P.facets]
    hs.append((tuple(v), -lo))
    hs.append((tuple(-x for x in v), hi))
    eqs = [(e.normal, e.offset) for e in P.equations]
    return canonicalize(halfspaces=hs, equations=eqs, rank=P.rank)


def argmin(P: RationalPolytope, w: Sequence) -> tuple[Fraction, frozenset[int]]:
    vals = [dot(p, w) for p in P.vertices]
    m = min(vals)
    return m, frozenset(i for i, x in enumerate(vals) if x == m)


def from_json(obj) -> RationalPolytope:
    rank = obj.get("rank")
    if "vertices" in obj:
        return canonicalize(obj["vertices"], rank=rank)
    if "halfspaces" in obj:
        hs = [(h["normal"], h["offset"]) for h in obj["halfspaces"]]
        eqs = [(h["normal"], h["offset"]) for h in obj.get("equations", [])]
        return canonicalize(halfspaces=hs, equations=eqs, rank=rank)
    raise GeometryError("polytope needs 'vertices' or 'halfspaces'")
