"""Polyhedral cones, Hilbert bases and generation degrees of polytope semigroups."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .. import kernels
from .dd import NotPointedError, extreme_rays
from .linalg import (
    canonical_subspace, denominator_lcm, dot, in_lattice_coords, nullspace,
    primitive, project_onto_span, rank as mat_rank, rref, saturate,
)
from .polytope import RationalPolytope, lattice_points


@dataclass(frozen=True)
class PolyCone:
    rank: int
    generators: tuple[tuple[int, ...], ...]
    halfspaces: tuple[tuple[int, ...], ...]
    equations: tuple[tuple[int, ...], ...]
    pointed: bool
    dim: int

    def contains(self, x: Sequence) -> bool:
        return (all(dot(h, x) >= 0 for h in self.halfspaces)
                and all(dot(e, x) == 0 for e in self.equations))

    def interior_grading(self) -> tuple[int, ...]:
        """A linear form positive on the cone minus the origin (pointed cones)."""
        if not self.pointed:
            raise NotPointedError("no positive grading on a non-pointed cone")
        g = [0] * self.rank
        for h in self.halfspaces:
            g = [a + b for a, b in zip(g, h)]
        return tuple(g)

    def to_json(self):
        return {
            "rank": self.rank,
            "generators": [list(g) for g in self.generators],
            "halfspaces": [list(h) for h in self.halfspaces],
            "equations": [list(e) for e in self.equations],
            "pointed": self.pointed,
        }


def cone_from_generators(gens: Sequence[Sequence], rank: int | None = None) -> PolyCone:
    gs = sorted(set(primitive(g) for g in gens if any(g)))
    n = rank if rank is not None else (len(gens[0]) if gens else 0)
    if not gs:
        eqs = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return PolyCone(n, (), (), eqs, True, 0)
    span = canonical_subspace(gs)
    k = len(span)
    _, piv = rref(span)
    eqs = tuple(nullspace(span, n)) if k < n else ()
    proj = [tuple(g[j] for j in piv) for g in gs]
    dual = extreme_rays(proj, k)
    hs = []
    for h in dual:
        normal = [Fraction(0)] * n
        for j, c in zip(piv, h):
            normal[j] = Fraction(c)
        if k < n:
            normal = project_onto_span(normal, span)
        hs.append(primitive(normal))
    hs = sorted(set(hs))
    pointed = bool(hs) and mat_rank(hs) == k
    if pointed:
        ext = []
        for g in gs:
            tight = [h for h in hs if dot(h, g) == 0]
            if k == 1 or (tight and mat_rank(tight) == k - 1):
                ext.append(g)
        gs = ext
    return PolyCone(n, tuple(gs), tuple(hs), eqs, pointed, k)


def cone_from_halfspaces(hs: Sequence[Sequence], rank: int, equations=()) -> PolyCone:
    rows = [primitive(h) for h in hs if any(h)]
    for e in equations:
        r = primitive(e)
        rows += [r, tuple(-x for x in r)]
    rays = extreme_rays(rows, rank)
    return cone_from_generators(rays, rank)


def cone_over(P: RationalPolytope, height: int = 1) -> PolyCone:
    """cone(P x {1}) in rank + 1."""
    gens = []
    for v in P.vertices:
        q = denominator_lcm(v)
        gens.append(tuple(int(x * q) for x in v) + (q,))
    return cone_from_generators(gens, P.rank + 1)


def hilbert_basis(C: PolyCone) -> list[tuple[int, ...]]:
    """Minimal generating set of C intersected with Z^n, sorted lexicographically."""
    if not C.pointed:
        raise NotPointedError("Hilbert basis needs a pointed cone")
    if not C.generators:
        return []
    if C.dim < C.rank:
        B = saturate(C.generators)
        sub_gens = [in_lattice_coords(g, B) for g in C.generators]
        sub = cone_from_generators(sub_gens, len(B))
        out = []
        for y in hilbert_basis(sub):
            out.append(tuple(sum(c * b[j] for c, b in zip(y, B)) for j in range(C.rank)))
        return sorted(out)
    H = [list(h) for h in C.halfspaces]
    grading = C.interior_grading()
    lo = [sum(min(0, r[j]) for r in C.generators) for j in range(C.rank)]
    hi = [sum(max(0, r[j]) for r in C.generators) for j in range(C.rank)]
    cands = [x for x in kernels.box_points(H, [0] * len(H), lo, hi) if any(x)]
    cands.sort(key=lambda x: (dot(grading, x), x))
    keep = kernels.cone_reduce(cands, H)
    return sorted(cands[i] for i in keep)


def degree(x: Sequence, grading: Sequence) -> int:
    return dot(grading, x)


@dataclass(frozen=True)
class GenerationDegree:
    degree: int
    generators: tuple[tuple[int, ...], ...]
    checked_up_to: int
    failures: tuple = field(default=())

    def to_json(self):
        return {"degree": self.degree,
                "generators": [list(g) for g in self.generators],
                "checked_up_to": self.checked_up_to}


def idp_witness(R: RationalPolytope, up_to: int):
    """First (k, x) with x in kR not a sum of a point of R and a point of (k-1)R."""
    base = lattice_points(R)
    for k in range(2, up_to + 1):
        targets = lattice_points(R.dilate(k))
        A, b = R.dilate(k - 1).integer_rows(with_equations=False)
        if not A:
            continue
        t = kernels.minkowski_cover(targets, base, A, b)
        if t >= 0:
            return k, targets[t]
    return None


def generation_degree(P: RationalPolytope) -> GenerationDegree:
    """Smallest d' such that the Veronese of the cone over P is generated in degree one.

    Equivalently: d'P is a lattice polytope with the integer decomposition
    property.  Checking decompositions up to dim(P) suffices because every
    Hilbert basis element of the cone over a lattice polytope has height at most
    dim(P).
    """
    q = denominator_lcm(x for v in P.vertices for x in v)
    d = P.dim
    bound = q * max(d - 1, 1)
    top = max(d, 2)
    fails = []
    for dp in range(1, bound + 1):
        R = P.dilate(dp)
        if not R.is_lattice:
            continue
        w = idp_witness(R, top)
        if w is None:
            gens = tuple(tuple(x) + (dp,) for x in lattice_points(R))
            return GenerationDegree(dp, gens, top, tuple(fails))
        fails.append((dp, w))
    raise AssertionError("generation degree exceeded the theoretical bound")
