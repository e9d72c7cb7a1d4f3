"""Normal fans, computed inside the affine span of the polytope.

The maximal cone at a vertex is spanned by the inward normals of the incident
facets (plus the lineality space orthogonal to the span).  Two polytopes are
normally equivalent exactly when they have the same span direction and the same
collection of such normal sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import canonical_subspace
from .polytope import GeometryError, RationalPolytope, argmin


@dataclass(frozen=True)
class Fan:
    rank: int
    rays: tuple[tuple[int, ...], ...]
    cones: tuple[frozenset[int], ...]       # ray indices, one entry per maximal cone
    lineality: tuple[tuple[int, ...], ...]  # canonical basis
    complete: bool = True

    def signature(self):
        return (self.lineality,
                frozenset(frozenset(self.rays[i] for i in c) for c in self.cones))

    def ray_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self.rays)

    def same_as(self, other: "Fan") -> bool:
        return self.rank == other.rank and self.signature() == other.signature()

    def maximal_cones(self):
        from .cone import cone_from_generators
        lin = [tuple(x) for x in self.lineality]
        lin += [tuple(-x for x in l) for l in self.lineality]
        return [cone_from_generators([self.rays[i] for i in sorted(c)] + lin, self.rank)
                for c in self.cones]

    def to_json(self):
        return {
            "rays": [list(r) for r in self.rays],
            "cones": sorted(sorted(c) for c in self.cones),
            "lineality": [list(x) for x in self.lineality],
        }


def normal_fan(P: RationalPolytope) -> Fan:
    rays = tuple(sorted(set(f.normal for f in P.facets)))
    index = {r: i for i, r in enumerate(rays)}
    cones = []
    for i in range(len(P.vertices)):
        cones.append(frozenset(index[P.facets[k].normal] for k in P.incident_facets(i)))
    lin = canonical_subspace([e.normal for e in P.equations]) if P.equations else ()
    return Fan(P.rank, rays, tuple(sorted(set(cones), key=sorted)), lin)


def _check_rank(P: RationalPolytope, Q: RationalPolytope):
    if P.rank != Q.rank:
        raise GeometryError(f"rank mismatch: {P.rank} vs {Q.rank}")


def normally_equivalent(P: RationalPolytope, Q: RationalPolytope) -> bool:
    _check_rank(P, Q)
    if P.dim != Q.dim or P.direction_space() != Q.direction_space():
        return False
    return normal_fan(P).signature() == normal_fan(Q).signature()


def refines(P: RationalPolytope, Q: RationalPolytope) -> bool:
    """True when every normal cone of P sits inside a normal cone of Q."""
    _check_rank(P, Q)
    dp = P.direction_space()
    dq = Q.direction_space()
    if dq and canonical_subspace(list(dp) + list(dq)) != dp:
        return False
    for i in range(len(P.vertices)):
        common = None
        for k in P.incident_facets(i):
            _, S = argmin(Q, P.facets[k].normal)
            common = S if common is None else common & S
            if not common:
                return False
    return True


def cone_of(P: RationalPolytope, w: Sequence) -> frozenset[int]:
    """Vertices of P whose normal cone contains w (the face minimizing w)."""
    return argmin(P, w)[1]


def coarsening_witness(P: RationalPolytope, Q: RationalPolytope):
    """First vertex of P whose normal cone is not inside one of Q, else None."""
    for i in range(len(P.vertices)):
        common = None
        for k in P.incident_facets(i):
            S = argmin(Q, P.facets[k].normal)[1]
            common = S if common is None else common & S
        if common is not None and not common:
            return P.vertices[i]
    return None
