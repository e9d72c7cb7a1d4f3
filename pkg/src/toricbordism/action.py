"""Fixed-point combinatorics and classification predicates of a C*-action.

Toric dictionary used throughout: the action of a primitive covector v on the
toric pair of P has as fixed components the maximal faces of P on which <., v>
is constant, with linearization weight equal to that constant.  A facet divisor
flows from the component at its v-minimum to the component at its v-maximum.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import PreconditionError
from .geometry.fan import normal_fan, normally_equivalent
from .geometry.linalg import dot, primitive, vec_gcd, vsub
from .geometry.polytope import (
    Halfspace, RationalPolytope, face_polytope, faces, fmt, fmt_vec,
    slice_polytope,
)
from .geometry.split import LatticeSplit, lattice_split, project_level_set


@dataclass(frozen=True)
class FixedComponent:
    vertex_ids: frozenset[int]
    vertices: tuple[tuple[Fraction, ...], ...]
    dim: int
    weight: Fraction
    kind: str  # sink | source | inner

    def to_json(self):
        return {"kind": self.kind, "weight": fmt(self.weight), "dim": self.dim,
                "vertices": [fmt_vec(v) for v in self.vertices]}


@dataclass(frozen=True)
class FacetRange:
    index: int
    facet: Halfspace
    lo: Fraction
    hi: Fraction

    @property
    def fixed(self) -> bool:
        return self.lo == self.hi

    def covers(self, a, b) -> bool:
        return self.lo <= a and self.hi >= b

    def to_json(self):
        return {"index": self.index, "normal": list(self.facet.normal),
                "offset": fmt(self.facet.offset), "range": [fmt(self.lo), fmt(self.hi)],
                "fixed": self.fixed}


@dataclass(frozen=True)
class EdgeWitness:
    endpoints: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]
    direction: tuple[int, ...]
    increment: int

    def to_json(self):
        return {"from": fmt_vec(self.endpoints[0]), "to": fmt_vec(self.endpoints[1]),
                "direction": list(self.direction), "increment": self.increment}


@dataclass(frozen=True)
class ActionAnalysis:
    original: RationalPolytope
    polytope: RationalPolytope        # translated so that a_0 = 0 when possible
    v: tuple[int, ...]
    shift: tuple                      # translation applied to the original
    normalized: bool
    components: tuple[FixedComponent, ...]
    critical_values: tuple[Fraction, ...]
    sink_id: int
    source_id: int
    facet_ranges: tuple[FacetRange, ...]
    equalized_at_sink: bool
    equalized_at_source: bool
    equalized_witnesses: tuple[EdgeWitness, ...]
    equalized_components: tuple[bool, ...]
    b_type: bool
    b_type_detail: dict = field(compare=False)
    admissible: tuple[bool, ...] = ()
    admissible_witnesses: tuple[tuple[int, ...], ...] = ()
    inner_fixed_facets: tuple[int, ...] = ()
    bordism_via_cells: bool = False
    bordism_via_admissible: bool = False
    q_factorial: bool = False
    non_simple_vertices: tuple = ()

    @property
    def bandwidth(self) -> Fraction:
        return self.critical_values[-1] - self.critical_values[0]

    @property
    def criticality(self) -> int:
        return len(self.critical_values) - 1

    @property
    def sink(self) -> FixedComponent:
        return self.components[self.sink_id]

    @property
    def source(self) -> FixedComponent:
        return self.components[self.source_id]

    @property
    def inner(self) -> tuple[FixedComponent, ...]:
        return tuple(c for c in self.components if c.kind == "inner")

    @property
    def bordism(self) -> bool:
        return self.bordism_via_cells and self.bordism_via_admissible

    @property
    def split(self) -> LatticeSplit:
        return lattice_split(self.v)

    def interval(self, i: int) -> tuple[Fraction, Fraction]:
        if not 0 <= i < self.criticality:
            raise PreconditionError(f"interval index {i} out of range 0..{self.criticality - 1}")
        return self.critical_values[i], self.critical_values[i + 1]

    def to_json(self):
        return {
            "v": list(self.v),
            "normalized": self.normalized,
            "shift": fmt_vec(self.shift),
            "polytope": self.polytope.to_json(),
            "components": [c.to_json() for c in self.components],
            "critical_values": [fmt(a) for a in self.critical_values],
            "bandwidth": fmt(self.bandwidth),
            "criticality": self.criticality,
            "sink": self.sink_id,
            "source": self.source_id,
            "facet_ranges": [f.to_json() for f in self.facet_ranges],
            "equalized_at_sink": self.equalized_at_sink,
            "equalized_at_source": self.equalized_at_source,
            "equalized_witnesses": [w.to_json() for w in self.equalized_witnesses],
            "equalized_components": list(self.equalized_components),
            "b_type": self.b_type,
            "b_type_detail": self.b_type_detail,
            "admissible": list(self.admissible),
            "admissible_witnesses": [list(w) for w in self.admissible_witnesses],
            "inner_fixed_facets": list(self.inner_fixed_facets),
            "bordism": self.bordism,
            "bordism_via_cells": self.bordism_via_cells,
            "bordism_via_admissible": self.bordism_via_admissible,
            "q_factorial": self.q_factorial,
            "non_simple_vertices": [fmt_vec(p) for p in self.non_simple_vertices],
        }


def check_subgroup(v: Sequence[int], rank: int) -> tuple[int, ...]:
    v = tuple(int(x) for x in v)
    if len(v) != rank:
        raise PreconditionError(f"v has length {len(v)}, polytope rank is {rank}")
    if not any(v):
        raise PreconditionError("trivial action: v = 0", "nontrivial")
    if vec_gcd(v) != 1:
        raise PreconditionError(f"v = {v} is not primitive (non-faithful action)", "faithful")
    return v


def _normalize(P: RationalPolytope, v, split: LatticeSplit):
    a0 = min(dot(p, v) for p in P.vertices)
    if a0.denominator != 1:
        return P, tuple(Fraction(0) for _ in v), False
    w = tuple(-int(a0) * x for x in split.section)
    return P.translate(w), tuple(Fraction(x) for x in w), True


def quotient_model(P: RationalPolytope, v, tau, split: LatticeSplit | None = None) -> RationalPolytope:
    """Projected slice of P at level tau: the toric model of GX at weight tau."""
    split = split or lattice_split(v)
    return project_level_set(slice_polytope(P, v, tau), split)


def face_model(P: RationalPolytope, ids, split: LatticeSplit) -> RationalPolytope:
    return project_level_set(face_polytope(P, ids), split)


def _components(P, v, fs):
    const = []
    for f in fs:
        if f.dim < 0:
            continue
        vals = {dot(P.vertices[i], v) for i in f.vertices}
        if len(vals) == 1:
            const.append((f, vals.pop()))
    maximal = [(f, w) for f, w in const
               if not any(f.vertices < g.vertices for g, _ in const)]
    maximal.sort(key=lambda t: (t[1], sorted(P.vertices[i] for i in t[0].vertices)))
    return maximal


def _edge_increments(P, v, fs, comp_ids):
    out = []
    for f in fs:
        if f.dim != 1:
            continue
        a, b = sorted(f.vertices)
        ina, inb = a in comp_ids, b in comp_ids
        if ina == inb:
            continue
        p, q = (P.vertices[a], P.vertices[b]) if ina else (P.vertices[b], P.vertices[a])
        d = primitive(vsub(q, p))
        out.append(EdgeWitness((p, q), d, int(dot(d, v))))
    return out


def analyze_action(P: RationalPolytope, v: Sequence[int]) -> ActionAnalysis:
    return _analyze(P, tuple(int(x) for x in v))


@lru_cache(maxsize=256)
def _analyze(P0: RationalPolytope, v: tuple[int, ...]) -> ActionAnalysis:
    v = check_subgroup(v, P0.rank)
    lo, hi = P0.bounds(v)
    if lo == hi:
        raise PreconditionError("trivial action: <., v> is constant on P", "nontrivial")
    split = lattice_split(v)
    P, shift, normalized = _normalize(P0, v, split)
    fs = faces(P)
    comps = _components(P, v, fs)
    weights = tuple(sorted({w for _, w in comps}))
    a0, ar = weights[0], weights[-1]
    components = []
    for f, w in comps:
        kind = "sink" if w == a0 else "source" if w == ar else "inner"
        components.append(FixedComponent(
            f.vertices, tuple(P.vertices[i] for i in sorted(f.vertices)), f.dim, w, kind))
    sink_id = next(i for i, c in enumerate(components) if c.kind == "sink")
    source_id = next(i for i, c in enumerate(components) if c.kind == "source")
    assert sum(c.kind == "sink" for c in components) == 1
    assert sum(c.kind == "source" for c in components) == 1

    ranges = []
    for k, f in enumerate(P.facets):
        ids = P.facet_vertices(k)
        vals = [dot(P.vertices[i], v) for i in ids]
        ranges.append(FacetRange(k, f, min(vals), max(vals)))

    # equalized: unit increments on edges leaving the extremal faces
    sink_edges = _edge_increments(P, v, fs, components[sink_id].vertex_ids)
    source_edges = _edge_increments(P, v, fs, components[source_id].vertex_ids)
    bad = [e for e in sink_edges + source_edges if abs(e.increment) != 1]
    eq_sink = all(abs(e.increment) == 1 for e in sink_edges)
    eq_source = all(abs(e.increment) == 1 for e in source_edges)
    eq_all = tuple(all(abs(e.increment) == 1 for e in _edge_increments(P, v, fs, c.vertex_ids))
                   for c in components)

    # B-type: near-extremal quotients against extremal components
    r = len(weights) - 1
    low_tau = (weights[0] + weights[1]) / 2
    high_tau = (weights[r - 1] + weights[r]) / 2
    low_q = quotient_model(P, v, low_tau, split)
    high_q = quotient_model(P, v, high_tau, split)
    sink_m = face_model(P, components[sink_id].vertex_ids, split)
    source_m = face_model(P, components[source_id].vertex_ids, split)
    low_ok = normally_equivalent(low_q, sink_m)
    high_ok = normally_equivalent(high_q, source_m)
    detail = {
        "sink": {"level": fmt(low_tau), "quotient_fan": normal_fan(low_q).to_json(),
                 "component_fan": normal_fan(sink_m).to_json(), "equivalent": low_ok},
        "source": {"level": fmt(high_tau), "quotient_fan": normal_fan(high_q).to_json(),
                   "component_fan": normal_fan(source_m).to_json(), "equivalent": high_ok},
    }
    b_type = low_ok and high_ok

    # admissibility per interval; pointwise-fixed inner facets never cover
    inner_fixed = tuple(fr.index for fr in ranges if fr.fixed and a0 < fr.lo < ar)
    adm, wit = [], []
    for i in range(r):
        a, b = weights[i], weights[i + 1]
        fails = tuple(fr.index for fr in ranges
                      if not (fr.fixed and fr.lo in (a0, ar)) and not fr.covers(a, b))
        adm.append(not fails)
        wit.append(fails)

    # path A: every moving facet flows from sink to source, no inner fixed divisor
    moving = [fr for fr in ranges if not fr.fixed]
    cells_ok = (b_type and not inner_fixed
                and all(fr.lo == a0 and fr.hi == ar for fr in moving))
    adm_ok = b_type and all(adm)

    non_simple = tuple(P.vertices[i] for i in range(len(P.vertices))
                       if len(P.incident_facets(i)) != P.dim)
    return ActionAnalysis(
        original=P0, polytope=P, v=v, shift=shift, normalized=normalized,
        components=tuple(components), critical_values=weights,
        sink_id=sink_id, source_id=source_id, facet_ranges=tuple(ranges),
        equalized_at_sink=eq_sink, equalized_at_source=eq_source,
        equalized_witnesses=tuple(bad), equalized_components=eq_all,
        b_type=b_type, b_type_detail=detail,
        admissible=tuple(adm), admissible_witnesses=tuple(wit),
        inner_fixed_facets=inner_fixed,
        bordism_via_cells=cells_ok, bordism_via_admissible=adm_ok,
        q_factorial=not non_simple, non_simple_vertices=non_simple,
    )


# --- predicate front ends -----------------------------------------------------

def is_equalized_at_extremes(P, v) -> tuple[bool, bool, tuple[EdgeWitness, ...]]:
    a = analyze_action(P, v)
    return a.equalized_at_sink, a.equalized_at_source, a.equalized_witnesses


def is_b_type(P, v) -> bool:
    return analyze_action(P, v).b_type


def admissible_quotients(P, v) -> tuple[bool, ...]:
    return analyze_action(P, v).admissible


def is_bordism(P, v) -> bool:
    a = analyze_action(P, v)
    if a.bordism_via_cells != a.bordism_via_admissible:
        from .errors import VerificationError
        raise VerificationError("bordism code paths disagree")
    return a.bordism


def is_q_factorial(P: RationalPolytope) -> bool:
    return all(len(P.incident_facets(i)) == P.dim for i in range(len(P.vertices)))


def non_admissible_is_prefix_suffix(adm: Sequence[bool]) -> bool:
    """The False entries form an initial segment plus a final segment."""
    n = len(adm)
    i = 0
    while i < n and not adm[i]:
        i += 1
    j = n
    while j > i and not adm[j - 1]:
        j -= 1
    return all(adm[i:j])


def extend_divisor(P: RationalPolytope, v, i: int, slice_facet) -> tuple[int, Halfspace]:
    """The facet of P whose slice in the i-th geometric quotient is ``slice_facet``.

    ``slice_facet`` is a facet index or a Halfspace of the projected quotient
    polytope at the interval midpoint.  Returns (index, facet) in the analysed
    (normalized) polytope.
    """
    a = analyze_action(P, v)
    if not a.bordism:
        raise PreconditionError("extension maps need a bordism", "bordism")
    lo, hi = a.interval(i)
    tau = (lo + hi) / 2
    Q = a.polytope
    split = a.split
    S = slice_polytope(Q, a.v, tau)
    model = project_level_set(S, split)
    if isinstance(slice_facet, int):
        target = model.facets[slice_facet]
    else:
        target = slice_facet
    want = frozenset(p for p in model.vertices if target.value(p) == 0)
    if target not in model.facets:
        raise PreconditionError("not a facet of the geometric quotient")
    for fr in a.facet_ranges:
        if fr.fixed:
            continue
        on = frozenset(split.project(p) for p in S.vertices if fr.facet.value(p) == 0)
        if on == want:
            return fr.index, fr.facet
    raise PreconditionError("no facet of P restricts to this facet (not admissible)", "admissible")
