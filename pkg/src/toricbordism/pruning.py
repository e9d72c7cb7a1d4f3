"""Pruning: truncation of the weight interval to [rho_-, rho_+], with certificates.

The pruned variety is the toric variety of the slab polytope
P cap {rho_- <= <., v> <= rho_+}.  The Veronese scaling of the construction is
represented by the certificate (d, d') instead of a materialized dilate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .action import ActionAnalysis, analyze_action, quotient_model
from .errors import PreconditionError, VerificationError
from .geometry.cone import (
    GenerationDegree, PolyCone, cone_from_halfspaces, cone_over, generation_degree,
    hilbert_basis,
)
from .geometry.fan import normally_equivalent
from .geometry.linalg import dot, frac, primitive
from .geometry.polytope import (
    RationalPolytope, fmt, fmt_vec, slab, slice_polytope,
)
from .oracle import SemigroupCheck, enumerate_level, semigroup_generated_check

CERTIFICATE_DEGREE_CAP = 16
GORDAN_MAX_GENERATORS = 5   # the box search grows steeply with the cone dimension


@dataclass(frozen=True)
class PruneSpec:
    rho_minus: Fraction
    rho_plus: Fraction
    h: int
    j: int
    d: int
    boundary: tuple[bool, bool]   # rho equal to the extreme critical value

    def to_json(self):
        return {"rho_minus": fmt(self.rho_minus), "rho_plus": fmt(self.rho_plus),
                "h": self.h, "j": self.j, "d": self.d, "boundary": list(self.boundary)}


@dataclass(frozen=True)
class GordanCertificate:
    hilbert_basis: tuple[tuple[int, ...], ...]
    generation: GenerationDegree
    bound: int
    check: SemigroupCheck
    gordan_cone: PolyCone | None = None
    gordan_basis: tuple = ()

    @property
    def max_basis_degree(self) -> int:
        return max(x[-1] for x in self.hilbert_basis)

    def to_json(self):
        out = {"hilbert_basis": [list(x) for x in self.hilbert_basis],
               "generation_degree": self.generation.degree,
               "bound": self.bound, "check": self.check.to_json()}
        if self.gordan_cone is not None:
            out["gordan_cone"] = self.gordan_cone.to_json()
            out["gordan_basis"] = [list(x) for x in self.gordan_basis]
        return out


@dataclass(frozen=True)
class PrunedPair:
    polytope: RationalPolytope
    integral_model: RationalPolytope | None
    source: RationalPolytope
    v: tuple[int, ...]
    spec: PruneSpec
    certificate: GordanCertificate
    sink_facet: int
    source_facet: int

    def to_json(self):
        return {"polytope": self.polytope.to_json(),
                "integral_model": self.integral_model.to_json() if self.integral_model else None,
                "provenance": {"source": self.source.to_json(), "v": list(self.v),
                               "spec": self.spec.to_json()},
                "certificate": self.certificate.to_json(),
                "slice_facets": {"sink": self.sink_facet, "source": self.source_facet}}


def pruned_from_json(obj) -> PrunedPair:
    """Rebuild a pruned pair from its provenance and check it against the stored polytope."""
    from .geometry.polytope import from_json

    prov = obj["provenance"]
    pr = prune(from_json(prov["source"]), prov["v"], prov["spec"]["rho_minus"],
               prov["spec"]["rho_plus"])
    if pr.polytope != from_json(obj["polytope"]):
        raise VerificationError("stored pruned polytope does not match its provenance")
    return pr


def prune_spec(a: ActionAnalysis, rho_minus, rho_plus) -> PruneSpec:
    rm, rp = frac(rho_minus), frac(rho_plus)
    crit = a.critical_values
    a0, ar = crit[0], crit[-1]
    if rm >= rp:
        raise PreconditionError(f"need rho_- < rho_+, got {fmt(rm)} >= {fmt(rp)}", "prune_order")
    if rm < a0 or rp > ar:
        raise PreconditionError(f"rho outside the weight range [{fmt(a0)}, {fmt(ar)}]", "prune_range")
    for rho in (rm, rp):
        if rho in crit[1:-1]:
            raise PreconditionError(f"rho = {fmt(rho)} is an inner critical value", "prune_interior")
    h = max(i for i in range(len(crit) - 1) if crit[i] <= rm)
    j = min(i for i in range(len(crit) - 1) if crit[i + 1] >= rp)
    d = lcm(rm.denominator, rp.denominator)
    return PruneSpec(rm, rp, h, j, d, (rm == a0, rp == ar))


def gordan_cone(weights: Sequence[int], rho_minus, rho_plus) -> PolyCone:
    """Exponent vectors a >= 0 with rho_- <= (sum w_i a_i)/(sum a_i) <= rho_+."""
    rm, rp = frac(rho_minus), frac(rho_plus)
    n = len(weights)
    rows = [primitive([w - rm for w in weights]) if any(w != rm for w in weights) else None,
            primitive([rp - w for w in weights]) if any(w != rp for w in weights) else None]
    rows = [r for r in rows if r is not None]
    rows += [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return cone_from_halfspaces(rows, n)


def certificate_for(T: RationalPolytope, weights=None, spec: PruneSpec | None = None) -> GordanCertificate:
    C = cone_over(T)
    hb = tuple(hilbert_basis(C))
    gd = generation_degree(T)
    bound = min(2 * gd.degree * max(x[-1] for x in hb), CERTIFICATE_DEGREE_CAP)
    check = semigroup_generated_check(hb, bound, cone=C)
    gc, gb = None, ()
    if weights is not None and spec is not None and 0 < len(weights) <= GORDAN_MAX_GENERATORS:
        gc = gordan_cone(weights, spec.rho_minus, spec.rho_plus)
        gb = tuple(hilbert_basis(gc))
    return GordanCertificate(hb, gd, bound, check, gc, gb)


def _slice_facet(T: RationalPolytope, v, level) -> int:
    for k, f in enumerate(T.facets):
        if all(dot(T.vertices[i], v) == level for i in T.facet_vertices(k)):
            return k
    return -1


def prune(P: RationalPolytope, v, rho_minus, rho_plus) -> PrunedPair:
    a = analyze_action(P, v)
    spec = prune_spec(a, rho_minus, rho_plus)
    T = slab(a.polytope, a.v, spec.rho_minus, spec.rho_plus)
    D = T.dilate(spec.d)
    # weights of the vertex generators, shifted so that the sink has weight 0
    weights = [dot(x, a.v) - a.critical_values[0] for x in a.polytope.vertices]
    if not all(w.denominator == 1 for w in weights):
        weights = None
    cert = certificate_for(T, weights, spec)
    return PrunedPair(T, D if D.is_lattice else None, a.polytope, a.v, spec, cert,
                      _slice_facet(T, a.v, spec.rho_minus), _slice_facet(T, a.v, spec.rho_plus))


# --- the theorem, step by step ----------------------------------------------

@dataclass(frozen=True)
class StepReport:
    steps: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return all(s["passed"] for s in self.steps)

    def step(self, k: int) -> dict:
        return self.steps[k - 1]

    def to_json(self):
        return {"passed": self.passed, "steps": list(self.steps)}


def source_bordism_criterion(a: ActionAnalysis, rm, rp):
    """Facets of the source that meet the open slab but do not span [rho_-, rho_+]."""
    out = []
    for fr in a.facet_ranges:
        if fr.hi <= rm or fr.lo >= rp:
            continue
        if fr.fixed or fr.lo > rm or fr.hi < rp:
            out.append(fr)
    return out


def _face_key(verts) -> frozenset:
    return frozenset(tuple(x) for x in verts)


def verify_pruning_theorem(P: RationalPolytope, v, pruned: PrunedPair, m_max: int = 4) -> StepReport:
    a = analyze_action(P, v)
    if a.polytope != pruned.source or a.v != pruned.v:
        raise PreconditionError("pruned pair does not come from this source", "provenance")
    spec = pruned.spec
    T = pruned.polytope
    rm, rp = spec.rho_minus, spec.rho_plus
    split = a.split
    t = analyze_action(T, a.v)
    steps = []

    # (1) extremal slices of T against the source quotients containing rho_-, rho_+
    low = quotient_model(T, a.v, rm, split)
    high = quotient_model(T, a.v, rp, split)
    crit = a.critical_values
    gz_h = quotient_model(a.polytope, a.v, (crit[spec.h] + crit[spec.h + 1]) / 2, split)
    gz_j = quotient_model(a.polytope, a.v, (crit[spec.j] + crit[spec.j + 1]) / 2, split)
    ok1 = normally_equivalent(low, gz_h) and normally_equivalent(high, gz_j)
    steps.append({"step": 1, "name": "extremal slices are the quotients GZ(h,h+1), GZ(j,j+1)",
                  "passed": ok1, "h": spec.h, "j": spec.j})

    # (2) normality via saturation up to the certificate bound
    cert = pruned.certificate
    steps.append({"step": 2, "name": "normality (saturated semigroup)",
                  "passed": cert.check.passed, "bound": cert.bound,
                  "generation_degree": cert.generation.degree,
                  "reason": "semigroups of lattice points in polytope cones are saturated"})

    # (3) birational: identical lattice data on the open slab
    mismatch = None
    checked = 0
    for m in range(1, m_max + 1):
        klo = (m * rm).__floor__() + 1
        khi = -((-m * rp).__floor__()) - 1
        for k in range(klo, khi + 1):
            checked += 1
            if enumerate_level(T, m, a.v, k) != enumerate_level(a.polytope, m, a.v, k):
                mismatch = {"m": m, "level": k}
                break
        if mismatch:
            break
    steps.append({"step": 3, "name": "equivariant birationality on the open slab",
                  "passed": mismatch is None and checked > 0, "levels_checked": checked,
                  "mismatch": mismatch})

    # (4) fixed locus: two slice facets plus the surviving inner components
    expected = {_face_key(slice_polytope(a.polytope, a.v, rm).vertices),
                _face_key(slice_polytope(a.polytope, a.v, rp).vertices)}
    expected |= {_face_key(c.vertices) for c in a.components if rm < c.weight < rp}
    got = {_face_key(c.vertices) for c in t.components}
    want_crit = [rm] + [x for x in crit if rm < x < rp] + [rp]
    ok4 = expected == got and list(t.critical_values) == want_crit
    steps.append({"step": 4, "name": "fixed locus", "passed": ok4,
                  "components": len(got), "inner": len(t.inner),
                  "critical_values": [fmt(x) for x in t.critical_values]})

    # (5) B-type
    steps.append({"step": 5, "name": "B-type", "passed": t.b_type})

    # (6) bordism against the source-side criterion
    wit = source_bordism_criterion(a, rm, rp)
    crit_ok = not wit
    steps.append({"step": 6, "name": "bordism", "passed": t.bordism and crit_ok,
                  "pruned_bordism": t.bordism, "source_criterion": crit_ok,
                  "agree": t.bordism == (crit_ok and t.b_type),
                  "witnesses": [{"normal": list(fr.facet.normal), "offset": fmt(fr.facet.offset),
                                 "vertices": [fmt_vec(a.polytope.vertices[i])
                                              for i in sorted(a.polytope.facet_vertices(fr.index))],
                                 "range": [fmt(fr.lo), fmt(fr.hi)]} for fr in wit]})
    return StepReport(tuple(steps))
