"""Geometric realization of a toric Mori dream pair as a slab polytope.

For an MDP (P_-, b) and coprime alpha = (alpha_-, alpha_+) the degree-one slab is

    Q = {(u, t) : 0 <= t <= 1/alpha_+,
                  <u, rho> + a_rho (1 - alpha_+ t)/alpha_- + b_rho t >= 0},

whose dilate mQ at height T = m t is the polytope of m_- L_- + m_+ L_+ with
m_+ = T and alpha_- m_- + alpha_+ m_+ = m.  Sections need m_- integral, i.e.
T = c m (mod alpha_-) with c = alpha_+^{-1} mod alpha_-.  The substitution
t = alpha_- k + c turns this sublattice into the standard one, so the realized
polytope is stored in the coordinates (u, k) with the action v = e_{n+1}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .action import analyze_action, face_model
from .errors import PreconditionError
from .geometry.cone import GenerationDegree, generation_degree
from .geometry.fan import normal_fan, normally_equivalent
from .geometry.linalg import frac
from .geometry.polytope import (
    EmptyError, RationalPolytope, UnboundedError, canonicalize, fmt,
    fmt_vec, from_json, lattice_points, slice_polytope,
)
from .oracle import enumerate_points
from .quotients import quotient_chain


@dataclass(frozen=True)
class MDPInput:
    p_minus: RationalPolytope
    plus_coeffs: tuple[tuple[tuple[int, ...], int], ...]
    name: str = ""

    @property
    def rank(self) -> int:
        return self.p_minus.rank

    def b(self) -> dict:
        return dict(self.plus_coeffs)

    def a(self) -> dict:
        """Offsets of P_- per ray: L_- = sum a_rho D_rho."""
        return {f.normal: f.offset for f in self.p_minus.facets}

    def to_json(self):
        return {"name": self.name, "P_minus": {"rank": self.rank,
                                               "vertices": [fmt_vec(v) for v in self.p_minus.vertices]},
                "plus_coeffs": [{"ray": list(r), "b": b} for r, b in self.plus_coeffs]}

    @staticmethod
    def from_json(obj) -> "MDPInput":
        P = from_json(obj["P_minus"])
        coeffs = tuple(sorted((tuple(int(x) for x in c["ray"]), int(c["b"]))
                              for c in obj["plus_coeffs"]))
        return MDPInput(P, coeffs, obj.get("name", ""))


def mdp_from_offsets(p_minus: RationalPolytope, b: dict, name: str = "") -> MDPInput:
    return MDPInput(p_minus, tuple(sorted(b.items())), name)


@dataclass(frozen=True)
class MDPValidation:
    valid: bool
    reasons: tuple[str, ...]
    p_plus: RationalPolytope | None
    rays: tuple[tuple[int, ...], ...]
    phi: str | None                       # identity | small-modification
    certificate: GenerationDegree | None = None

    def to_json(self):
        return {"valid": self.valid, "reasons": list(self.reasons),
                "P_plus": self.p_plus.to_json() if self.p_plus is not None else None,
                "rays": [list(r) for r in self.rays], "phi": self.phi,
                "finite_generation": self.certificate.to_json() if self.certificate else None}


def _plus_polytope(inp: MDPInput):
    hs = [(r, b) for r, b in inp.plus_coeffs]
    return canonicalize(halfspaces=hs, rank=inp.rank)


def validate_mdp(inp: MDPInput, certify: bool = True) -> MDPValidation:
    P = inp.p_minus
    reasons = []
    rays = tuple(sorted(f.normal for f in P.facets))
    if not P.full_dimensional or not P.is_lattice:
        reasons.append("P_minus must be a full-dimensional lattice polytope")
        return MDPValidation(False, tuple(reasons), None, rays, None)
    keys = set(inp.b())
    if keys != set(rays) or len(inp.plus_coeffs) != len(keys):
        missing = sorted(set(rays) - keys)
        extra = sorted(keys - set(rays))
        reasons.append(f"coefficients must be given exactly on the rays of the fan of P_minus "
                       f"(missing {missing}, extra {extra})")
        return MDPValidation(False, tuple(reasons), None, rays, None)
    try:
        Pp = _plus_polytope(inp)
    except UnboundedError:
        return MDPValidation(False, ("P_plus is unbounded",), None, rays, None)
    except EmptyError:
        return MDPValidation(False, ("P_plus is empty",), None, rays, None)
    if not Pp.full_dimensional:
        reasons.append(f"P_plus is not full-dimensional (dimension {Pp.dim})")
    plus_rays = tuple(sorted(f.normal for f in Pp.facets))
    if Pp.full_dimensional and plus_rays != rays:
        reasons.append(f"normal fan of P_plus lacks rays {sorted(set(rays) - set(plus_rays))}")
    if reasons:
        return MDPValidation(False, tuple(reasons), Pp, rays, None)
    phi = "identity" if normal_fan(P).same_as(normal_fan(Pp)) else "small-modification"
    cert = generation_degree(slab_polytope(inp, (1, 1))[0]) if certify else None
    return MDPValidation(True, (), Pp, rays, phi, cert)


def check_alpha(alpha: Sequence[int]) -> tuple[int, int]:
    if len(alpha) != 2:
        raise PreconditionError("alpha must be a pair")
    am, ap = int(alpha[0]), int(alpha[1])
    if am <= 0 or ap <= 0:
        raise PreconditionError(f"alpha = ({am},{ap}) must be positive", "alpha_positive")
    if gcd(am, ap) != 1:
        raise PreconditionError(f"alpha = ({am},{ap}) is not coprime", "alpha_coprime")
    return am, ap


def slab_polytope(inp: MDPInput, alpha, drop: str | None = None):
    """The realized slab in (u, k) coordinates; returns (Q, c).

    ``drop`` removes one constraint family ("top" or "bottom") and is only used
    to build negative controls.
    """
    am, ap = check_alpha(alpha)
    c = pow(ap, -1, am) if am > 1 else 0
    n = inp.rank
    a, b = inp.a(), inp.b()
    hs = []
    if drop != "bottom":
        hs.append((tuple([0] * n) + (am,), Fraction(c)))
    if drop != "top":
        hs.append((tuple([0] * n) + (-am,), Fraction(1, ap) - c))
    for rho in sorted(a):
        ar, br = frac(a[rho]), frac(b[rho])
        coef = am * br - ar * ap
        off = ar * (1 - ap * c) / am + br * c
        hs.append((tuple(rho) + (coef,), off))
    return canonicalize(halfspaces=hs, rank=n + 1), c


@dataclass(frozen=True)
class RealizedBordism:
    Q: RationalPolytope
    v: tuple[int, ...]
    alpha: tuple[int, int]
    shear: int
    input: MDPInput
    validation: MDPValidation = field(compare=False)

    @property
    def sink_level(self) -> Fraction:
        return Fraction(-self.shear, self.alpha[0])

    @property
    def source_level(self) -> Fraction:
        return (Fraction(1, self.alpha[1]) - self.shear) / self.alpha[0]

    def degrees(self, m: int, k: int) -> tuple[Fraction, Fraction]:
        """(m_-, m_+) of the graded piece m at height k."""
        am, ap = self.alpha
        mp = am * k + self.shear * m
        return Fraction(m - ap * mp, am), Fraction(mp)

    def to_json(self):
        return {"alpha": list(self.alpha), "shear": self.shear, "v": list(self.v),
                "Q": self.Q.to_json(), "provenance": self.input.to_json()}


def realize(inp: MDPInput, alpha) -> RealizedBordism:
    am, ap = check_alpha(alpha)
    val = validate_mdp(inp)
    if not val.valid:
        raise PreconditionError("invalid MDP input: " + "; ".join(val.reasons), "mdp")
    Q, c = slab_polytope(inp, (am, ap))
    v = tuple([0] * inp.rank + [1])
    return RealizedBordism(Q, v, (am, ap), c, inp, val)


def _drop_last(P: RationalPolytope, level) -> RationalPolytope:
    return canonicalize([p[:-1] for p in P.vertices], rank=P.rank - 1)


def veronese_consistency(rb: RealizedBordism, max_degree: int = 4) -> dict:
    """Counts of m(alpha_- alpha_+)Q at integral heights against the divisor polytopes."""
    am, ap = rb.alpha
    a, b = rb.input.a(), rb.input.b()
    n = rb.input.rank
    checked, failures = 0, []
    for j in range(1, max_degree + 1):
        m = j * am * ap
        mQ = rb.Q.dilate(m)
        lo, hi = mQ.bounds(rb.v)
        seen = set()
        for k in range(lo.__ceil__(), hi.__floor__() + 1):
            mm, mp = rb.degrees(m, k)
            if mm.denominator != 1 or mm < 0 or mp < 0:
                failures.append({"m": m, "k": k, "reason": "height outside the sublattice"})
                continue
            seen.add((int(mm), int(mp)))
            S = slice_polytope(mQ, rb.v, k)
            engine = len(lattice_points(S))
            D = canonicalize(halfspaces=[(r, mm * a[r] + mp * b[r]) for r in sorted(a)], rank=n)
            oracle = len(enumerate_points(D))
            checked += 1
            if engine != oracle:
                failures.append({"m": m, "k": k, "engine": engine, "oracle": oracle})
        want = {(x, (m - am * x) // ap) for x in range(0, m // am + 1) if (m - am * x) % ap == 0}
        if want != seen:
            failures.append({"m": m, "reason": "graded pieces missing",
                             "missing": sorted(want - seen)})
    return {"passed": not failures and checked > 0, "checked": checked, "failures": failures}


def verify_realization(rb: RealizedBordism, veronese_degree: int = 4) -> dict:
    inp = rb.input
    am, ap = rb.alpha
    verdicts = []

    def add(name, ok, **detail):
        verdicts.append({"name": name, "passed": bool(ok), **detail})

    try:
        a = analyze_action(rb.Q, rb.v)
    except PreconditionError as e:
        add("action", False, error=str(e))
        return {"passed": False, "verdicts": verdicts}
    Pm = inp.p_minus
    Pp = rb.validation.p_plus
    sink_slice = _drop_last(slice_polytope(rb.Q, rb.v, rb.sink_level), rb.sink_level)
    top = rb.Q.bounds(rb.v)[1]
    src_slice = _drop_last(slice_polytope(rb.Q, rb.v, top), top)
    add("sink slice equals P_-/alpha_-", sink_slice == Pm.dilate(Fraction(1, am)))
    add("source slice equals P_+/alpha_+", top == rb.source_level and src_slice == Pp.dilate(Fraction(1, ap)))
    minus_m = face_model(a.polytope, a.sink.vertex_ids, a.split)
    plus_m = face_model(a.polytope, a.source.vertex_ids, a.split)
    add("sink model normally equivalent to P_-", normally_equivalent(minus_m, Pm))
    add("source model normally equivalent to P_+", normally_equivalent(plus_m, Pp))
    add("B-type", a.b_type)
    witnesses = [fr.to_json() for fr in a.facet_ranges
                 if not fr.fixed and not (fr.lo == a.critical_values[0] and fr.hi == a.critical_values[-1])]
    top_fixed = [fr.index for fr in a.facet_ranges if fr.fixed and fr.lo == a.critical_values[-1]]
    add("bordism", a.bordism, agree=a.bordism_via_cells == a.bordism_via_admissible,
        facet_witnesses=witnesses, source_is_divisor=bool(top_fixed),
        source_dim=a.source.dim)
    add("equalized at sink and source", a.equalized_at_sink and a.equalized_at_source,
        witnesses=[w.to_json() for w in a.equalized_witnesses])
    walls = []
    if a.b_type:
        chain = quotient_chain(rb.Q, rb.v)
        ends = (chain.slices[0].fan, chain.slices[-1].fan)
        walls = [w.tag for w in chain.walls]
        phi_ok = (ends[0].ray_set() == ends[1].ray_set()
                  and ends[0].same_as(normal_fan(Pm)) and ends[1].same_as(normal_fan(Pp)))
        add("psi matches phi", phi_ok, chain_length=len(chain.slices), wall_tags=walls)
    else:
        add("psi matches phi", False, reason="not B-type")
    # the hull of the two scaled ends sits inside the slab (the map Phi)
    ends_pts = list(sink_slice.vertices)
    inside = all(rb.Q.contains(tuple(p) + (rb.sink_level,)) for p in sink_slice.vertices) and \
        all(rb.Q.contains(tuple(p) + (top,)) for p in src_slice.vertices)
    add("Phi witness: hull of scaled ends inside the slab", inside and bool(ends_pts))
    vc = veronese_consistency(rb, veronese_degree)
    add("Veronese consistency", vc["passed"], checked=vc["checked"], failures=vc["failures"])
    return {"passed": all(x["passed"] for x in verdicts), "alpha": [am, ap],
            "wall_tags": walls, "verdicts": verdicts}


def corrupted(rb: RealizedBordism, drop: str = "top") -> RealizedBordism:
    """Negative control: the same slab with one slab constraint removed."""
    Q, c = slab_polytope(rb.input, rb.alpha, drop=drop)
    return RealizedBordism(Q, rb.v, rb.alpha, c, rb.input, rb.validation)


def compare_realizations(inp: MDPInput, alpha, beta) -> dict:
    ra, rb_ = realize(inp, alpha), realize(inp, beta)
    ca, cb = quotient_chain(ra.Q, ra.v), quotient_chain(rb_.Q, rb_.v)
    same_len = len(ca.slices) == len(cb.slices)
    pairs = []
    if same_len:
        for x, y in zip(ca.slices, cb.slices):
            pairs.append(normally_equivalent(x.polytope, y.polytope))
    tags_a = [w.tag for w in ca.walls]
    tags_b = [w.tag for w in cb.walls]
    return {"passed": same_len and all(pairs) and tags_a == tags_b,
            "alpha": list(ra.alpha), "beta": list(rb_.alpha),
            "lengths": [len(ca.slices), len(cb.slices)], "models_match": pairs,
            "wall_tags": [tags_a, tags_b],
            "levels": [[fmt(x) for x in ca.analysis.critical_values],
                       [fmt(x) for x in cb.analysis.critical_values]]}
