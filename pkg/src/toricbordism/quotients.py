"""Quotient chains, wall classification, section isomorphisms and chambers."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .action import ActionAnalysis, analyze_action, face_model, quotient_model
from .errors import PreconditionError, VerificationError
from .geometry.fan import Fan, normal_fan, normally_equivalent, refines
from .geometry.linalg import dot
from .geometry.polytope import (
    RationalPolytope, canonicalize, fmt, lattice_points, slice_polytope,
)
from .geometry.split import lattice_split, project_level_set
from .oracle import graded_section_counts

SAMPLE_FRACTIONS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
CHAMBER_FRACTIONS = (Fraction(1, 2), Fraction(1, 16), Fraction(15, 16), Fraction(1, 4),
                     Fraction(3, 4), Fraction(1, 3), Fraction(2, 3), Fraction(1, 8),
                     Fraction(7, 8))


@dataclass(frozen=True)
class QuotientSlice:
    index: int
    kind: str                   # geometric | semigeometric
    level: Fraction
    polytope: RationalPolytope
    fan: Fan
    coarsened_by: tuple = ()    # (left, right) refinement verdicts at inner walls

    def to_json(self):
        out = {"index": self.index, "kind": self.kind, "level": fmt(self.level),
               "polytope": self.polytope.to_json(), "fan": self.fan.to_json()}
        if self.coarsened_by:
            out["coarsened_by"] = list(self.coarsened_by)
        return out


@dataclass(frozen=True)
class Wall:
    index: int
    level: Fraction
    slice: QuotientSlice
    tag: str                    # isomorphism | small-modification | divisorial-drop
    lattice_counts: tuple[int, int]

    def to_json(self):
        return {"index": self.index, "level": fmt(self.level), "tag": self.tag,
                "coarsened_by": list(self.slice.coarsened_by),
                "lattice_counts": list(self.lattice_counts),
                "semigeometric": self.slice.to_json()}


@dataclass(frozen=True)
class QuotientChain:
    analysis: ActionAnalysis
    slices: tuple[QuotientSlice, ...]
    walls: tuple[Wall, ...]

    def to_json(self):
        return {"critical_values": [fmt(a) for a in self.analysis.critical_values],
                "slices": [s.to_json() for s in self.slices],
                "walls": [w.to_json() for w in self.walls]}

    def render(self) -> str:
        parts = []
        for s in self.slices:
            parts.append(f"GX({s.index},{s.index + 1})[{len(s.fan.rays)} rays]")
        out = parts[0]
        for w, p in zip(self.walls, parts[1:]):
            out += f" --{w.tag}--> {p}"
        return out


def geometric_quotient(P: RationalPolytope, v, i: int) -> QuotientSlice:
    a = analyze_action(P, v)
    lo, hi = a.interval(i)
    split = a.split
    tau = (lo + hi) / 2
    model = quotient_model(a.polytope, a.v, tau, split)
    for t in SAMPLE_FRACTIONS:
        other = quotient_model(a.polytope, a.v, lo + (hi - lo) * t, split)
        if not normally_equivalent(model, other):
            raise VerificationError(f"quotient model not constant on interval {i}")
    return QuotientSlice(i, "geometric", tau, model, normal_fan(model))


def semigeometric_quotient(P: RationalPolytope, v, i: int) -> QuotientSlice:
    a = analyze_action(P, v)
    r = a.criticality
    if not 0 <= i <= r:
        raise PreconditionError(f"wall index {i} out of range 0..{r}")
    tau = a.critical_values[i]
    model = quotient_model(a.polytope, a.v, tau, a.split)
    coarse: tuple = ()
    if 0 < i < r:
        left = geometric_quotient(P, v, i - 1).polytope
        right = geometric_quotient(P, v, i).polytope
        coarse = (refines(left, model), refines(right, model))
    return QuotientSlice(i, "semigeometric", tau, model, normal_fan(model), coarse)


def wall_tag(left: Fan, right: Fan) -> str:
    if left.same_as(right):
        return "isomorphism"
    if left.ray_set() == right.ray_set():
        return "small-modification"
    return "divisorial-drop"


def quotient_chain(P: RationalPolytope, v) -> QuotientChain:
    a = analyze_action(P, v)
    slices = tuple(geometric_quotient(P, v, i) for i in range(a.criticality))
    walls = []
    for i in range(1, a.criticality):
        sg = semigeometric_quotient(P, v, i)
        left, right = slices[i - 1], slices[i]
        counts = (len(lattice_points(left.polytope)), len(lattice_points(right.polytope)))
        walls.append(Wall(i, sg.level, sg, wall_tag(left.fan, right.fan), counts))
    return QuotientChain(a, slices, tuple(walls))


def require_bordism_setup(a: ActionAnalysis):
    """Preconditions of the section and chamber results: bordism, equalized, Q-factorial."""
    if not a.bordism:
        raise PreconditionError("action is not a bordism", "bordism")
    if not (a.equalized_at_sink and a.equalized_at_source):
        raise PreconditionError("action is not equalized at sink and source", "equalized")
    if not a.q_factorial:
        raise PreconditionError("polytope is not simple (not Q-factorial)", "q_factorial")


# --- section isomorphisms -----------------------------------------------------

@dataclass
class SectionReport:
    degrees: tuple[int, ...]
    truncation_checked: int = 0
    restriction_checked: int = 0
    source_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.truncation_checked > 0

    def to_json(self):
        return {"degrees": list(self.degrees), "passed": self.passed,
                "truncation_checked": self.truncation_checked,
                "restriction_checked": self.restriction_checked,
                "source_restriction_checked": self.source_checked,
                "failures": self.failures}


def extremal_facets(a: ActionAnalysis) -> tuple[int, int]:
    """Indices of the sink and source facets (bordisms have codimension-one extremes)."""
    a0, ar = a.critical_values[0], a.critical_values[-1]
    sink = [fr.index for fr in a.facet_ranges if fr.fixed and fr.lo == a0]
    source = [fr.index for fr in a.facet_ranges if fr.fixed and fr.lo == ar]
    if len(sink) != 1 or len(source) != 1:
        raise PreconditionError("sink and source are not divisors", "b_type")
    return sink[0], source[0]


def divisor_polytope(a: ActionAnalysis, m: int, k_minus: int, k_plus: int) -> RationalPolytope:
    """Polytope of mL - (k_- - m a_0) Y_- - (m a_r - k_+) Y_+ from shifted facet offsets."""
    i_sink, i_source = extremal_facets(a)
    a0, ar = a.critical_values[0], a.critical_values[-1]
    hs = []
    for k, f in enumerate(a.polytope.facets):
        off = f.offset * m
        if k == i_sink:
            off -= k_minus - m * a0
        elif k == i_source:
            off -= m * ar - k_plus
        hs.append((f.normal, off))
    return canonicalize(halfspaces=hs, rank=a.polytope.rank)


def admissible_degrees(a: ActionAnalysis, m_max: int) -> tuple[int, ...]:
    a0, ar = a.critical_values[0], a.critical_values[-1]
    return tuple(m for m in range(1, m_max + 1)
                 if (m * a0).denominator == 1 and (m * ar).denominator == 1)


def verify_section_isomorphisms(P: RationalPolytope, v, m_max: int) -> SectionReport:
    a = analyze_action(P, v)
    require_bordism_setup(a)
    if m_max < 2:
        raise PreconditionError("m_max must be at least 2")
    Q, vv = a.polytope, a.v
    degrees = admissible_degrees(a, m_max)
    table = graded_section_counts(Q, vv, m_max)
    a0, ar = a.critical_values[0], a.critical_values[-1]
    split = a.split
    split_src = lattice_split(tuple(-x for x in vv))
    rep = SectionReport(degrees)
    for m in degrees:
        lo, hi = int(m * a0), int(m * ar)
        for km in range(lo, hi + 1):
            for kp in range(km, hi + 1):
                want = sum(table.count(m, k) for k in range(km, kp + 1))
                got = len(lattice_points(divisor_polytope(a, m, km, kp)))
                rep.truncation_checked += 1
                if want != got:
                    rep.failures.append({"kind": "truncation", "m": m, "levels": [km, kp],
                                         "oracle": want, "engine": got})
        mQ = Q.dilate(m)
        for c in range(0, hi - lo + 1):
            S = slice_polytope(mQ, vv, lo + c)
            want = table.count(m, lo + c)
            got = len(lattice_points(project_level_set(S, split)))
            rep.restriction_checked += 1
            if want != got:
                rep.failures.append({"kind": "sink-restriction", "m": m, "c": c,
                                     "oracle": want, "engine": got})
            S2 = slice_polytope(mQ, vv, hi - c)
            want2 = table.count(m, hi - c)
            got2 = len(lattice_points(project_level_set(S2, split_src)))
            rep.source_checked += 1
            if want2 != got2:
                rep.failures.append({"kind": "source-restriction", "m": m, "c": c,
                                     "oracle": want2, "engine": got2})
    return rep


# --- MDP extraction -----------------------------------------------------------

@dataclass(frozen=True)
class ExtractedMDP:
    analysis: ActionAnalysis
    minus: RationalPolytope          # model of (Y_-, L_-)
    plus: RationalPolytope           # model of L_+ on Y_-: projected level-delta slice
    minus_fan: Fan
    plus_fan: Fan
    minus_coeffs: dict               # ray -> a_rho
    plus_coeffs: dict                # ray -> b_rho
    psi_tag: str
    bandwidth: Fraction

    def level_model(self, c) -> RationalPolytope:
        a = self.analysis
        return quotient_model(a.polytope, a.v, a.critical_values[0] + Fraction(c), a.split)

    def rays_equal(self) -> bool:
        return self.minus_fan.ray_set() == self.plus_fan.ray_set()

    def to_json(self):
        return {"minus": self.minus.to_json(), "plus": self.plus.to_json(),
                "bandwidth": fmt(self.bandwidth), "psi": self.psi_tag,
                "rays_equal": self.rays_equal(),
                "minus_coeffs": [{"ray": list(r), "a": fmt(c)} for r, c in sorted(self.minus_coeffs.items())],
                "plus_coeffs": [{"ray": list(r), "b": fmt(c)} for r, c in sorted(self.plus_coeffs.items())]}


def extract_mdp(P: RationalPolytope, v) -> ExtractedMDP:
    a = analyze_action(P, v)
    require_bordism_setup(a)
    split = a.split
    minus = face_model(a.polytope, a.sink.vertex_ids, split)
    plus = face_model(a.polytope, a.source.vertex_ids, split)
    fm, fp = normal_fan(minus), normal_fan(plus)
    top = quotient_model(a.polytope, a.v, a.critical_values[-1], split)
    if top != plus:
        raise VerificationError("level-delta slice differs from the source model")
    if fm.ray_set() != fp.ray_set():
        raise PreconditionError(
            f"ray sets differ: only in sink {sorted(fm.ray_set() - fp.ray_set())}, "
            f"only in source {sorted(fp.ray_set() - fm.ray_set())}", "small")
    minus_c = {r: -min(dot(p, r) for p in minus.vertices) for r in fm.rays}
    plus_c = {r: -min(dot(p, r) for p in plus.vertices) for r in fm.rays}
    tag = "isomorphism" if fm.same_as(fp) else "small-modification"
    return ExtractedMDP(a, minus, plus, fm, fp, minus_c, plus_c, tag, a.bandwidth)


# --- chambers -------------------------------------------------------------

@dataclass(frozen=True)
class ChamberSample:
    beta: int
    gamma: int
    level: Fraction
    model: RationalPolytope

    def to_json(self):
        return {"beta": self.beta, "gamma": self.gamma, "level": fmt(self.level),
                "rays": [list(r) for r in normal_fan(self.model).rays]}


@dataclass(frozen=True)
class Chamber:
    index: int
    interval: tuple[Fraction, Fraction]
    samples: tuple[ChamberSample, ...]
    constant: bool
    matches_quotient: bool

    def to_json(self):
        return {"index": self.index, "interval": [fmt(x) for x in self.interval],
                "samples": [s.to_json() for s in self.samples],
                "constant": self.constant, "matches_quotient": self.matches_quotient}


@dataclass(frozen=True)
class ChamberReport:
    chambers: tuple[Chamber, ...]
    walls: tuple[dict, ...]
    covers: bool

    @property
    def passed(self) -> bool:
        return (self.covers and all(c.constant and c.matches_quotient for c in self.chambers)
                and all(w["distinct"] == (w["tag"] != "isomorphism") for w in self.walls))

    def to_json(self):
        return {"passed": self.passed, "covers": self.covers,
                "chambers": [c.to_json() for c in self.chambers], "walls": list(self.walls)}


def chamber_samples(n: int) -> list[tuple[int, int]]:
    """Deterministic (beta, gamma) pairs; gamma/(beta+gamma) runs through fixed ratios."""
    if n > len(CHAMBER_FRACTIONS):
        raise PreconditionError(f"at most {len(CHAMBER_FRACTIONS)} samples per chamber")
    out = []
    for t in CHAMBER_FRACTIONS[:n]:
        s = t.denominator
        out.append((s - t.numerator, t.numerator))
    return out


def chamber_decomposition(P: RationalPolytope, v, samples_per_chamber: int = 3) -> ChamberReport:
    a = analyze_action(P, v)
    require_bordism_setup(a)
    if samples_per_chamber < 3:
        raise PreconditionError("need at least 3 samples per chamber")
    chain = quotient_chain(P, v)
    crit = a.critical_values
    chambers = []
    models = []
    for i in range(a.criticality):
        lo, hi = crit[i], crit[i + 1]
        smp = []
        for beta, gamma in chamber_samples(samples_per_chamber):
            s = beta + gamma
            level = beta * lo + gamma * hi
            model = quotient_model(a.polytope.dilate(s), a.v, level, a.split)
            smp.append(ChamberSample(beta, gamma, level, model))
        first = smp[0].model
        const = all(normally_equivalent(first, x.model) for x in smp[1:])
        match = all(normally_equivalent(chain.slices[i].polytope, x.model) for x in smp)
        chambers.append(Chamber(i, (lo, hi), tuple(smp), const, match))
        models.append(first)
    walls = []
    for w in chain.walls:
        distinct = not normally_equivalent(models[w.index - 1], models[w.index])
        walls.append({"index": w.index, "level": fmt(w.level), "tag": w.tag,
                      "distinct": distinct})
    covers = (chambers[0].interval[0] == crit[0] and chambers[-1].interval[1] == crit[-1]
              and all(x.interval[1] == y.interval[0] for x, y in zip(chambers, chambers[1:])))
    return ChamberReport(tuple(chambers), tuple(walls), covers)
