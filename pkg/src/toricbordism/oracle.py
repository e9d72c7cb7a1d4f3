"""Brute-force oracle for graded section counts and semigroup generation.

Everything here is direct enumeration over bounding boxes, written without the
compiled kernels or the engine's lattice-point routine, so that it can serve as
an independent check of the slicing, projection and counting code.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Sequence

from .geometry.polytope import RationalPolytope, canonicalize, fmt
from .geometry.split import lattice_split, project_level_set


class OracleError(ValueError):
    pass


def _rows(P: RationalPolytope, m) -> list[tuple[tuple[int, ...], int]]:
    """Integer inequalities n.x + c >= 0 describing mP (equations as two rows)."""
    out = []
    for f in P.facets:
        c = f.offset * m
        q = c.denominator
        out.append((tuple(x * q for x in f.normal), int(c * q)))
    for e in P.equations:
        c = e.offset * m
        q = c.denominator
        n = tuple(x * q for x in e.normal)
        out.append((n, int(c * q)))
        out.append((tuple(-x for x in n), -int(c * q)))
    return out


def _box(P: RationalPolytope, m):
    lo = [ceil(min(v[j] for v in P.vertices) * m) for j in range(P.rank)]
    hi = [floor(max(v[j] for v in P.vertices) * m) for j in range(P.rank)]
    return lo, hi


def _accept(rows, x) -> bool:
    for n, c in rows:
        s = c
        for a, b in zip(n, x):
            s += a * b
        if s < 0:
            return False
    return True


def enumerate_points(P: RationalPolytope, m=1) -> list[tuple[int, ...]]:
    """All integer points of mP by scanning the bounding box."""
    rows = _rows(P, m)
    lo, hi = _box(P, m)
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    return [x for x in itertools.product(*ranges) if _accept(rows, x)]


def enumerate_level(P: RationalPolytope, m, v: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """Integer points of mP with <x, v> = k; one coordinate is solved from the level."""
    rows = _rows(P, m)
    lo, hi = _box(P, m)
    j = min((i for i in range(len(v)) if v[i] != 0), key=lambda i: (abs(v[i]), i))
    others = [i for i in range(len(v)) if i != j]
    out = []
    for rest in itertools.product(*[range(lo[i], hi[i] + 1) for i in others]):
        s = k - sum(v[i] * x for i, x in zip(others, rest))
        if s % v[j]:
            continue
        xj = s // v[j]
        if not lo[j] <= xj <= hi[j]:
            continue
        x = list(rest)
        x.insert(j, xj)
        x = tuple(x)
        if _accept(rows, x):
            out.append(x)
    return sorted(out)


@dataclass(frozen=True)
class GradedCountTable:
    m_max: int
    counts: dict            # (m, level) -> count
    totals: dict            # m -> |mP cap Z^n|

    def level_counts(self, m: int) -> dict:
        return {k: c for (mm, k), c in self.counts.items() if mm == m}

    def count(self, m: int, k: int) -> int:
        return self.counts.get((m, k), 0)

    def to_json(self):
        return {
            "m_max": self.m_max,
            "counts": {str(m): {str(k): c for k, c in sorted(self.level_counts(m).items())}
                       for m in range(1, self.m_max + 1)},
        }


def graded_section_counts(P: RationalPolytope, v: Sequence[int], m_max: int) -> GradedCountTable:
    if m_max < 1:
        raise OracleError("m_max must be positive")
    counts: dict = {}
    totals = {}
    for m in range(1, m_max + 1):
        pts = enumerate_points(P, m)
        totals[m] = len(pts)
        for x in pts:
            k = sum(a * b for a, b in zip(x, v))
            counts[(m, k)] = counts.get((m, k), 0) + 1
    return GradedCountTable(m_max, counts, totals)


# --- semigroups ---------------------------------------------------------------

@dataclass(frozen=True)
class SemigroupCheck:
    passed: bool
    target_degree: int
    checked: int
    missing: tuple | None = None
    grading: tuple = field(default=())

    def to_json(self):
        return {"passed": self.passed, "target_degree": self.target_degree,
                "checked": self.checked,
                "missing": list(self.missing) if self.missing is not None else None}


def semigroup_generated_check(generators: Iterable[Sequence[int]], target_degree: int,
                              cone=None) -> SemigroupCheck:
    """Check that every lattice point of cone(generators) of degree <= target is a sum.

    Degrees are last coordinates; if some generator has nonpositive last
    coordinate a positive grading of the cone is used instead.
    """
    from .geometry.cone import cone_from_generators

    gens = sorted(set(tuple(int(x) for x in g) for g in generators))
    if not gens:
        raise OracleError("no generators")
    n = len(gens[0])
    C = cone if cone is not None else cone_from_generators(gens, n)
    grading = tuple([0] * (n - 1) + [1])
    if any(g[-1] <= 0 for g in gens):
        grading = C.interior_grading()

    def deg(x):
        return sum(a * b for a, b in zip(grading, x))

    hs = [(h, 0) for h in C.halfspaces] + [(tuple(-x for x in grading), target_degree)]
    eqs = [(e, 0) for e in C.equations]
    region = canonicalize(halfspaces=hs, equations=eqs, rank=n)
    targets = [x for x in enumerate_points(region) if any(x)]
    gdeg = [(g, deg(g)) for g in gens]
    zero = tuple([0] * n)
    reach = {zero}
    frontier = [(zero, 0)]
    while frontier:
        nxt = []
        for r, dr in frontier:
            for g, dg in gdeg:
                if dr + dg > target_degree:
                    continue
                s = tuple(a + b for a, b in zip(r, g))
                if s not in reach:
                    reach.add(s)
                    nxt.append((s, dr + dg))
        frontier = nxt
    missing = sorted((x for x in targets if x not in reach), key=lambda x: (deg(x), x))
    if missing:
        return SemigroupCheck(False, target_degree, len(targets), missing[0], grading)
    return SemigroupCheck(True, target_degree, len(targets), None, grading)


# --- weight subalgebras -------------------------------------------------------

@dataclass(frozen=True)
class SubalgebraModel:
    polytope: RationalPolytope       # projected model in the quotient lattice
    hull: RationalPolytope           # hull in the ambient level set
    degrees: tuple[int, ...]         # degrees m that were used
    stabilized: bool

    def to_json(self):
        return {"polytope": self.polytope.to_json(), "degrees": list(self.degrees),
                "stabilized": self.stabilized}


def weight_subalgebra_model(P: RationalPolytope, v: Sequence[int], tau, m_max: int) -> SubalgebraModel:
    tau = Fraction(tau)
    valid = [m for m in range(1, m_max + 1) if (m * tau).denominator == 1]
    if not valid:
        raise OracleError(f"no integral level m*{fmt(tau)} with m <= {m_max}")
    pts: set = set()
    prev_hull = None
    hull = None
    for m in valid:
        for x in enumerate_level(P, m, v, int(m * tau)):
            pts.add(tuple(Fraction(a, m) for a in x))
        if pts:
            prev_hull, hull = hull, canonicalize(sorted(pts), rank=P.rank)
    if hull is None:
        raise OracleError("no lattice points at any sampled level")
    stable = prev_hull is not None and prev_hull == hull
    proj = project_level_set(hull, lattice_split(v))
    return SubalgebraModel(proj, hull, tuple(valid), stable)
