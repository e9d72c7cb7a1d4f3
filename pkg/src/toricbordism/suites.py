"""Verification suites over fixtures; each returns a JSON-ready result dict."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import lcm

from .action import analyze_action, non_admissible_is_prefix_suffix, quotient_model
from .errors import PreconditionError, VerificationError
from .geometry.fan import normally_equivalent
from .geometry.polytope import GeometryError, fmt, lattice_points, slice_polytope
from .library import Fixture
from .oracle import graded_section_counts, weight_subalgebra_model
from .pruning import prune, verify_pruning_theorem
from .quotients import (
    SAMPLE_FRACTIONS, chamber_decomposition, extract_mdp, verify_section_isomorphisms,
)
from .realization import compare_realizations, realize, validate_mdp, verify_realization

SUITES = ("analysis", "oracle", "pruning-theorem", "section-isomorphisms",
          "chamber-decomposition", "realization", "round-trip", "alpha-independence")
POLYTOPE_SUITES = ("analysis", "oracle", "pruning-theorem", "section-isomorphisms",
                   "chamber-decomposition")
MDP_SUITES = ("analysis", "realization", "round-trip", "alpha-independence", "oracle",
              "section-isomorphisms", "chamber-decomposition")
ORACLE_DEGREE_CAP = 16
ORACLE_BOX_BUDGET = 100_000     # brute-force points per sampled level


def _level_box(P, v, m) -> int:
    """Size of the oracle's scan for one level of mP; the coordinate it solves is skipped."""
    j = min((i for i in range(len(v)) if v[i] != 0), key=lambda i: (abs(v[i]), i))
    out = 1
    for i in range(P.rank):
        if i != j:
            out *= int(m * max(p[i] for p in P.vertices)) - int(m * min(p[i] for p in P.vertices)) + 1
    return out


def thread_count() -> int:
    raw = os.environ.get("TB_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = os.cpu_count() or 1
    return max(1, n)


def _result(suite, status, **detail):
    return {"suite": suite, "status": status, **detail}


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def equal_up_to_translation(A, B) -> bool:
    if A.rank != B.rank or len(A.vertices) != len(B.vertices):
        return False
    if not A.vertices:
        return True
    t = tuple(x - y for x, y in zip(A.vertices[0], B.vertices[0]))
    return all(tuple(x - s for x, s in zip(p, t)) == q for p, q in zip(A.vertices, B.vertices))


# --- polytope suites ------------------------------------------------------------

def analysis_suite(P, v, expect=None) -> dict:
    a = analyze_action(P, v)
    try:
        agree = a.bordism_via_cells == a.bordism_via_admissible
    except VerificationError:
        agree = False
    ps = non_admissible_is_prefix_suffix(a.admissible)
    checks = {}
    for key, actual in (("bordism", a.bordism_via_cells), ("b_type", a.b_type),
                        ("q_factorial", a.q_factorial)):
        if expect and key in expect:
            checks[key] = {"expected": expect[key], "actual": actual, "ok": expect[key] == actual}
    ok = agree and ps and all(c["ok"] for c in checks.values())
    return _result("analysis", _status(ok), criticality=a.criticality,
                   critical_values=[fmt(x) for x in a.critical_values],
                   b_type=a.b_type, admissible=list(a.admissible),
                   bordism_paths={"cells": a.bordism_via_cells, "admissible": a.bordism_via_admissible,
                                  "agree": agree},
                   prefix_suffix=ps,
                   equalized=[a.equalized_at_sink, a.equalized_at_source],
                   q_factorial=a.q_factorial, expectations=checks)


def oracle_levels(a) -> list[Fraction]:
    crit = a.critical_values
    out = list(crit)
    for lo, hi in zip(crit, crit[1:]):
        out += [lo + f * (hi - lo) for f in SAMPLE_FRACTIONS]
    return sorted(set(out))


def oracle_suite(P, v, m_max: int = 6) -> dict:
    """Engine quotient models and slab counts against the brute-force oracle."""
    a = analyze_action(P, v)
    Q, vv = a.polytope, a.v
    models, skipped, failures = [], [], []
    for tau in oracle_levels(a):
        S = slice_polytope(Q, vv, tau)
        L = lcm(tau.denominator, *(x.denominator for p in S.vertices for x in p))
        if 2 * L > ORACLE_DEGREE_CAP or _level_box(Q, vv, 2 * L) > ORACLE_BOX_BUDGET:
            skipped.append(fmt(tau))
            continue
        engine = quotient_model(Q, vv, tau, a.split)
        orc = weight_subalgebra_model(Q, vv, tau, 2 * L)
        ok = orc.stabilized and equal_up_to_translation(engine, orc.polytope)
        models.append({"tau": fmt(tau), "degrees": list(orc.degrees), "equal": ok})
        if not ok:
            failures.append({"kind": "model", "tau": fmt(tau)})
    table = graded_section_counts(Q, vv, m_max)
    lo, hi = Q.bounds(vv)
    levels = 0
    for m in range(1, m_max + 1):
        for k in range((m * lo).__ceil__(), (m * hi).__floor__() + 1):
            got = len(lattice_points(slice_polytope(Q.dilate(m), vv, k)))
            levels += 1
            if got != table.count(m, k):
                failures.append({"kind": "count", "m": m, "level": k,
                                 "oracle": table.count(m, k), "engine": got})
    return _result("oracle", _status(not failures and bool(models)), models=models,
                   skipped_levels=skipped, count_levels=levels, m_max=m_max, failures=failures)


def pruning_suite(P, v, specs, m_max: int = 4) -> dict:
    if not specs:
        return _result("pruning-theorem", "skipped", reason="fixture has no pruning data")
    runs = []
    for rm, rp in specs:
        pr = prune(P, v, rm, rp)
        rep = verify_pruning_theorem(P, v, pr, m_max)
        cert = pr.certificate
        runs.append({"rho": [fmt(rm), fmt(rp)], "passed": rep.passed,
                     "failed_steps": [s["step"] for s in rep.steps if not s["passed"]],
                     "steps": list(rep.steps),
                     "pruned_vertices": pr.polytope.to_json()["vertices"],
                     "certificate": {"hilbert_basis_size": len(cert.hilbert_basis),
                                     "generation_degree": cert.generation.degree,
                                     "bound": cert.bound, "check": cert.check.passed}})
    return _result("pruning-theorem", _status(all(r["passed"] for r in runs)), runs=runs)


def section_suite(P, v, m_max: int = 4) -> dict:
    try:
        rep = verify_section_isomorphisms(P, v, m_max)
    except PreconditionError as e:
        return _result("section-isomorphisms", "skipped", reason=str(e), predicate=e.predicate)
    return _result("section-isomorphisms", _status(rep.passed), **rep.to_json())


def chamber_suite(P, v, samples: int = 3) -> dict:
    try:
        rep = chamber_decomposition(P, v, samples)
    except PreconditionError as e:
        return _result("chamber-decomposition", "skipped", reason=str(e), predicate=e.predicate)
    return _result("chamber-decomposition", _status(rep.passed), **rep.to_json())


# --- MDP suites ---------------------------------------------------------------

def validation_suite(inp) -> dict:
    val = validate_mdp(inp)
    return _result("analysis", _status(val.valid), validation=val.to_json())


def realization_suite(inp, alphas) -> dict:
    runs = []
    for al in alphas:
        rep = verify_realization(realize(inp, al))
        runs.append(rep)
    return _result("realization", _status(all(r["passed"] for r in runs)), runs=runs)


def round_trip_suite(inp, alphas) -> dict:
    val = validate_mdp(inp, certify=False)
    runs = []
    for al in alphas:
        rb = realize(inp, al)
        ex = extract_mdp(rb.Q, rb.v)
        ok_m = normally_equivalent(ex.minus, inp.p_minus)
        ok_p = normally_equivalent(ex.plus, val.p_plus)
        tag_ok = (ex.psi_tag == "isomorphism") == (val.phi == "identity")
        runs.append({"alpha": list(al), "minus": ok_m, "plus": ok_p, "psi": ex.psi_tag,
                     "passed": ok_m and ok_p and tag_ok})
    return _result("round-trip", _status(all(r["passed"] for r in runs)), runs=runs)


def alpha_suite(inp, alphas) -> dict:
    if len(alphas) < 2:
        return _result("alpha-independence", "skipped", reason="needs two values of alpha")
    runs = [compare_realizations(inp, alphas[0], b) for b in alphas[1:]]
    return _result("alpha-independence", _status(all(r["passed"] for r in runs)), runs=runs)


# --- dispatch -----------------------------------------------------------------

def applicable(fx: Fixture, suite: str) -> bool:
    return suite in (POLYTOPE_SUITES if fx.kind == "polytope" else MDP_SUITES)


def run_suite(fx: Fixture, suite: str, m_max: int = 4, samples: int = 3, alphas=None) -> dict:
    try:
        if fx.kind == "polytope":
            P, v = fx.polytope, fx.v
            if v is None:
                return _result(suite, "skipped", reason="fixture has no one-parameter subgroup")
            if suite == "analysis":
                return analysis_suite(P, v, fx.expect)
            if suite == "oracle":
                return oracle_suite(P, v, m_max)
            if suite == "pruning-theorem":
                return pruning_suite(P, v, fx.prune, m_max)
            if suite == "section-isomorphisms":
                return section_suite(P, v, m_max)
            if suite == "chamber-decomposition":
                return chamber_suite(P, v, samples)
            return _result(suite, "skipped", reason="not applicable to a polytope fixture")
        alphas = tuple(alphas) if alphas else fx.alphas
        inp = fx.mdp
        if suite == "analysis":
            return validation_suite(inp)
        if suite == "realization":
            return realization_suite(inp, alphas)
        if suite == "round-trip":
            return round_trip_suite(inp, alphas)
        if suite == "alpha-independence":
            # a single requested alpha is compared against the fixture's others
            cmp = (alphas[0],) + tuple(b for b in fx.alphas if b != alphas[0])
            return alpha_suite(inp, cmp)
        rb = realize(inp, alphas[0])
        if suite == "oracle":
            return oracle_suite(rb.Q, rb.v, m_max)
        if suite == "section-isomorphisms":
            return section_suite(rb.Q, rb.v, m_max)
        if suite == "chamber-decomposition":
            return chamber_suite(rb.Q, rb.v, samples)
        return _result(suite, "skipped", reason="not applicable to an MDP fixture")
    except VerificationError as e:
        return _result(suite, "fail", error=str(e))
    except (PreconditionError, GeometryError) as e:
        return _result(suite, "fail", error=str(e))


def expected_status(fx: Fixture, suite: str, status: str) -> bool:
    want = fx.expect.get(suite)
    if want is None:
        return status != "fail"
    return status == want


def verify_fixtures(fixtures, suites, m_max=4, samples=3, alphas=None, threads=None) -> dict:
    tasks = [(fx, s) for fx in fixtures for s in suites if applicable(fx, s)]
    n = threads if threads is not None else thread_count()

    def job(t):
        return run_suite(t[0], t[1], m_max, samples, alphas)

    if n <= 1:
        results = [job(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=n) as ex:
            results = list(ex.map(job, tasks))
    out = []
    unexpected = []
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for fx in fixtures:
        rs = []
        for (f, s), r in zip(tasks, results):
            if f is fx:
                r = dict(r)
                r["as_expected"] = expected_status(fx, s, r["status"])
                counts[r["status"]] += 1
                if not r["as_expected"]:
                    unexpected.append(f"{fx.name}:{s}")
                rs.append(r)
        out.append({"fixture": fx.name, "kind": fx.kind, "role": fx.role,
                    "as_expected": all(r["as_expected"] for r in rs), "suites": rs})
    return {"results": out, "summary": {**counts, "unexpected": unexpected}}
