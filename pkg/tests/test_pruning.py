from fractions import Fraction as F

import pytest

from toricbordism.errors import PreconditionError
from toricbordism.geometry.polytope import f_vector
from toricbordism.pruning import gordan_cone, prune, prune_spec, verify_pruning_theorem
from toricbordism.action import analyze_action
from toricbordism.geometry.cone import hilbert_basis

from conftest import simplex


def test_simplex_pruning_is_a_cube(D3):
    pr = prune(D3, (0, 1, 1), F(1, 4), F(3, 4))
    assert f_vector(pr.polytope) == (8, 12, 6, 1)
    assert pr.spec.d == 4 and pr.integral_model is not None
    assert pr.sink_facet >= 0 and pr.source_facet >= 0
    rep = verify_pruning_theorem(D3, (0, 1, 1), pr)
    assert rep.passed, [s for s in rep.steps if not s["passed"]]
    assert rep.step(4)["components"] == 2 and rep.step(4)["inner"] == 0


def test_segment_pruning_certificate(seg02):
    pr = prune(seg02, (1,), F(1, 2), F(3, 2))
    c = pr.certificate
    assert sorted(c.hilbert_basis) == [(1, 1), (1, 2), (3, 2)]
    assert c.generation.degree == 2 and c.bound == 8 and c.check.passed
    assert verify_pruning_theorem(seg02, (1,), pr).passed


@pytest.mark.parametrize("P,v,rho", [
    ("square", (1, 1), (F(1, 4), F(7, 4))),
    ("d3", (1, 1, 2), (F(1, 2), F(3, 2))),
])
def test_designed_negatives_fail_only_step_six(P, v, rho, square):
    P = square if P == "square" else simplex(3)
    rep = verify_pruning_theorem(P, v, prune(P, v, *rho))
    assert [s["step"] for s in rep.steps if not s["passed"]] == [6]
    step6 = rep.step(6)
    assert step6["witnesses"] and step6["agree"]


def test_negative_witness_facets(D3):
    rep = verify_pruning_theorem(D3, (1, 1, 2), prune(D3, (1, 1, 2), F(1, 2), F(3, 2)))
    verts = sorted(sorted(map(tuple, w["vertices"])) for w in rep.step(6)["witnesses"])
    assert [(0, 0, 0), (0, 1, 0), (1, 0, 0)] in verts
    assert [(0, 0, 1), (0, 1, 0), (1, 0, 0)] in verts


def test_gordan_cone_rays():
    C = gordan_cone((0, 2), F(1, 2), F(3, 2))
    assert sorted(C.generators) == [(1, 3), (3, 1)]
    assert (1, 1) in hilbert_basis(C)


def test_prune_preconditions(D3, square):
    a = analyze_action(square, (1, 1))
    with pytest.raises(PreconditionError):
        prune_spec(a, F(3, 4), F(1, 4))
    with pytest.raises(PreconditionError):
        prune_spec(a, F(-1, 4), F(1, 2))
    with pytest.raises(PreconditionError):
        prune_spec(a, F(1, 2), 1)        # inner critical value
    assert prune_spec(a, 0, 2).boundary == (True, True)


def test_pruning_is_idempotent(D3):
    once = prune(D3, (0, 1, 1), F(1, 4), F(3, 4))
    twice = prune(once.polytope, (0, 1, 1), F(1, 4), F(3, 4))
    assert twice.polytope == once.polytope


def test_pair_serializes_with_provenance(D3):
    js = prune(D3, (0, 1, 1), F(1, 4), F(3, 4)).to_json()
    assert js["provenance"]["spec"]["rho_minus"] == "1/4"
    assert "certificate" in js


def test_provenance_mismatch_rejected(D3, square):
    pr = prune(D3, (0, 1, 1), F(1, 4), F(3, 4))
    with pytest.raises(PreconditionError):
        verify_pruning_theorem(square, (1, 1), pr)


def test_pruned_pair_json_round_trip(D3):
    import json
    from toricbordism.errors import VerificationError
    from toricbordism.pruning import pruned_from_json
    pr = prune(D3, (0, 1, 1), F(1, 4), F(3, 4))
    js = json.loads(json.dumps(pr.to_json()))
    back = pruned_from_json(js)
    assert back.polytope == pr.polytope and back.spec == pr.spec
    js["polytope"]["vertices"] = js["polytope"]["vertices"][:-1]
    with pytest.raises(VerificationError):
        pruned_from_json(js)
