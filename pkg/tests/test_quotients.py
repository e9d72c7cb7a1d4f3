from fractions import Fraction as F

import pytest

from toricbordism.errors import PreconditionError
from toricbordism.geometry.fan import normally_equivalent
from toricbordism.quotients import (
    chamber_decomposition, chamber_samples, extract_mdp, geometric_quotient,
    quotient_chain, semigeometric_quotient, verify_section_isomorphisms,
)
from toricbordism.realization import realize

from conftest import box


def test_simplex_quotient_is_p1_times_p1(D3):
    q = geometric_quotient(D3, (0, 1, 1), 0)
    assert q.kind == "geometric" and q.level == F(1, 2)
    assert normally_equivalent(q.polytope, box(1, 1))


def test_square_chain_has_an_isomorphism_wall(square):
    chain = quotient_chain(square, (1, 1))
    assert len(chain.slices) == 2
    assert [w.tag for w in chain.walls] == ["isomorphism"]
    semi = semigeometric_quotient(square, (1, 1), 1)
    assert semi.coarsened_by == (True, True)
    assert "isomorphism" in chain.render()


def test_section_isomorphisms_on_bordisms(truncated_D3, seg02):
    rep = verify_section_isomorphisms(truncated_D3, (0, 1, 1), 4)
    assert rep.passed and rep.truncation_checked > 0 and rep.restriction_checked > 0
    assert verify_section_isomorphisms(seg02, (1,), 6).passed


def test_section_isomorphisms_need_a_bordism(square):
    with pytest.raises(PreconditionError) as e:
        verify_section_isomorphisms(square, (1, 1), 4)
    assert e.value.predicate


def test_extract_mdp_from_product():
    P = box(1, 1, 1)
    ex = extract_mdp(P, (0, 0, 1))
    assert ex.psi_tag == "isomorphism" and ex.rays_equal()
    assert normally_equivalent(ex.minus, box(1, 1))


def test_chamber_samples_are_distinct():
    s = chamber_samples(5)
    ratios = {F(g, b + g) for b, g in s}
    assert len(ratios) == 5 and all(0 < r < 1 for r in ratios)
    with pytest.raises(PreconditionError):
        chamber_samples(20)


def test_flop_chambers_distinct_across_wall(fixtures):
    rb = realize(fixtures["flop"].mdp, (1, 1))
    rep = chamber_decomposition(rb.Q, rb.v, 3)
    assert rep.passed and len(rep.chambers) == 2
    assert rep.walls[0]["tag"] == "small-modification" and rep.walls[0]["distinct"]


def test_chamber_sample_count_checked(truncated_D3):
    with pytest.raises(PreconditionError):
        chamber_decomposition(truncated_D3, (0, 1, 1), 2)
