from fractions import Fraction as F

import pytest

from toricbordism.action import (
    admissible_quotients, analyze_action, extend_divisor, is_b_type, is_bordism,
    is_equalized_at_extremes, is_q_factorial, non_admissible_is_prefix_suffix,
)
from toricbordism.errors import PreconditionError
from toricbordism.geometry.polytope import canonicalize

from conftest import box


def test_simplex_with_two_blocks(D3):
    a = analyze_action(D3, (0, 1, 1))
    assert a.critical_values == (0, 1)
    assert [c.dim for c in a.components] == [1, 1]
    assert is_equalized_at_extremes(D3, (0, 1, 1))[:2] == (True, True)
    assert not is_b_type(D3, (0, 1, 1))
    assert admissible_quotients(D3, (0, 1, 1)) == (True,)
    assert not is_bordism(D3, (0, 1, 1))


def test_square_diagonal(square):
    a = analyze_action(square, (1, 1))
    assert a.criticality == 2 and len(a.inner) == 2
    assert a.sink.dim == 0 and a.source.dim == 0
    assert admissible_quotients(square, (1, 1)) == (False, False)
    assert not is_bordism(square, (1, 1))


def test_segment_is_a_bordism(seg02):
    a = analyze_action(seg02, (1,))
    assert a.bandwidth == 2 and a.criticality == 1
    assert is_b_type(seg02, (1,)) and is_bordism(seg02, (1,))
    # lattice length 2, but the primitive edge direction pairs to 1 with v
    assert a.equalized_at_sink and a.equalized_at_source


def test_truncated_simplex_is_a_bordism(truncated_D3):
    a = analyze_action(truncated_D3, (0, 1, 1))
    assert a.critical_values == (F(1, 4), F(3, 4))
    assert not a.normalized          # rational a_0: absolute levels are kept
    assert a.b_type and a.bordism_via_cells and a.bordism_via_admissible


def test_weights_112_not_equalized(D3):
    a = analyze_action(D3, (1, 1, 2))
    assert (a.equalized_at_sink, a.equalized_at_source) == (False, False)
    assert a.equalized_witnesses
    assert a.admissible == (False, False)
    assert not a.bordism


def test_translation_normalizes_integral_levels():
    P = box(1, 1).translate((3, 2))
    a = analyze_action(P, (1, 1))
    assert a.normalized and a.critical_values[0] == 0


def test_trivial_and_bad_subgroups(square):
    with pytest.raises(PreconditionError):
        analyze_action(square, (0, 0))
    with pytest.raises(PreconditionError):
        analyze_action(square, (2, 2))
    with pytest.raises(PreconditionError):
        analyze_action(square, (1, 1, 1))


def test_interval_index_checked(square):
    a = analyze_action(square, (1, 1))
    assert a.interval(1) == (1, 2)
    with pytest.raises(PreconditionError):
        a.interval(2)


def test_q_factoriality():
    pyr = canonicalize([(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 0), (1, 1, 1)])
    assert not is_q_factorial(pyr)
    assert is_q_factorial(box(1, 1, 1))
    a = analyze_action(pyr, (0, 0, 1))
    assert a.non_simple_vertices == ((1, 1, 1),)


def test_prefix_suffix_helper():
    assert non_admissible_is_prefix_suffix((False, True, True, False))
    assert non_admissible_is_prefix_suffix((True, True))
    assert non_admissible_is_prefix_suffix((False, False))
    assert not non_admissible_is_prefix_suffix((True, False, True))


def test_extend_divisor_gives_distinct_facets(truncated_D3):
    a = analyze_action(truncated_D3, (0, 1, 1))
    S = a.polytope
    from toricbordism.action import quotient_model
    Qm = quotient_model(S, a.v, F(1, 2), a.split)
    hits = {extend_divisor(S, a.v, 0, f)[0] for f in Qm.facets}
    assert len(hits) == len(Qm.facets) == 4
    moving = {fr.index for fr in a.facet_ranges if not fr.fixed}
    assert hits == moving


def test_json_has_predicates(square):
    js = analyze_action(square, (1, 1)).to_json()
    for key in ("critical_values", "components", "b_type", "admissible", "bordism"):
        assert key in js
