from fractions import Fraction as F

import pytest

from toricbordism.geometry.fan import normal_fan, normally_equivalent, refines
from toricbordism.geometry.polytope import GeometryError, canonicalize, slice_polytope
from toricbordism.geometry.split import lattice_split, project_level_set

from conftest import box, simplex


def test_normal_fan_of_square():
    F_ = normal_fan(box(1, 1))
    assert F_.ray_set() == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert len(F_.maximal_cones()) == 4


def test_normal_equivalence_ignores_scale_and_translation():
    assert normally_equivalent(box(1, 1), box(2, 3))
    assert not normally_equivalent(box(1, 1), simplex(2))
    assert normally_equivalent(simplex(2), simplex(2, 3).translate((1, 5)))


def test_square_refines_simplex_fan_after_blowup():
    hexa = canonicalize([(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)])
    assert refines(hexa, simplex(2))
    assert not refines(simplex(2), hexa)


def test_split_matrices():
    assert lattice_split((1, 1)).matrix == ((1, 0), (1, 1))
    assert lattice_split((0, 1, 1)).matrix == ((1, 0, 0), (0, 1, 0), (0, 1, 1))
    assert lattice_split((0, 0, 1)).matrix == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_split_rejects_bad_vectors():
    with pytest.raises(GeometryError):
        lattice_split((0, 0))
    with pytest.raises(GeometryError):
        lattice_split((2, 4))


def test_projected_half_slice_is_a_square():
    S = slice_polytope(simplex(3), (0, 1, 1), F(1, 2))
    proj = project_level_set(S, lattice_split((0, 1, 1)))
    assert proj.full_dimensional
    assert normally_equivalent(proj, box(1, 1))


def test_split_section_and_lift():
    s = lattice_split((2, 3, 5))
    assert sum(a * b for a, b in zip(s.section, (2, 3, 5))) == 1
    u = (4, -1, 7)
    y = s.project(u)
    lvl = sum(a * b for a, b in zip(u, (2, 3, 5)))
    assert s.lift(y, lvl) == u
