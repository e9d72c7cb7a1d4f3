"""Compiled and pure-Python kernels must agree exactly."""
import random

import pytest

from toricbordism import _kernels_py as py
from toricbordism import kernels

compiled = pytest.importorskip("toricbordism._ckernels")


def _random_system(rng, n, k):
    A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(k)]
    b = [rng.randint(0, 6) for _ in range(k)]
    return A, b


def test_box_points_agree():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 4)
        A, b = _random_system(rng, n, rng.randint(1, 5))
        lo = [rng.randint(-3, 0) for _ in range(n)]
        hi = [rng.randint(0, 3) for _ in range(n)]
        assert py.box_points(A, b, lo, hi) == compiled.box_points(A, b, lo, hi)


def test_minkowski_cover_agrees():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 3)
        A, b = _random_system(rng, n, 4)
        pts = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(8)]
        base = pts[:4]
        assert py.minkowski_cover(pts, base, A, b) == compiled.minkowski_cover(pts, base, A, b)


def test_cone_reduce_agrees():
    rng = random.Random(3)
    for _ in range(20):
        A = [[1, 0], [rng.randint(-4, -1), rng.randint(1, 5)]]
        cands = sorted({(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(15)} - {(0, 0)})
        assert py.cone_reduce(cands, A) == compiled.cone_reduce(cands, A)


def test_large_entries_fall_back():
    big = 1 << 62
    A = [[big], [-1]]
    assert kernels.box_points(A, [0, 3], [0], [3]) == py.box_points(A, [0, 3], [0], [3])


def test_backend_flag():
    assert kernels.BACKEND in ("compiled", "python")
