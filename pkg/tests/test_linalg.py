from fractions import Fraction as F

from toricbordism.geometry.linalg import (
    hnf_rows, integer_kernel, inverse, matvec, nullspace, primitive, rank, row_column_reduce,
    saturate, solve, in_lattice_coords,
)


def test_primitive_rescales_positively():
    assert primitive([F(1, 2), F(3, 4)]) == (2, 3)
    assert primitive([0, -4, 6]) == (0, -2, 3)


def test_rank_and_nullspace():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert rank(rows) == 2
    ns = nullspace(rows, 3)
    assert len(ns) == 1
    assert all(sum(a * b for a, b in zip(r, ns[0])) == 0 for r in rows)


def test_inverse_and_solve():
    M = [[2, 1], [1, 1]]
    Mi = inverse(M)
    assert Mi == [[1, -1], [-1, 2]]
    assert solve(M, [3, 2]) == (1, 1)
    assert list(matvec(M, (1, 1))) == [3, 2]


def test_hnf_is_canonical():
    a = hnf_rows([[2, 4], [1, 3]])
    b = hnf_rows([[1, 3], [3, 7]])
    assert a == b


def test_row_column_reduce():
    g, C = row_column_reduce((4, 6))
    assert g == 2
    row = [sum(x * C[i][j] for i, x in enumerate((4, 6))) for j in range(2)]
    assert row == [2, 0]


def test_integer_kernel_and_saturation():
    K = integer_kernel([[1, 1, 2]], 3)
    assert len(K) == 2
    assert all(k[0] + k[1] + 2 * k[2] == 0 for k in K)
    S = saturate([(2, 0), (0, 2)])
    assert sorted(S) == [(0, 1), (1, 0)]
    assert in_lattice_coords((3, 5), [(1, 0), (0, 1)]) == (3, 5)
