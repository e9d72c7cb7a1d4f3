"""Unimodular splits of Z^n adapted to a one-parameter subgroup.

``lattice_split(v)`` returns U in GL_n(Z) whose last row is v.  The remaining
rows are the dual basis to the HNF basis of the kernel lattice v-perp, so the
result is canonical; for v = e_n it is the identity.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import (
    dot, hnf_reduce, integer_kernel, inverse, row_column_reduce, transpose, vec_gcd,
)
from .polytope import GeometryError, RationalPolytope, canonicalize


@dataclass(frozen=True)
class LatticeSplit:
    direction: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]    # U; last row is the direction
    inverse: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.direction)

    @property
    def projection(self) -> tuple[tuple[int, ...], ...]:
        return self.matrix[:-1]

    @property
    def section(self) -> tuple[int, ...]:
        """Integer vector w with <w, v> = 1 (last column of U^-1)."""
        return tuple(r[-1] for r in self.inverse)

    def apply(self, u: Sequence) -> tuple:
        return tuple(dot(r, u) for r in self.matrix)

    def project(self, u: Sequence) -> tuple:
        return tuple(dot(r, u) for r in self.matrix[:-1])

    def lift(self, y: Sequence, level) -> tuple:
        z = tuple(y) + (level,)
        return tuple(dot(r, z) for r in self.inverse)

    def to_json(self):
        return {"direction": list(self.direction), "matrix": [list(r) for r in self.matrix]}


def lattice_split(v: Sequence[int]) -> LatticeSplit:
    v = tuple(int(x) for x in v)
    if not any(v):
        raise GeometryError("one-parameter subgroup must be nonzero")
    if vec_gcd(v) != 1:
        raise GeometryError(f"one-parameter subgroup {v} is not primitive")
    n = len(v)
    kern = integer_kernel([v], n)
    _, C = row_column_reduce(v)
    w = tuple(r[0] for r in C)
    w = hnf_reduce(w, kern)
    cols = list(kern) + [w]
    Uinv = transpose(cols)
    U = inverse(Uinv)
    U = tuple(tuple(int(x) for x in r) for r in U)
    assert U[-1] == v
    return LatticeSplit(v, U, tuple(tuple(int(x) for x in r) for r in Uinv))


def project_level_set(Q: RationalPolytope, split: LatticeSplit) -> RationalPolytope:
    levels = {dot(p, split.direction) for p in Q.vertices}
    if len(levels) != 1:
        raise GeometryError("polytope is not contained in a single level set")
    pts = [split.project(p) for p in Q.vertices]
    return canonicalize(pts, rank=split.rank - 1)


def level_of(Q: RationalPolytope, v: Sequence[int]) -> Fraction:
    levels = {dot(p, v) for p in Q.vertices}
    if len(levels) != 1:
        raise GeometryError("polytope is not contained in a single level set")
    return levels.pop()
