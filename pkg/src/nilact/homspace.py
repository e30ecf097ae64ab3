"""Parametrization of the homomorphisms Z^k -> G by two disjoint charts.

A homomorphism is pinned down by its values on the standard generators; a
k-tuple of group elements arises this way exactly when it commutes pairwise,
which for this group reduces to z_i * x_j = z_j * x_i for all i, j.  The
solutions split into two charts:

* branch 1 (some z_j nonzero): all x_j share a direction, x_j = z_j * x, so
  the data is (x, Y, z) with z a nonzero vector and Y the matrix of y-columns;
* branch 2 (z = 0): the data is an unconstrained pair of matrices (X, Y).

Branch 2 is closed in the glued space; a branch-2 point is a limit of
branch-1 points exactly when rank X <= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .group import GroupElement
from .linalg import (
    DimensionMismatchError,
    Matrix,
    Vector,
    is_zero_vec,
    rank,
    vec,
    vscale,
)


class ZeroZVectorError(ValueError):
    """Branch-1 parameters require a nonzero z vector."""


class NotCommutingError(ValueError):
    """A generator tuple fails the pairwise commutation relations."""

    def __init__(self, i: int, j: int):
        super().__init__(f"generators {i} and {j} do not commute")
        self.indices = (i, j)


class InconsistentTupleError(ValueError):
    """Commuting shape violated in a way that signals corrupted input."""


class RankTooHighError(ValueError):
    """Branch-1 approximants exist only when rank X <= 1."""


@dataclass(frozen=True)
class Branch1Param:
    """Chart data (x, Y, z) with z != 0; generator j maps to (z_j x, y_j, z_j)."""

    k: int
    x: Vector
    y_matrix: Matrix
    z: Vector

    def __post_init__(self):
        if len(self.x) != self.k or len(self.z) != self.k:
            raise DimensionMismatchError("vector length != k")
        if (self.y_matrix.nrows, self.y_matrix.ncols) != (self.k, self.k):
            raise DimensionMismatchError("Y must be k x k")
        if is_zero_vec(self.z):
            raise ZeroZVectorError("z vector must be nonzero on branch 1")

    @property
    def branch(self) -> int:
        return 1


@dataclass(frozen=True)
class Branch2Param:
    """Chart data (X, Y); generator j maps to (x_j, y_j, 0)."""

    k: int
    x_matrix: Matrix
    y_matrix: Matrix

    def __post_init__(self):
        for m in (self.x_matrix, self.y_matrix):
            if (m.nrows, m.ncols) != (self.k, self.k):
                raise DimensionMismatchError("X and Y must be k x k")

    @property
    def branch(self) -> int:
        return 2


Param = Branch1Param | Branch2Param

GeneratorTuple = tuple[GroupElement, ...]


def branch1_param(k: int, x, y_rows, z) -> Branch1Param:
    return Branch1Param(k, vec(x), Matrix.from_rows(y_rows), vec(z))


def branch2_param(k: int, x_rows, y_rows) -> Branch2Param:
    return Branch2Param(k, Matrix.from_rows(x_rows), Matrix.from_rows(y_rows))


def branch1_generators(p: Branch1Param) -> GeneratorTuple:
    cols = p.y_matrix.columns()
    return tuple(
        GroupElement(p.k, vscale(p.z[j], p.x), cols[j], p.z[j])
        for j in range(p.k)
    )


def branch2_generators(p: Branch2Param) -> GeneratorTuple:
    xc, yc = p.x_matrix.columns(), p.y_matrix.columns()
    return tuple(
        GroupElement(p.k, xc[j], yc[j], Fraction(0)) for j in range(p.k)
    )


def generators(p: Param) -> GeneratorTuple:
    if isinstance(p, Branch1Param):
        return branch1_generators(p)
    return branch2_generators(p)


def parse_generators(t: GeneratorTuple) -> Param:
    """Invert the charts: recover the parameter behind a commuting tuple.

    Raises NotCommutingError when z_i x_j != z_j x_i for some pair, and
    InconsistentTupleError if a nonzero-z tuple admits no shared direction
    (impossible for genuinely commuting input).
    """
    k = len(t)
    if k == 0:
        raise DimensionMismatchError("empty generator tuple")
    if any(g.k != k for g in t):
        raise DimensionMismatchError("generator rank != tuple length")
    for i in range(k):
        for j in range(i + 1, k):
            if vscale(t[i].z, t[j].x) != vscale(t[j].z, t[i].x):
                raise NotCommutingError(i, j)
    y = Matrix.from_columns(tuple(g.y for g in t))
    z = tuple(g.z for g in t)
    if is_zero_vec(z):
        x = Matrix.from_columns(tuple(g.x for g in t))
        return Branch2Param(k, x, y)
    j0 = next(j for j in range(k) if z[j] != 0)
    x = vscale(1 / z[j0], t[j0].x)
    for j in range(k):
        if t[j].x != vscale(z[j], x):
            raise InconsistentTupleError(
                f"generator {j} is not aligned with the shared direction"
            )
    return Branch1Param(k, x, y, z)


def in_branch1_closure(p: Branch2Param) -> bool:
    """Whether the branch-2 point is a limit of branch-1 points (rank X <= 1)."""
    return rank(p.x_matrix) <= 1


def rank_one_factorization(x: Matrix) -> tuple[Vector, Vector]:
    """Write a rank <= 1 matrix as an outer product column * row.

    Deterministic choice: the row vector is the first nonzero row of X and
    the column collects the per-row scalings.  For X = 0 the convention is
    (0, e_1).
    """
    k = x.nrows
    if rank(x) > 1:
        raise RankTooHighError("matrix has rank >= 2")
    if x.is_zero():
        return (
            tuple(Fraction(0) for _ in range(k)),
            tuple(Fraction(1 if i == 0 else 0) for i in range(k)),
        )
    i0 = next(i for i in range(k) if not is_zero_vec(x.row(i)))
    a = x.row(i0)
    j0 = next(j for j in range(k) if a[j] != 0)
    col = tuple(x[i, j0] / a[j0] for i in range(k))
    return col, a


def branch1_approximant(p: Branch2Param, l: int) -> Branch1Param:
    """The branch-1 point (l*x, Y, a/l) for a factorization X = x a^T.

    As l grows, its generator tuple converges entrywise (in the matrix
    realization) to the branch-2 generators of p.
    """
    if l < 1:
        raise ValueError("l must be a positive integer")
    col, a = rank_one_factorization(p.x_matrix)
    return Branch1Param(
        p.k, vscale(l, col), p.y_matrix, vscale(Fraction(1, l), a)
    )
