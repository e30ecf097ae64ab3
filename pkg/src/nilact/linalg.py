"""Exact linear algebra over the rationals.

Vectors are tuples of ``Fraction``; matrices are immutable dense arrays of
``Fraction``.  Rank and determinant go through fraction-free (Bareiss)
elimination on integer-cleared rows, so every decision downstream is a real
decision rather than a floating-point guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


class DimensionMismatchError(ValueError):
    """Operands have incompatible shapes."""


class NonSquareError(DimensionMismatchError):
    """A square matrix was required."""


class SingularMatrixError(ValueError):
    """Inverse of a singular matrix was requested."""


Vector = tuple[Fraction, ...]


def vec(entries: Iterable) -> Vector:
    return tuple(Fraction(e) for e in entries)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vadd(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths {len(u)} != {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths {len(u)} != {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def vdot(u: Vector, v: Vector) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths {len(u)} != {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero_vec(v: Vector) -> bool:
    return all(a == 0 for a in v)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of rationals, stored as a tuple of row tuples."""

    rows: tuple[Vector, ...]

    def __post_init__(self):
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise DimensionMismatchError("ragged rows")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        return Matrix(tuple(vec(r) for r in rows))

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(tuple(unit_vec(n, i) for i in range(n)))

    @staticmethod
    def zero(nrows: int, ncols: int) -> "Matrix":
        return Matrix(tuple(zero_vec(ncols) for _ in range(nrows)))

    @staticmethod
    def from_columns(cols: Sequence[Vector]) -> "Matrix":
        if not cols:
            return Matrix(())
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise DimensionMismatchError("ragged columns")
        return Matrix(tuple(tuple(c[i] for c in cols) for i in range(n)))

    @staticmethod
    def outer(u: Vector, v: Vector) -> "Matrix":
        return Matrix(tuple(tuple(a * b for b in v) for a in u))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def transpose(self) -> "Matrix":
        return Matrix(tuple(self.column(j) for j in range(self.ncols)))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatchError("matrix shapes differ")
        return Matrix(tuple(vadd(a, b) for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatchError("matrix shapes differ")
        return Matrix(tuple(vsub(a, b) for a, b in zip(self.rows, other.rows)))

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix(tuple(tuple(c * e for e in r) for r in self.rows))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        cols = other.columns()
        return Matrix(tuple(tuple(vdot(r, c) for c in cols) for r in self.rows))

    def matvec(self, v: Vector) -> Vector:
        if self.ncols != len(v):
            raise DimensionMismatchError("matrix/vector sizes differ")
        return tuple(vdot(r, v) for r in self.rows)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise DimensionMismatchError("row counts differ")
        return Matrix(tuple(a + b for a, b in zip(self.rows, other.rows)))

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise DimensionMismatchError("column counts differ")
        return Matrix(self.rows + other.rows)

    def is_zero(self) -> bool:
        return all(is_zero_vec(r) for r in self.rows)

    def max_abs(self) -> Fraction:
        return max((abs(e) for r in self.rows for e in r), default=Fraction(0))

    def norm_inf(self) -> Fraction:
        """Max absolute row sum (operator norm for the sup norm)."""
        return max((sum(abs(e) for e in r) for r in self.rows), default=Fraction(0))


def frobenius_inner(a: Matrix, b: Matrix) -> Fraction:
    """Sum of entrywise products, i.e. Trace(a @ b^T)."""
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise DimensionMismatchError("matrix shapes differ")
    return sum(
        (x * y for ra, rb in zip(a.rows, b.rows) for x, y in zip(ra, rb)),
        Fraction(0),
    )


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Clear denominators row by row; preserves rank and row spans."""
    out = []
    for r in m.rows:
        d = lcm(*(e.denominator for e in r)) if r else 1
        out.append([int(e * d) for e in r])
    return out


def rank(m: Matrix) -> int:
    """Rank over Q by fraction-free integer elimination."""
    a = _integer_rows(m)
    nr, nc = len(a), len(a[0]) if a else 0
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nr):
            f = a[i][c]
            if f == 0:
                continue
            g = gcd(p, f)
            mp, mf = p // g, f // g
            a[i] = [mp * x - mf * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nr:
            break
    return r


def det(m: Matrix) -> Fraction:
    """Exact determinant via Bareiss elimination on integer-cleared rows."""
    if m.nrows != m.ncols:
        raise NonSquareError(f"determinant of {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    a = []
    scale = 1
    for r in m.rows:
        d = lcm(*(e.denominator for e in r))
        scale *= d
        a.append([int(e * d) for e in r])
    sign = 1
    prev = 1
    for c in range(n - 1):
        if a[c][c] == 0:
            piv = next((i for i in range(c + 1, n) if a[i][c] != 0), None)
            if piv is None:
                return Fraction(0)
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) // prev
            a[i][c] = 0
        prev = a[c][c]
    return Fraction(sign * a[n - 1][n - 1], scale)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination."""
    if m.nrows != m.ncols:
        raise NonSquareError(f"inverse of {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    a = [list(r) for r in m.rows]
    b = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        b[c], b[piv] = b[piv], b[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        b[c] = [x / p for x in b[c]]
        for i in range(n):
            if i == c or a[i][c] == 0:
                continue
            f = a[i][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
            b[i] = [x - f * y for x, y in zip(b[i], b[c])]
    return Matrix.from_rows(b)


def nullspace(m: Matrix) -> list[Vector]:
    """Basis of the rational kernel {v : m v = 0}."""
    nr, nc = m.nrows, m.ncols
    a = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for c in free:
        v = [Fraction(0)] * nc
        v[c] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][c]
        basis.append(tuple(v))
    return basis


def primitive_integer_vector(v: Vector) -> tuple[int, ...]:
    """Scale a nonzero rational vector to a primitive integer vector."""
    if is_zero_vec(v):
        raise ValueError("zero vector has no primitive scaling")
    d = lcm(*(e.denominator for e in v))
    ints = [int(e * d) for e in v]
    g = gcd(*ints)
    return tuple(x // g for x in ints)
