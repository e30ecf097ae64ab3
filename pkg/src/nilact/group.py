"""The two-step nilpotent affine group and its action on R^(k+1).

Elements carry coordinates ``(x, y, z)`` with ``x, y`` rational k-vectors and
``z`` rational; the faithful (k+2) x (k+2) realization has the block form

    [ I_k  x  y + z*x/2 ]
    [ 0    1  z         ]
    [ 0    0  1         ]

so that the coordinates are exactly the exponential coordinates of the Lie
algebra element with the same ``(x, y, z)``.  The stabilizer subgroup of the
origin is ``{(x, 0, 0)}`` and the quotient is identified with R^(k+1) via the
coset representatives ``(0, w, z)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    DimensionMismatchError,
    Matrix,
    Vector,
    inverse,
    is_zero_vec,
    vadd,
    vec,
    vscale,
    vsub,
    zero_vec,
)


@dataclass(frozen=True)
class GroupElement:
    k: int
    x: Vector
    y: Vector
    z: Fraction

    def __post_init__(self):
        if len(self.x) != self.k or len(self.y) != self.k:
            raise DimensionMismatchError("vector length != k")

    def to_matrix(self) -> Matrix:
        """(k+2) x (k+2) realization; top-right block is y + z*x/2."""
        k = self.k
        tr = vadd(self.y, vscale(self.z / 2, self.x))
        rows = []
        for i in range(k):
            row = [Fraction(1 if j == i else 0) for j in range(k)]
            row.append(self.x[i])
            row.append(tr[i])
            rows.append(row)
        rows.append([Fraction(0)] * k + [Fraction(1), self.z])
        rows.append([Fraction(0)] * k + [Fraction(0), Fraction(1)])
        return Matrix.from_rows(rows)

    def in_stabilizer(self) -> bool:
        return is_zero_vec(self.y) and self.z == 0


@dataclass(frozen=True)
class LieElement:
    k: int
    x: Vector
    y: Vector
    z: Fraction

    def __post_init__(self):
        if len(self.x) != self.k or len(self.y) != self.k:
            raise DimensionMismatchError("vector length != k")

    def to_matrix(self) -> Matrix:
        """Strictly upper-triangular (k+2) x (k+2) realization."""
        k = self.k
        rows = []
        for i in range(k):
            row = [Fraction(0)] * k
            row.append(self.x[i])
            row.append(self.y[i])
            rows.append(row)
        rows.append([Fraction(0)] * k + [Fraction(0), self.z])
        rows.append([Fraction(0)] * (k + 2))
        return Matrix.from_rows(rows)

    def is_zero(self) -> bool:
        return is_zero_vec(self.x) and is_zero_vec(self.y) and self.z == 0


@dataclass(frozen=True)
class Point:
    """Coordinates (w, z) on R^(k+1), the coset of (0, w, z)."""

    w: Vector
    z: Fraction


def group_element(k: int, x, y, z) -> GroupElement:
    return GroupElement(k, vec(x), vec(y), Fraction(z))


def lie_element(k: int, x, y, z) -> LieElement:
    return LieElement(k, vec(x), vec(y), Fraction(z))


def identity(k: int) -> GroupElement:
    return GroupElement(k, zero_vec(k), zero_vec(k), Fraction(0))


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    """Group law; equals the matrix product of the realizations.

    The y coordinate of the product picks up the commutator correction
    (b.z * a.x - a.z * b.x) / 2.
    """
    if a.k != b.k:
        raise DimensionMismatchError("group elements of different rank")
    corr = vscale(Fraction(1, 2), vsub(vscale(b.z, a.x), vscale(a.z, b.x)))
    return GroupElement(
        a.k, vadd(a.x, b.x), vadd(vadd(a.y, b.y), corr), a.z + b.z
    )


def inverse_element(a: GroupElement) -> GroupElement:
    return GroupElement(a.k, vscale(-1, a.x), vscale(-1, a.y), -a.z)


def group_exp(a: LieElement) -> GroupElement:
    """Exponential; the identity map in these coordinates by construction."""
    return GroupElement(a.k, a.x, a.y, a.z)


def group_log(g: GroupElement) -> LieElement:
    return LieElement(g.k, g.x, g.y, g.z)


def bracket(a: LieElement, b: LieElement) -> LieElement:
    """[a, b]; only the y part survives two-step nilpotency."""
    if a.k != b.k:
        raise DimensionMismatchError("Lie elements of different rank")
    y = vsub(vscale(b.z, a.x), vscale(a.z, b.x))
    return LieElement(a.k, zero_vec(a.k), y, Fraction(0))


def lie_add(a: LieElement, b: LieElement) -> LieElement:
    if a.k != b.k:
        raise DimensionMismatchError("Lie elements of different rank")
    return LieElement(a.k, vadd(a.x, b.x), vadd(a.y, b.y), a.z + b.z)


def lie_scale(c, a: LieElement) -> LieElement:
    c = Fraction(c)
    return LieElement(a.k, vscale(c, a.x), vscale(c, a.y), c * a.z)


def act_on_point(g: GroupElement, p: Point) -> Point:
    """Affine action on R^(k+1): (w, z) -> (w + x*z + y + z_g*x/2, z + z_g).

    Agrees with multiplying the matrix realizations and re-reading the coset
    coordinates of the product.
    """
    if g.k != len(p.w):
        raise DimensionMismatchError("point dimension != k")
    shift = vadd(g.y, vscale(g.z / 2, g.x))
    w = vadd(p.w, vadd(vscale(p.z, g.x), shift))
    return Point(w, p.z + g.z)


def act_on_point_via_matrix(g: GroupElement, p: Point) -> Point:
    """Reference path: matrix product with the coset representative."""
    k = g.k
    rep = GroupElement(k, zero_vec(k), p.w, p.z)
    prod = g.to_matrix() @ rep.to_matrix()
    w = tuple(prod[i, k + 1] for i in range(k))
    return Point(w, prod[k, k + 1])


def adjoint(g: GroupElement, w: LieElement) -> LieElement:
    """Ad(g) w by matrix conjugation in the realization."""
    if g.k != w.k:
        raise DimensionMismatchError("rank mismatch")
    k = g.k
    m = g.to_matrix() @ w.to_matrix() @ inverse(g.to_matrix())
    x = tuple(m[i, k] for i in range(k))
    y = tuple(m[i, k + 1] for i in range(k))
    return LieElement(k, x, y, m[k, k + 1])


def in_isotropy_variety(w: LieElement) -> bool:
    """Whether w lies in the union of all conjugates of the stabilizer algebra.

    That set consists of the elements (x, b*x, 0) with b a scalar; for x = 0
    only the zero element qualifies.
    """
    return isotropy_variety_witness(w) is not None


def isotropy_variety_witness(w: LieElement) -> tuple[Vector, Fraction] | None:
    """A pair (x, b) with w = (x, b*x, 0), or None if no such pair exists."""
    if w.z != 0:
        return None
    if is_zero_vec(w.x):
        return (w.x, Fraction(0)) if is_zero_vec(w.y) else None
    i = next(i for i, e in enumerate(w.x) if e != 0)
    b = w.y[i] / w.x[i]
    if w.y == vscale(b, w.x):
        return (w.x, b)
    return None
