"""Decision procedures for properly discontinuous lattice actions.

A parameter acts properly discontinuously (and freely) on R^(k+1) exactly
when:

* branch 1 -- the k x (k+1) matrix (Y^T | z) has full rank k;
* branch 2 -- det(Y - lambda X) has no real zero (a vanishing pencil
  determinant counts as failing, since it vanishes for every lambda).

``is_proper`` decides this directly; ``is_proper_lie`` re-derives the same
boolean through the differential of the extended homomorphism and the
adjoint-orbit variety of the stabilizer algebra, as an internal cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import LieElement
from .homspace import Branch1Param, Branch2Param, Param
from .linalg import Matrix, NonSquareError, Vector, nullspace, rank
from .pencil import (
    IDENTICALLY_ZERO,
    count_real_roots,
    isolate_real_root,
    pencil_polynomial,
    poly_trim,
)


class InvalidKError(ValueError):
    """Rank parameter k must be a positive integer."""


@dataclass(frozen=True)
class PropernessVerdict:
    proper: bool
    branch: int
    witness: dict

    def __bool__(self) -> bool:
        return self.proper


@dataclass(frozen=True)
class DerivativeMap:
    """The linear map a -> d(psi)(a) into the Lie algebra, one component
    matrix per coordinate block (x, y, z rows stacked for rank tests)."""

    branch: int
    x_map: Matrix
    y_map: Matrix
    z_map: Matrix  # 1 x k

    def apply(self, a: Vector) -> LieElement:
        k = self.y_map.ncols
        return LieElement(
            k, self.x_map.matvec(a), self.y_map.matvec(a), self.z_map.matvec(a)[0]
        )

    def stacked(self) -> Matrix:
        return self.x_map.vstack(self.y_map).vstack(self.z_map)


def _branch1_constraint_matrix(p: Branch1Param) -> Matrix:
    """(Y^T | z): its left kernel criterion drives every branch-1 test."""
    zcol = Matrix.from_columns((p.z,))
    return p.y_matrix.transpose().hstack(zcol)


def is_proper(p: Param, with_witness: bool = True) -> PropernessVerdict:
    """Membership of the parameter in the properly-discontinuous locus.

    Root isolation only runs when a witness interval is requested; the
    verdict itself needs nothing beyond the Sturm count.
    """
    if isinstance(p, Branch1Param):
        r = rank(_branch1_constraint_matrix(p))
        return PropernessVerdict(r == p.k, 1, {"rank": r, "required": p.k})
    f = pencil_polynomial(p.x_matrix, p.y_matrix)
    n = count_real_roots(f)
    if n is IDENTICALLY_ZERO:
        return PropernessVerdict(False, 2, {"identically_zero": True})
    if n == 0:
        return PropernessVerdict(True, 2, {"real_root_count": 0})
    witness: dict = {"real_root_count": n}
    if with_witness:
        witness["root_interval"] = isolate_real_root(f)
    return PropernessVerdict(False, 2, witness)


def derivative_map(p: Param) -> DerivativeMap:
    """d(psi) on the syndetic hull R^k:

    branch 1: a -> (<a,z> x, Y a, <a,z>); branch 2: a -> (X a, Y a, 0).
    """
    if isinstance(p, Branch1Param):
        return DerivativeMap(
            1,
            Matrix.outer(p.x, p.z),
            p.y_matrix,
            Matrix((p.z,)),
        )
    k = p.k
    return DerivativeMap(2, p.x_matrix, p.y_matrix, Matrix.zero(1, k))


def is_proper_lie(p: Param) -> bool:
    """Properness decided through the Lie-algebra conditions.

    Injectivity of d(psi) is a rank test on the stacked component matrices.
    Meeting the adjoint-orbit variety only at 0 is automatic on branch 1
    once d(psi) is injective; on branch 2 it amounts to the pencil having no
    real zero.  Must agree with is_proper on every input.
    """
    d = derivative_map(p)
    injective = rank(d.stacked()) == p.k
    if isinstance(p, Branch1Param):
        return injective
    if not injective:
        return False
    n = count_real_roots(pencil_polynomial(p.x_matrix, p.y_matrix))
    return n == 0 and n is not IDENTICALLY_ZERO


def is_injective(p: Param) -> bool:
    """Whether the lattice homomorphism is injective.

    A rational kernel vector scales to an integer one, so triviality of the
    rational kernel decides injectivity on the lattice.
    """
    if isinstance(p, Branch1Param):
        return rank(_branch1_constraint_matrix(p)) == p.k
    stacked = p.x_matrix.vstack(p.y_matrix)
    return rank(stacked) == p.k


def is_generic(p: Branch2Param) -> bool:
    """Membership in the full-dimensional open part of the proper branch-2
    locus: det X != 0 for even k; rank X = k - 1 with nonvanishing
    subleading pencil coefficient for odd k."""
    if not isinstance(p, Branch2Param):
        raise TypeError("genericity is defined for branch-2 parameters")
    f = pencil_polynomial(p.x_matrix, p.y_matrix)
    n = count_real_roots(f)
    if n is IDENTICALLY_ZERO or n != 0:
        return False
    k = p.k
    if k % 2 == 0:
        return f[k] != 0  # f[k] = (-1)^k det X
    return rank(p.x_matrix) == k - 1 and f[k - 1] != 0


@dataclass(frozen=True)
class GenericDimensions:
    branch1_regular: int
    branch2_generic: int
    deformation_generic: int


def generic_dimension(k: int) -> GenericDimensions:
    """Dimensions of the regular/generic strata and of the generic part of
    the deformation space."""
    if not isinstance(k, int) or k < 1:
        raise InvalidKError(f"k must be a positive integer, got {k}")
    dim_b1 = k * (k + 2)
    dim_b2 = 2 * k * k if k % 2 == 0 else 2 * k * k - 1
    if k == 1:
        dim_t = 2
    elif k % 2 == 0:
        dim_t = 2 * k * k - 1
    else:
        dim_t = 2 * k * k - 2
    return GenericDimensions(dim_b1, dim_b2, dim_t)


def identity_slice_proper(x: Matrix) -> bool:
    """Properness of the branch-2 parameter (X, I_k).

    Equivalent to X having no nonzero real eigenvalue: det(I - lambda X) = 0
    with lambda != 0 exactly when 1/lambda is an eigenvalue.
    """
    if x.nrows != x.ncols:
        raise NonSquareError("slice test requires a square matrix")
    k = x.nrows
    p = Branch2Param(k, x, Matrix.identity(k))
    return is_proper(p).proper


def has_nonzero_real_eigenvalue(x: Matrix) -> bool:
    """Sturm count of nonzero real roots of the characteristic polynomial.

    Independent cross-check for identity_slice_proper: char(lambda) =
    det(X - lambda I) up to sign, with the zero eigenvalue stripped off
    before counting.
    """
    if x.nrows != x.ncols:
        raise NonSquareError("eigenvalue test requires a square matrix")
    k = x.nrows
    char = pencil_polynomial(Matrix.identity(k), x)  # det(X - lambda I)
    char = poly_trim(char)
    shift = 0
    while shift < len(char) and char[shift] == 0:
        shift += 1
    reduced = char[shift:]
    n = count_real_roots(reduced)
    return n is not IDENTICALLY_ZERO and n > 0


def branch1_kernel_direction(p: Branch1Param) -> Vector | None:
    """A nonzero rational a with Y a = 0 and <z, a> = 0, if one exists."""
    basis = nullspace(_branch1_constraint_matrix(p).transpose())
    return basis[0] if basis else None
