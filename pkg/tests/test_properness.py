"""Properness criteria, injectivity, genericity, dimensions."""

from fractions import Fraction
from random import Random

import pytest

from nilact.homspace import branch1_param, branch2_param
from nilact.linalg import Matrix, det, rank
from nilact.properness import (
    InvalidKError,
    branch1_kernel_direction,
    derivative_map,
    generic_dimension,
    has_nonzero_real_eigenvalue,
    identity_slice_proper,
    is_generic,
    is_injective,
    is_proper,
    is_proper_lie,
)
from nilact.group import in_isotropy_variety
from nilact.sampling import random_branch1, random_branch2, random_fraction, random_matrix

I2 = [[1, 0], [0, 1]]
J2 = [[0, -1], [1, 0]]


def rotation_block_matrix(k: int) -> Matrix:
    """J_k for even k: block antisymmetric; J'_k for odd k pads a zero."""
    half = k // 2
    rows = [[Fraction(0)] * k for _ in range(k)]
    for i in range(half):
        rows[i][half + i] = Fraction(-1)
        rows[half + i][i] = Fraction(1)
    return Matrix.from_rows(rows)


def padded_rotation_matrix(k: int) -> Matrix:
    inner = rotation_block_matrix(k - 1)
    rows = [list(r) + [Fraction(0)] for r in inner.rows]
    rows.append([Fraction(0)] * k)
    return Matrix.from_rows(rows)


def test_rotation_block_is_proper():
    v = is_proper(branch2_param(2, J2, I2))
    assert v.proper and v.branch == 2


def test_singular_direction_is_not_proper():
    v = is_proper(branch2_param(2, [[1, 0], [0, 0]], I2))
    assert not v.proper
    lo, hi = v.witness["root_interval"]
    assert lo == hi == 1


def test_branch1_identity_block_is_proper():
    for k in (1, 2, 3):
        p = branch1_param(
            k, [0] * k, Matrix.identity(k).rows, [1] + [0] * (k - 1)
        )
        assert is_proper(p).proper


def test_zero_pencil_is_not_proper():
    v = is_proper(branch2_param(2, [[0, 0], [0, 0]], [[0, 0], [0, 0]]))
    assert not v.proper
    assert v.witness == {"identically_zero": True}


def test_derivative_map_branch1_kernel_direction():
    # a orthogonal to z with Y a = 0 maps to zero.
    p = branch1_param(2, [1, 1], [[1, 0], [0, 0]], [1, 0])
    d = derivative_map(p)
    image = d.apply((Fraction(0), Fraction(1)))
    assert image.is_zero()


def test_derivative_map_branch2_columns():
    rng = Random(501)
    p = random_branch2(rng, 3)
    d = derivative_map(p)
    for j in range(3):
        a = tuple(Fraction(1 if i == j else 0) for i in range(3))
        w = d.apply(a)
        assert w.x == p.x_matrix.column(j)
        assert w.y == p.y_matrix.column(j)
        assert w.z == 0


def test_derivative_map_linear_at_zero():
    rng = Random(502)
    p = random_branch1(rng, 2)
    assert derivative_map(p).apply((Fraction(0), Fraction(0))).is_zero()


def test_proper_lie_examples():
    assert is_proper_lie(branch2_param(2, J2, I2))
    p = branch1_param(2, [1, 1], [[1, 0], [0, 0]], [1, 0])
    assert rank(Matrix.from_rows([[1, 0], [0, 0]])) < 2
    assert not is_proper_lie(p)
    q = branch2_param(2, [[0, 0], [0, 0]], [[1, 0], [0, 0]])
    assert not is_proper_lie(q)


def test_criteria_agree_on_randoms():
    rng = Random(503)
    for _ in range(400):
        k = rng.choice([1, 2, 3, 4])
        p = random_branch1(rng, k) if rng.random() < 0.5 else random_branch2(rng, k)
        assert is_proper(p).proper == is_proper_lie(p)


def test_injectivity_examples():
    k = 3
    assert is_injective(branch2_param(k, Matrix.zero(k, k).rows, Matrix.identity(k).rows))
    assert not is_injective(branch2_param(k, Matrix.zero(k, k).rows, Matrix.zero(k, k).rows))
    p = branch1_param(2, [1, 1], [[0, 0], [0, 0]], [1, 0])
    assert not is_injective(p)
    assert branch1_kernel_direction(p) is not None


def test_proper_implies_injective():
    rng = Random(504)
    for _ in range(200):
        k = rng.choice([1, 2, 3])
        p = random_branch1(rng, k) if rng.random() < 0.5 else random_branch2(rng, k)
        if is_proper(p).proper:
            assert is_injective(p)


def test_branch1_kernel_direction_is_killed():
    rng = Random(505)
    found = 0
    while found < 10:
        p = random_branch1(rng, 2)
        a = branch1_kernel_direction(p)
        if a is None:
            continue
        found += 1
        assert p.y_matrix.matvec(a) == (0, 0)
        assert sum(zi * ai for zi, ai in zip(p.z, a)) == 0


def test_generic_examples():
    assert is_generic(branch2_param(2, J2, I2))
    j3 = padded_rotation_matrix(3)
    assert is_generic(branch2_param(3, j3.rows, Matrix.identity(3).rows))
    p = branch2_param(2, [[0, 0], [0, 0]], I2)
    assert is_proper(p).proper
    assert not is_generic(p)


def test_generic_implies_proper():
    rng = Random(506)
    for _ in range(300):
        k = rng.choice([1, 2, 3])
        p = random_branch2(rng, k)
        if is_generic(p):
            assert is_proper(p).proper


def test_parity_law_odd_k():
    rng = Random(507)
    for _ in range(300):
        p = random_branch2(rng, 3)
        if is_proper(p).proper:
            assert det(p.x_matrix) == 0


def test_generic_stability_at_sample_points():
    rng = Random(508)
    eps = Fraction(1, 10**6)
    for k in (2, 3):
        x0 = rotation_block_matrix(k) if k % 2 == 0 else padded_rotation_matrix(k)
        for _ in range(20):
            dx = random_matrix(rng, k).scale(eps)
            dy = random_matrix(rng, k).scale(eps)
            if k % 2 == 1:
                # keep the rank-(k-1) structure: perturb the invertible block only
                rows = [list(r) for r in dx.rows]
                for i in range(k):
                    rows[i][k - 1] = Fraction(0)
                    rows[k - 1][i] = Fraction(0)
                dx = Matrix.from_rows(rows)
            p = branch2_param(k, (x0 + dx).rows, (Matrix.identity(k) + dy).rows)
            assert is_generic(p)


def test_branch1_rank_condition_blocks_variety_hits():
    rng = Random(509)
    for _ in range(100):
        k = rng.choice([2, 3])
        p = random_branch1(rng, k)
        if not is_proper(p).proper:
            continue
        d = derivative_map(p)
        a = tuple(random_fraction(rng) for _ in range(k))
        w = d.apply(a)
        if not w.is_zero():
            assert not in_isotropy_variety(w)


def test_dimension_table():
    d2 = generic_dimension(2)
    assert (d2.branch1_regular, d2.branch2_generic, d2.deformation_generic) == (8, 8, 7)
    d3 = generic_dimension(3)
    assert (d3.branch1_regular, d3.branch2_generic, d3.deformation_generic) == (15, 17, 16)
    d1 = generic_dimension(1)
    assert (d1.branch1_regular, d1.branch2_generic, d1.deformation_generic) == (3, 1, 2)


def test_dimension_rejects_bad_k():
    with pytest.raises(InvalidKError):
        generic_dimension(0)


def test_identity_slice_examples():
    assert identity_slice_proper(Matrix.from_rows([[0, 1], [0, 0]]))
    assert not identity_slice_proper(Matrix.from_rows([[1, 0], [0, 0]]))
    assert identity_slice_proper(Matrix.from_rows(J2))


def test_identity_slice_matches_eigenvalue_test():
    rng = Random(510)
    for _ in range(200):
        k = rng.choice([2, 3])
        x = random_matrix(rng, k)
        assert identity_slice_proper(x) == (not has_nonzero_real_eigenvalue(x))


def test_nonzero_eigenvalue_detection():
    assert has_nonzero_real_eigenvalue(Matrix.from_rows([[2, 0], [0, 0]]))
    assert not has_nonzero_real_eigenvalue(Matrix.from_rows([[0, 1], [0, 0]]))
    assert not has_nonzero_real_eigenvalue(Matrix.from_rows(J2))
