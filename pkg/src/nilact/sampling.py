"""Seeded random rational parameters for probes, sampling runs, and tests."""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .homspace import Branch1Param, Branch2Param, Param
from .linalg import Matrix


def random_fraction(rng: Random, bound: int = 3, max_den: int = 4) -> Fraction:
    """Uniform-ish rational in [-bound, bound] with denominator <= max_den."""
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-bound * den, bound * den), den)


def random_matrix(rng: Random, k: int, bound: int = 3, max_den: int = 4) -> Matrix:
    return Matrix.from_rows(
        [[random_fraction(rng, bound, max_den) for _ in range(k)] for _ in range(k)]
    )


def random_branch1(rng: Random, k: int, bound: int = 3, max_den: int = 4) -> Branch1Param:
    x = tuple(random_fraction(rng, bound, max_den) for _ in range(k))
    y = random_matrix(rng, k, bound, max_den)
    z = tuple(random_fraction(rng, bound, max_den) for _ in range(k))
    while all(e == 0 for e in z):
        z = tuple(random_fraction(rng, bound, max_den) for _ in range(k))
    return Branch1Param(k, x, y, z)


def random_branch2(rng: Random, k: int, bound: int = 3, max_den: int = 4) -> Branch2Param:
    return Branch2Param(
        k, random_matrix(rng, k, bound, max_den), random_matrix(rng, k, bound, max_den)
    )


def random_param(rng: Random, k: int, branch: int, bound: int = 3, max_den: int = 4) -> Param:
    if branch == 1:
        return random_branch1(rng, k, bound, max_den)
    return random_branch2(rng, k, bound, max_den)


def random_rank_le1_branch2(
    rng: Random, k: int, bound: int = 2, max_den: int = 4
) -> Branch2Param:
    """Branch-2 parameter with X = col * row, hence rank X <= 1."""
    col = [random_fraction(rng, bound, max_den) for _ in range(k)]
    row = [random_fraction(rng, bound, max_den) for _ in range(k)]
    x = Matrix.from_rows([[a * b for b in row] for a in col])
    return Branch2Param(k, x, random_matrix(rng, k, bound, max_den))


def random_proper(rng: Random, k: int, branch: int, bound: int = 3, max_den: int = 4):
    """Rejection-sample a properly discontinuous parameter.

    For odd k, proper branch-2 points need a singular X, so candidates there
    draw X with a zeroed final column to keep rejection affordable.
    """
    from .properness import is_proper

    while True:
        if branch == 1:
            p = random_branch1(rng, k, bound, max_den)
        elif k % 2 == 1 and k > 1:
            x = random_matrix(rng, k, bound, max_den)
            rows = [list(r) for r in x.rows]
            for i in range(k):
                rows[i][k - 1] = 0
            p = Branch2Param(k, Matrix.from_rows(rows), random_matrix(rng, k, bound, max_den))
        else:
            p = random_branch2(rng, k, bound, max_den)
        if is_proper(p, with_witness=False).proper:
            return p
