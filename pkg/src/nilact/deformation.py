"""Conjugation action on the parameter charts and canonical orbit forms.

Conjugating a homomorphism by a group element h = (a, b, c) moves the chart
data by

    branch 1: (x, Y, z) -> (x, Y + (a - c*x) z^T, z)
    branch 2: (X, Y)    -> (X, Y - c*X)

so each orbit meets exactly one normalized representative: on branch 1 the
unique translate with Y z = 0, on branch 2 the unique translate with
Trace(X Y^T) = 0 (any Y when X = 0, where the action is trivial).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .group import GroupElement
from .homspace import (
    Branch1Param,
    Branch2Param,
    Param,
    branch1_approximant,
    in_branch1_closure,
    rank_one_factorization,
)
from .linalg import (
    DimensionMismatchError,
    Matrix,
    frobenius_inner,
    is_zero_vec,
    vdot,
    vscale,
    vsub,
)
from .properness import is_proper


class NotProperError(ValueError):
    """Operation requires a properly discontinuous parameter."""


@dataclass(frozen=True)
class CanonicalForm:
    """Normalized orbit representative; equality is exact and entrywise."""

    param: Param

    @property
    def branch(self) -> int:
        return self.param.branch


def act_on_param(h: GroupElement, p: Param) -> Param:
    """Transport of conjugation by h to the charts.

    This is a left action: acting by h1*h2 equals acting by h2 then h1.
    The b coordinate of h never enters.
    """
    if h.k != p.k:
        raise DimensionMismatchError("rank mismatch")
    if isinstance(p, Branch1Param):
        shift = Matrix.outer(vsub(h.x, vscale(h.z, p.x)), p.z)
        return Branch1Param(p.k, p.x, p.y_matrix + shift, p.z)
    return Branch2Param(p.k, p.x_matrix, p.y_matrix - p.x_matrix.scale(h.z))


def canonicalize(p: Param, require_proper: bool = False) -> CanonicalForm:
    """The unique normalized point on the orbit of p.

    branch 1: Y' = Y - (Y z) z^T / <z, z>, the one translate with Y' z = 0;
    branch 2: Y' = Y - c X with c = Trace(X Y^T) / Trace(X X^T), c = 0 for
    X = 0.  Idempotent by construction.
    """
    if require_proper and not is_proper(p, with_witness=False).proper:
        raise NotProperError("parameter is not properly discontinuous")
    if isinstance(p, Branch1Param):
        zz = vdot(p.z, p.z)
        v = vscale(-1 / zz, p.y_matrix.matvec(p.z))
        y = p.y_matrix + Matrix.outer(v, p.z)
        return CanonicalForm(Branch1Param(p.k, p.x, y, p.z))
    x = p.x_matrix
    if x.is_zero():
        return CanonicalForm(p)
    c = frobenius_inner(x, p.y_matrix) / frobenius_inner(x, x)
    return CanonicalForm(Branch2Param(p.k, x, p.y_matrix - x.scale(c)))


def orbit_equivalent(p: Param, q: Param) -> bool:
    """Whether two proper parameters are conjugate, i.e. define the same
    point of the deformation space."""
    if not is_proper(p, with_witness=False).proper or not is_proper(q, with_witness=False).proper:
        raise NotProperError("orbit equivalence is defined on proper parameters")
    if p.branch != q.branch:
        return False
    return canonicalize(p) == canonicalize(q)


@dataclass(frozen=True)
class Crossing:
    """A sampled perturbation that left the base point's stratum: it is not
    proper, or it landed in the other parametrization branch (or both)."""

    param: Param
    branch: int
    proper: bool
    branch_switch: bool


@dataclass(frozen=True)
class StabilityReport:
    base_branch: int
    radius: Fraction
    trials: int
    proper_count: int
    proper_fraction: Fraction
    crossings: tuple[Crossing, ...]


_GRID = 32  # perturbations move on the grid (radius / _GRID) * {-_GRID..._GRID}


def _perturb(rng: Random, value: Fraction, radius: Fraction) -> Fraction:
    return value + radius * Fraction(rng.randint(-_GRID, _GRID), _GRID)


def _perturb_matrix(rng: Random, m: Matrix, radius: Fraction) -> Matrix:
    return Matrix(
        tuple(tuple(_perturb(rng, e, radius) for e in row) for row in m.rows)
    )


def _perturb_branch1(rng: Random, p: Branch1Param, radius: Fraction) -> Param:
    x = tuple(_perturb(rng, e, radius) for e in p.x)
    y = _perturb_matrix(rng, p.y_matrix, radius)
    z = tuple(_perturb(rng, e, radius) for e in p.z)
    if is_zero_vec(z):
        # Landed exactly on the chart boundary; the limit point is the
        # branch-2 parameter with X = 0.
        return Branch2Param(p.k, Matrix.zero(p.k, p.k), y)
    return Branch1Param(p.k, x, y, z)


def stability_probe(
    p: Param, radius: Fraction, trials: int, seed: int
) -> StabilityReport:
    """Sample seeded rational perturbations of p and classify each one.

    Perturbations move every chart coordinate on a uniform rational grid
    scaled by ``radius``.  For a branch-2 base with rank X <= 1 every fourth
    trial instead perturbs a branch-1 point approaching p, so the chart
    boundary is probed deliberately rather than by chance.  A sample is
    recorded as a crossing when it is not proper or when it lies in the
    other branch than p.
    """
    radius = Fraction(radius)
    if radius <= 0:
        raise ValueError("radius must be positive")
    if trials < 1:
        raise ValueError("trials must be positive")
    if not is_proper(p, with_witness=False).proper:
        raise NotProperError("stability probe requires a proper base point")
    rng = Random(seed)
    cross_branch = isinstance(p, Branch2Param) and in_branch1_closure(p)
    anchor = None
    if cross_branch:
        # Choose l so the approximant sits within ~radius/2 of p entrywise.
        bound = _approximant_distance_bound(p)
        l = 1
        while bound / l > radius / 2:
            l *= 2
        anchor = branch1_approximant(p, l)
    proper_count = 0
    crossings = []
    for trial in range(trials):
        if isinstance(p, Branch1Param):
            q = _perturb_branch1(rng, p, radius)
        elif cross_branch and trial % 4 == 3:
            q = _perturb_branch1(rng, anchor, radius)
        else:
            q = Branch2Param(
                p.k,
                _perturb_matrix(rng, p.x_matrix, radius),
                _perturb_matrix(rng, p.y_matrix, radius),
            )
        verdict = is_proper(q, with_witness=False).proper
        if verdict:
            proper_count += 1
        switched = q.branch != p.branch
        if not verdict or switched:
            crossings.append(Crossing(q, q.branch, verdict, switched))
    return StabilityReport(
        p.branch,
        radius,
        trials,
        proper_count,
        Fraction(proper_count, trials),
        tuple(crossings),
    )


def _approximant_distance_bound(p: Branch2Param) -> Fraction:
    """C such that branch1_approximant(p, l) sits within C / l of p entrywise."""
    col, a = rank_one_factorization(p.x_matrix)
    amax = max(abs(e) for e in a)
    xmax = max((abs(e) for e in col), default=Fraction(0))
    return max(amax, amax * amax * xmax / 2, Fraction(1))
