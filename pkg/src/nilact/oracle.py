"""Brute-force verification of proper discontinuity by box return counting.

For the compact set S = [-R, R]^(k+1) the oracle counts the lattice elements
m with phi(m) S meeting S, over growing lattice boxes.  A properly
discontinuous action leaves only finitely many returns, so the counts
stabilize; a failing one keeps producing returns forever.

Verdicts are designed to be sound, never just suggestive:

* NotProper requires an exhibited one-parameter family t * m0 of returning
  elements -- a lattice kernel vector (the homomorphism is not injective) or
  an integer vector killed by Y - lambda0 X for a rational lambda0 with
  |lambda0| <= R -- verified through box_returns up to the largest radius.
* Proper requires stabilized counts over the final half of the schedule AND
  an exact certificate that the obstruction cannot reappear beyond the box:
  trivial lattice kernel on branch 1, and on branch 2 a subdivision
  certificate that Y - lambda X stays invertible across the whole real-root
  range of its determinant.

Everything else is Inconclusive.  Consequently a non-Inconclusive verdict
always agrees with the rank/pencil criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import _boxcount_py
from .group import GroupElement, group_exp, group_log, lie_add, lie_scale
from .homspace import Branch1Param, Branch2Param, Param, generators
from .linalg import (
    Matrix,
    Vector,
    det,
    inverse,
    nullspace,
    primitive_integer_vector,
)
from .pencil import (
    pencil_polynomial,
    poly_trim,
    rational_roots,
    root_bound,
)
from .properness import branch1_kernel_direction

try:
    from . import _boxcount as _compiled
except ImportError:  # pragma: no cover - depends on the build environment
    _compiled = None

_INT64_LIMIT = 1 << 62
_CERT_MAX_DEPTH = 60

PROPER = "Proper"
NOT_PROPER = "NotProper"
INCONCLUSIVE = "Inconclusive"


class InvalidScheduleError(ValueError):
    """Lattice radii must be strictly increasing positive integers."""


@dataclass(frozen=True)
class OracleReport:
    box_radius: Fraction
    lattice_radii: tuple[int, ...]
    counts: tuple[int, ...]
    verdict: str
    witness_family: tuple[int, ...] | None
    certified: bool
    kernel: str  # "compiled" or "python"


def lattice_element(p: Param, m) -> GroupElement:
    """phi(m) = exp(sum_j m_j log phi(e_j)) for an integer vector m."""
    m = tuple(int(e) for e in m)
    gens = generators(p)
    if len(m) != len(gens):
        raise ValueError(f"m must have length {len(gens)}")
    acc = lie_scale(m[0], group_log(gens[0]))
    for mj, g in zip(m[1:], gens[1:]):
        acc = lie_add(acc, lie_scale(mj, group_log(g)))
    return group_exp(acc)


def box_returns(p: Param, m, r) -> bool:
    """Exact test of phi(m) S intersect S != empty for S = [-R, R]^(k+1).

    With phi(m) = (a, b, c) the image of (w, z) is (w + a z + b', z + c)
    where b' = b + c a / 2, so feasibility is a one-variable interval
    intersection: some z in [max(-R, -R-c), min(R, R-c)] must satisfy
    |a_i z + b'_i| <= 2R for every i.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError("box radius must be positive")
    g = lattice_element(p, m)
    bprime = tuple(bi + g.z * ai / 2 for ai, bi in zip(g.x, g.y))
    lo = max(-r, -r - g.z)
    hi = min(r, r - g.z)
    if lo > hi:
        return False
    for ai, bi in zip(g.x, bprime):
        if ai == 0:
            if abs(bi) > 2 * r:
                return False
            continue
        lo_i = (-2 * r - bi) / ai
        hi_i = (2 * r - bi) / ai
        if ai < 0:
            lo_i, hi_i = hi_i, lo_i
        lo = max(lo, lo_i)
        hi = min(hi, hi_i)
        if lo > hi:
            return False
    return True


def _int_matrix(m: Matrix) -> tuple[list[list[int]], int]:
    d = lcm(*(e.denominator for row in m.rows for e in row))
    return [[int(e * d) for e in row] for row in m.rows], d


def _int_vector(v: Vector) -> tuple[list[int], int]:
    d = lcm(*(e.denominator for e in v))
    return [int(e * d) for e in v], d


class _Prepared:
    """Integer-scaled counting arguments plus a per-radius magnitude bound
    used to decide whether the 64-bit compiled kernel may run."""

    def __init__(self, branch: int, args: tuple, bound):
        self.branch = branch
        self.args = args
        self._bound = bound

    def safe_for_int64(self, n: int) -> bool:
        return self._bound(n) < _INT64_LIMIT


def _prepare(p: Param, r: Fraction) -> _Prepared:
    rn, rd = r.numerator, r.denominator
    if isinstance(p, Branch2Param):
        xi, dx = _int_matrix(p.x_matrix)
        yi, dy = _int_matrix(p.y_matrix)
        k = p.k
        u_rows = [[xi[i][j] * dy for j in range(k)] for i in range(k)]
        v_rows = [[yi[i][j] * dx * rd for j in range(k)] for i in range(k)]
        c = 2 * rn * dx * dy
        umax = max((sum(abs(e) for e in row) for row in u_rows), default=0)
        vmax = max((sum(abs(e) for e in row) for row in v_rows), default=0)
        return _Prepared(
            2,
            (u_rows, v_rows, c, rn),
            lambda n: max(umax, vmax) * n + c + rn + 1,
        )
    xi, dx = _int_vector(p.x)
    yi, dy = _int_matrix(p.y_matrix)
    zi, dz = _int_vector(p.z)
    xa = [2 * dy * e for e in xi]
    xb = [dy * rd * e for e in xi]
    wb = 2 * dx * dz * dz * rd
    gate_rhs = 2 * rn * dz
    tlim = rn * dz
    c = 4 * rn * dx * dy * dz * dz
    zsum = sum(abs(e) for e in zi)
    wsum = max((sum(abs(e) for e in row) for row in yi), default=0)
    xamax = max((abs(e) for e in xa), default=0)
    xbmax = max((abs(e) for e in xb), default=0)

    def bound(n: int) -> int:
        # state magnitudes: ch <= n*zsum, w_i <= n*wsum; derived values:
        # A <= ch*xamax, B <= wb*w + ch^2*xbmax, plus c and the t window.
        ch = n * zsum
        return max(
            ch * xamax,
            wb * n * wsum + ch * ch * xbmax + c,
            ch * rd + tlim,
            ch * ch,
            gate_rhs,
        )

    return _Prepared(1, (zi, yi, xa, xb, wb, rd, gate_rhs, tlim, c), bound)


def _kernel_for(prep: _Prepared, n: int):
    if _compiled is None or len(prep.args[0]) > 8:
        return _boxcount_py, "python"
    if prep.safe_for_int64(n):
        return _compiled, "compiled"
    return _boxcount_py, "python"


def _count(prep: _Prepared, n: int) -> tuple[int, str]:
    mod, name = _kernel_for(prep, n)
    if prep.branch == 2:
        return mod.count_branch2(*prep.args, n), name
    return mod.count_branch1(*prep.args, n), name


def count_box_returns(p: Param, r, n: int, force_python: bool = False) -> int:
    """Number of nonzero m in [-n, n]^k with box_returns(p, m, R)."""
    r = Fraction(r)
    prep = _prepare(p, r)
    if force_python:
        if prep.branch == 2:
            return _boxcount_py.count_branch2(*prep.args, n)
        return _boxcount_py.count_branch1(*prep.args, n)
    return _count(prep, n)[0]


def compiled_kernel_available() -> bool:
    return _compiled is not None


def _lattice_kernel_vector(p: Param) -> tuple[int, ...] | None:
    """A primitive integer m0 with phi(m0) = identity, if one exists."""
    if isinstance(p, Branch1Param):
        v = branch1_kernel_direction(p)
        return primitive_integer_vector(v) if v is not None else None
    stacked = p.x_matrix.vstack(p.y_matrix)
    basis = nullspace(stacked)
    return primitive_integer_vector(basis[0]) if basis else None


def _eigen_families(p: Branch2Param, r: Fraction) -> list[tuple[int, ...]]:
    """Integer vectors m0 with (Y - lambda0 X) m0 = 0 for a rational lambda0
    in [-R, R]; each yields returns at every multiple t * m0."""
    f = pencil_polynomial(p.x_matrix, p.y_matrix)
    candidates: list[Fraction] = []
    if not poly_trim(f):
        # Determinant vanishes identically; every lambda is singular.
        candidates = [Fraction(0), r, -r]
    else:
        candidates = [l for l in rational_roots(f) if abs(l) <= r]
    out = []
    for lam in candidates:
        m = p.y_matrix - p.x_matrix.scale(lam)
        for v in nullspace(m):
            out.append(primitive_integer_vector(v))
    return out


def _certify_pencil_regular(p: Branch2Param, r: Fraction) -> bool:
    """Exact certificate that det(Y - lambda X) has no real zero at all.

    Every real zero lies within the Cauchy bound of the coefficients, so it
    suffices to certify invertibility of Y - lambda X on [-B, B] with
    B = max(R, bound).  On a subinterval [s, t], invertibility at s plus
    (t - s) * ||(Y - sX)^(-1) X||_inf < 1 extends to the whole subinterval
    (Neumann series); otherwise the interval is bisected, up to a depth cap.
    """
    f = poly_trim(pencil_polynomial(p.x_matrix, p.y_matrix))
    if not f:
        return False
    b = max(r, root_bound(f))
    x = p.x_matrix
    y = p.y_matrix
    stack = [(-b, b, 0)]
    while stack:
        s, t, depth = stack.pop()
        ms = y - x.scale(s)
        if det(ms) == 0:
            return False
        norm = (inverse(ms) @ x).norm_inf()
        if (t - s) * norm < 1:
            continue
        if depth >= _CERT_MAX_DEPTH:
            return False
        mid = (s + t) / 2
        stack.append((s, mid, depth + 1))
        stack.append((mid, t, depth + 1))
    return True


def _verify_family(p: Param, m0: tuple[int, ...], r: Fraction, tmax: int) -> bool:
    return all(
        box_returns(p, tuple(t * e for e in m0), r) for t in range(1, tmax + 1)
    )


def oracle_verdict(p: Param, r, radii=(8, 16, 32, 64)) -> OracleReport:
    """Count box returns over the schedule and issue a sound verdict."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("box radius must be positive")
    radii = tuple(int(n) for n in radii)
    if not radii or any(n < 1 for n in radii) or any(
        a >= b for a, b in zip(radii, radii[1:])
    ):
        raise InvalidScheduleError("radii must be strictly increasing and positive")

    prep = _prepare(p, r)
    counts = []
    kernel_used = "compiled"
    for n in radii:
        cnt, name = _count(prep, n)
        counts.append(cnt)
        if name == "python":
            kernel_used = "python"
    counts = tuple(counts)
    tmax = radii[-1]

    half = (len(radii) + 1) // 2
    stabilized = len(set(counts[-half:])) == 1
    growing = all(a < b for a, b in zip(counts, counts[1:]))

    kernel_vec = _lattice_kernel_vector(p)
    if kernel_vec is not None:
        # Non-injective: every multiple of m0 maps to the identity, so the
        # returns never stop growing with the lattice radius.
        return OracleReport(
            r, radii, counts, NOT_PROPER, kernel_vec, False, kernel_used
        )

    if isinstance(p, Branch2Param):
        for m0 in _eigen_families(p, r):
            if growing and _verify_family(p, m0, r, tmax):
                return OracleReport(
                    r, radii, counts, NOT_PROPER, m0, False, kernel_used
                )
        if stabilized and _certify_pencil_regular(p, r):
            return OracleReport(
                r, radii, counts, PROPER, None, True, kernel_used
            )
        return OracleReport(
            r, radii, counts, INCONCLUSIVE, None, False, kernel_used
        )

    # Branch 1 with trivial kernel is properly discontinuous; the kernel
    # check above is the exact certificate.
    if stabilized:
        return OracleReport(r, radii, counts, PROPER, None, True, kernel_used)
    return OracleReport(r, radii, counts, INCONCLUSIVE, None, False, kernel_used)
