"""Pure-Python lattice return counting.

Same integer algorithm as the compiled extension, with arbitrary-precision
ints, so it is always exact and is the reference the compiled kernel must
match.  Enumeration covers the half-lattice whose highest-index nonzero
coordinate is positive; returns are symmetric under m -> -m, so the full
count is twice the half count.
"""

from __future__ import annotations


def _feasible(k, a_vals, b_vals, c, tlo, thi):
    # Is there a real t in [tlo, thi] with |a_i t + b_i| <= c for all i?
    lon, lod = tlo, 1
    hin, hid = thi, 1
    if lon > hin:
        return False
    for i in range(k):
        a = a_vals[i]
        b = b_vals[i]
        if a == 0:
            if b > c or -b > c:
                return False
            continue
        if a > 0:
            nlo, nhi, d = -c - b, c - b, a
        else:
            nlo, nhi, d = b - c, b + c, -a
        if nlo * lod > lon * d:
            lon, lod = nlo, d
        if nhi * hid < hin * d:
            hin, hid = nhi, d
        if lon * hid > hin * lod:
            return False
    return True


def _half_lattice(k, n, cols, test):
    """Run ``test`` on every lattice point whose top nonzero coordinate is
    positive, updating the linear-form state incrementally per column."""
    total = 0
    for d in range(k):
        m = [-n] * d + [1] + [0] * (k - d - 1)
        acc = _combine(cols, m)
        while True:
            if test(acc):
                total += 1
            j = 0
            while j < d and m[j] == n:
                m[j] = -n
                _add_scaled(acc, cols[j], -2 * n)
                j += 1
            if j < d:
                m[j] += 1
                _add_scaled(acc, cols[j], 1)
            else:
                if m[d] == n:
                    break
                m[d] += 1
                _add_scaled(acc, cols[d], 1)
    return total


def _combine(cols, m):
    acc = [0] * len(cols[0]) if cols else []
    for col, mj in zip(cols, m):
        if mj:
            for i, e in enumerate(col):
                acc[i] += mj * e
    return acc


def _add_scaled(acc, col, f):
    for i, e in enumerate(col):
        acc[i] += f * e


def count_branch2(u_rows, v_rows, c, tlim, n):
    """Count nonzero m in [-n, n]^k with a feasible translate.

    ``u_rows``/``v_rows`` are the integer-scaled X and Y; the constraint per
    m is: exists real t in [-tlim, tlim] with |(Um)_i t + (Vm)_i| <= c.
    """
    k = len(u_rows)
    cols = [
        [u_rows[i][j] for i in range(k)] + [v_rows[i][j] for i in range(k)]
        for j in range(k)
    ]

    def test(acc):
        return _feasible(k, acc[:k], acc[k:], c, -tlim, tlim)

    return 2 * _half_lattice(k, n, cols, test)


def count_branch1(zhat, y_rows, xa, xb, wb, rd, gate_rhs, tlim, c, n):
    """Branch-1 count: per m the scalar ch = <m, zhat> gates |ch|*rd <=
    gate_rhs, then the shifted window and the shear constraints reduce to
    the same one-variable feasibility with A_i = ch*xa_i and
    B_i = wb*w_i + ch^2*xb_i."""
    k = len(zhat)
    cols = [
        [zhat[j]] + [y_rows[i][j] for i in range(k)] for j in range(k)
    ]

    def test(acc):
        ch = acc[0]
        if abs(ch) * rd > gate_rhs:
            return False
        c2 = ch * ch
        crd = ch * rd
        tlo = -tlim + (-crd if ch < 0 else 0)
        thi = tlim - (crd if ch > 0 else 0)
        a_vals = [ch * e for e in xa]
        b_vals = [wb * w + c2 * e for w, e in zip(acc[1:], xb)]
        return _feasible(k, a_vals, b_vals, c, tlo, thi)

    return 2 * _half_lattice(k, n, cols, test)
