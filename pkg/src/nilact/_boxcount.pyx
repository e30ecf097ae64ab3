# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice return counting.

Mirrors _boxcount_py exactly, with 64-bit state and 128-bit comparison
products.  Callers must pre-check (see oracle._int64_safe) that every state
value stays below 2**62; otherwise they use the pure-Python kernel.
"""

cdef extern from *:
    ctypedef long long i128 "__int128"

DEF MAXK = 8


cdef inline bint _feasible(int k, long long* a_vals, long long* b_vals,
                           long long c, long long tlo, long long thi) noexcept nogil:
    cdef long long lon = tlo, lod = 1, hin = thi, hid = 1
    cdef long long a, b, nlo, nhi, d
    cdef int i
    if lon > hin:
        return 0
    for i in range(k):
        a = a_vals[i]
        b = b_vals[i]
        if a == 0:
            if b > c or -b > c:
                return 0
            continue
        if a > 0:
            nlo = -c - b
            nhi = c - b
            d = a
        else:
            nlo = b - c
            nhi = b + c
            d = -a
        if <i128> nlo * lod > <i128> lon * d:
            lon = nlo
            lod = d
        if <i128> nhi * hid < <i128> hin * d:
            hin = nhi
            hid = d
        if <i128> lon * hid > <i128> hin * lod:
            return 0
    return 1


def count_branch2(u_rows, v_rows, long long c, long long tlim, int n):
    cdef int k = len(u_rows)
    if k > MAXK:
        raise ValueError("k too large for the compiled kernel")
    cdef long long ucol[MAXK][MAXK]
    cdef long long vcol[MAXK][MAXK]
    cdef long long u[MAXK]
    cdef long long v[MAXK]
    cdef long long m[MAXK]
    cdef int i, j, d
    cdef long long total = 0
    for i in range(k):
        for j in range(k):
            ucol[j][i] = u_rows[i][j]
            vcol[j][i] = v_rows[i][j]
    with nogil:
        for d in range(k):
            for j in range(d):
                m[j] = -n
            m[d] = 1
            for j in range(d + 1, k):
                m[j] = 0
            for i in range(k):
                u[i] = ucol[d][i]
                v[i] = vcol[d][i]
                for j in range(d):
                    u[i] -= n * ucol[j][i]
                    v[i] -= n * vcol[j][i]
            while True:
                if _feasible(k, u, v, c, -tlim, tlim):
                    total += 1
                j = 0
                while j < d and m[j] == n:
                    m[j] = -n
                    for i in range(k):
                        u[i] -= 2 * n * ucol[j][i]
                        v[i] -= 2 * n * vcol[j][i]
                    j += 1
                if j < d:
                    m[j] += 1
                    for i in range(k):
                        u[i] += ucol[j][i]
                        v[i] += vcol[j][i]
                else:
                    if m[d] == n:
                        break
                    m[d] += 1
                    for i in range(k):
                        u[i] += ucol[d][i]
                        v[i] += vcol[d][i]
    return 2 * total


def count_branch1(zhat, y_rows, xa, xb, long long wb, long long rd,
                  long long gate_rhs, long long tlim, long long c, int n):
    cdef int k = len(zhat)
    if k > MAXK:
        raise ValueError("k too large for the compiled kernel")
    cdef long long zc[MAXK]
    cdef long long ycol[MAXK][MAXK]
    cdef long long xav[MAXK]
    cdef long long xbv[MAXK]
    cdef long long w[MAXK]
    cdef long long a_vals[MAXK]
    cdef long long b_vals[MAXK]
    cdef long long m[MAXK]
    cdef int i, j, d
    cdef long long total = 0
    cdef long long ch, c2, crd, tlo, thi, ach
    for j in range(k):
        zc[j] = zhat[j]
        xav[j] = xa[j]
        xbv[j] = xb[j]
        for i in range(k):
            ycol[j][i] = y_rows[i][j]
    with nogil:
        for d in range(k):
            for j in range(d):
                m[j] = -n
            m[d] = 1
            for j in range(d + 1, k):
                m[j] = 0
            ch = zc[d]
            for j in range(d):
                ch -= n * zc[j]
            for i in range(k):
                w[i] = ycol[d][i]
                for j in range(d):
                    w[i] -= n * ycol[j][i]
            while True:
                ach = ch if ch >= 0 else -ch
                if ach * rd <= gate_rhs:
                    c2 = ch * ch
                    crd = ch * rd
                    tlo = -tlim + (-crd if ch < 0 else 0)
                    thi = tlim - (crd if ch > 0 else 0)
                    for i in range(k):
                        a_vals[i] = ch * xav[i]
                        b_vals[i] = wb * w[i] + c2 * xbv[i]
                    if _feasible(k, a_vals, b_vals, c, tlo, thi):
                        total += 1
                j = 0
                while j < d and m[j] == n:
                    m[j] = -n
                    ch -= 2 * n * zc[j]
                    for i in range(k):
                        w[i] -= 2 * n * ycol[j][i]
                    j += 1
                if j < d:
                    m[j] += 1
                    ch += zc[j]
                    for i in range(k):
                        w[i] += ycol[j][i]
                else:
                    if m[d] == n:
                        break
                    m[d] += 1
                    ch += zc[d]
                    for i in range(k):
                        w[i] += ycol[d][i]
    return 2 * total
