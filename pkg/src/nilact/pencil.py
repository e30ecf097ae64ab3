"""Pencil determinant polynomials and exact real-root counting.

A polynomial is a tuple of ``Fraction`` coefficients indexed by degree
(``p[l]`` multiplies ``lambda**l``).  ``pencil_polynomial(X, Y)`` is the
coefficient vector of ``det(Y - lambda * X)``, computed by exact evaluation
at ``k + 1`` integer points followed by Lagrange interpolation; distinct real
roots are counted with a Sturm chain on the squarefree part.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .linalg import Matrix, NonSquareError, DimensionMismatchError, det

Poly = tuple[Fraction, ...]


class _IdenticallyZero:
    """Sentinel for a pencil whose determinant vanishes for every lambda."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "IdenticallyZero"


IDENTICALLY_ZERO = _IdenticallyZero()


def poly(coeffs) -> Poly:
    return tuple(Fraction(c) for c in coeffs)


def poly_trim(p: Poly) -> Poly:
    n = len(p)
    while n > 0 and p[n - 1] == 0:
        n -= 1
    return p[:n]


def poly_degree(p: Poly) -> int:
    """Degree of the trimmed polynomial; -1 for the zero polynomial."""
    return len(poly_trim(p)) - 1


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p: Poly) -> Poly:
    return tuple(c * l for l, c in enumerate(p) if l > 0)


def poly_neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(poly_trim(a))
    db, lead = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = a[-1] / lead
        shift = len(a) - 1 - db
        q[shift] = c
        for i in range(db + 1):
            a[shift + i] -= c * b[i]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return tuple(q), tuple(a)


def poly_monic(p: Poly) -> Poly:
    p = poly_trim(p)
    if not p:
        return p
    lead = p[-1]
    return tuple(c / lead for c in p)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    a, b = poly_trim(a), poly_trim(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, poly_trim(r)
    return poly_monic(a)


def squarefree_part(p: Poly) -> Poly:
    p = poly_trim(p)
    if len(p) <= 1:
        return p
    g = poly_gcd(p, poly_derivative(p))
    if len(g) == 1:
        return p
    q, r = poly_divmod(p, g)
    assert not poly_trim(r)
    return q


def _primitive(p: Poly) -> Poly:
    """Scale by a positive rational so coefficients are coprime integers;
    sign evaluations are unchanged and stay in integer arithmetic."""
    p = poly_trim(p)
    if not p:
        return p
    d = lcm(*(c.denominator for c in p))
    ints = [int(c * d) for c in p]
    g = gcd(*ints)
    return tuple(Fraction(c // g) for c in ints)


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [_primitive(p), _primitive(poly_derivative(p))]
    while poly_trim(chain[-1]):
        _, r = poly_divmod(chain[-2], chain[-1])
        r = poly_trim(r)
        if not r:
            break
        chain.append(_primitive(poly_neg(r)))
    return [q for q in chain if poly_trim(q)]


def _sign_changes(signs: list[int]) -> int:
    seq = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(seq, seq[1:]) if a * b < 0)


def _sign_at(p: Poly, x: Fraction) -> int:
    if any(c.denominator != 1 for c in p):
        v = poly_eval(p, x)
        return (v > 0) - (v < 0)
    # sign of p(n/d) equals sign of sum c_i n^i d^(deg-i), all integers
    n, d = x.numerator, x.denominator
    deg = len(p) - 1
    acc = 0
    npow = 1
    for i, c in enumerate(p):
        acc += int(c) * npow * d ** (deg - i)
        npow *= n
    return (acc > 0) - (acc < 0)


def _sign_at_inf(p: Poly, positive: bool) -> int:
    p = poly_trim(p)
    if not p:
        return 0
    lead = p[-1]
    s = (lead > 0) - (lead < 0)
    if not positive and (len(p) - 1) % 2 == 1:
        s = -s
    return s


def count_real_roots(p) -> int | _IdenticallyZero:
    """Number of distinct real roots, or IDENTICALLY_ZERO for the zero poly.

    Sturm count over (-inf, +inf) on the squarefree part, so multiplicities
    never distort the answer.
    """
    p = poly_trim(poly(p))
    if not p:
        return IDENTICALLY_ZERO
    if len(p) == 1:
        return 0
    s = squarefree_part(p)
    chain = sturm_chain(s)
    neg = _sign_changes([_sign_at_inf(q, positive=False) for q in chain])
    pos = _sign_changes([_sign_at_inf(q, positive=True) for q in chain])
    return neg - pos


def count_roots_in_interval(p: Poly, a: Fraction, b: Fraction) -> int:
    """Distinct real roots in the half-open interval (a, b]."""
    a, b = Fraction(a), Fraction(b)
    s = squarefree_part(poly_trim(poly(p)))
    chain = sturm_chain(s)
    va = _sign_changes([_sign_at(q, a) for q in chain])
    vb = _sign_changes([_sign_at(q, b) for q in chain])
    return va - vb


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every real root lies in [-bound, bound]."""
    p = poly_trim(poly(p))
    if len(p) <= 1:
        return Fraction(0)
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p[:-1]) / lead


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots, found by the rational root theorem.

    Works on the primitive integer form; candidates num/den are screened
    with pure integer evaluation of p(num/den) * den^deg.
    """
    p = poly_trim(poly(p))
    if len(p) <= 1:
        return []
    d = lcm(*(c.denominator for c in p))
    ints = [int(c * d) for c in p]
    shift = 0
    while ints[shift] == 0:
        shift += 1
    roots = [Fraction(0)] if shift else []
    ints = ints[shift:]
    if len(ints) <= 1:
        return roots
    g = gcd(*ints)
    ints = [c // g for c in ints]
    deg = len(ints) - 1
    a0, an = abs(ints[0]), abs(ints[-1])
    bound = root_bound(p)
    for num in _divisors(a0):
        for den in _divisors(an):
            if gcd(num, den) != 1 or Fraction(num, den) > bound:
                continue
            for s in (num, -num):
                acc = sum(
                    c * s**i * den ** (deg - i) for i, c in enumerate(ints)
                )
                if acc == 0:
                    roots.append(Fraction(s, den))
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def isolate_real_root(p: Poly) -> tuple[Fraction, Fraction]:
    """An interval [lo, hi] containing exactly one real root of ``p``.

    Rational roots are reported exactly as degenerate intervals [r, r];
    otherwise the interval is narrowed by Sturm bisection until it isolates
    a single root and has width at most 1.
    """
    p = poly_trim(poly(p))
    if count_real_roots(p) in (0, IDENTICALLY_ZERO):
        raise ValueError("polynomial has no real root to isolate")
    rats = rational_roots(p)
    if rats:
        r = min(rats, key=abs)
        return (r, r)
    s = squarefree_part(p)
    chain = sturm_chain(s)
    b = root_bound(s)
    lo, hi = -b, b
    v = lambda x: _sign_changes([_sign_at(q, x) for q in chain])
    nroots = v(lo) - v(hi)
    while nroots > 1 or hi - lo > 1:
        mid = (lo + hi) / 2
        left = v(lo) - v(mid)
        if left >= 1:
            hi, nroots = mid, left
        else:
            lo, nroots = mid, nroots - left
    return (lo, hi)


def pencil_polynomial(x: Matrix, y: Matrix) -> Poly:
    """Coefficients a_0..a_k of det(Y - lambda X) for k x k matrices X, Y.

    Evaluates the determinant exactly at lambda = 0..k and interpolates;
    this keeps the computation to k + 1 exact determinants and leaves the
    endpoint identities a_0 = det Y, a_k = (-1)^k det X checkable.
    """
    if x.nrows != x.ncols or y.nrows != y.ncols:
        raise NonSquareError("pencil requires square matrices")
    if x.nrows != y.nrows:
        raise DimensionMismatchError("pencil matrices differ in size")
    k = x.nrows
    points = [Fraction(j) for j in range(k + 1)]
    values = [det(y - x.scale(t)) for t in points]
    return _lagrange(points, values, k + 1)


def _lagrange(points: list[Fraction], values: list[Fraction], length: int) -> Poly:
    coeffs = [Fraction(0)] * length
    for i, (xi, yi) in enumerate(zip(points, values)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(points):
            if j == i:
                continue
            denom *= xi - xj
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                nxt[d] -= c * xj
                nxt[d + 1] += c
            basis = nxt
        w = yi / denom
        for d, c in enumerate(basis):
            coeffs[d] += w * c
    return tuple(coeffs)


def pencil_subleading_coefficient(x: Matrix, y: Matrix) -> Fraction:
    """Closed form for the lambda^(k-1) coefficient of det(Y - lambda X):
    (-1)^(k-1) * sum_{i,j} (-1)^(i+j) Y_ij det(X with row i, column j deleted).
    """
    if x.nrows != x.ncols or y.nrows != y.ncols:
        raise NonSquareError("pencil requires square matrices")
    if x.nrows != y.nrows:
        raise DimensionMismatchError("pencil matrices differ in size")
    k = x.nrows
    if k < 1:
        raise DimensionMismatchError("need k >= 1")
    total = Fraction(0)
    for i in range(k):
        for j in range(k):
            minor = Matrix(
                tuple(
                    tuple(e for cj, e in enumerate(r) if cj != j)
                    for ri, r in enumerate(x.rows)
                    if ri != i
                )
            )
            total += (-1) ** (i + j) * y[i, j] * det(minor)
    return (-1) ** (k - 1) * total
