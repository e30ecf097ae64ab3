"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; every tolerance and runtime budget is asserted, nothing is deferred.
"""

import time
from fractions import Fraction
from random import Random

from nilact.deformation import act_on_param, canonicalize, stability_probe
from nilact.group import GroupElement
from nilact.homspace import (
    Branch1Param,
    Branch2Param,
    branch1_approximant,
    branch1_generators,
    branch2_generators,
    branch2_param,
)
from nilact.linalg import Matrix, det, frobenius_inner, is_zero_vec, rank
from nilact.oracle import INCONCLUSIVE, NOT_PROPER, PROPER, oracle_verdict
from nilact.pencil import pencil_polynomial
from nilact.properness import (
    generic_dimension,
    has_nonzero_real_eigenvalue,
    identity_slice_proper,
    is_generic,
    is_proper,
    is_proper_lie,
)
from nilact.sampling import (
    random_fraction,
    random_matrix,
    random_param,
    random_proper,
    random_rank_le1_branch2,
)


def rotation_block(k: int) -> Matrix:
    half = k // 2
    rows = [[Fraction(0)] * k for _ in range(k)]
    for i in range(half):
        rows[i][half + i] = Fraction(-1)
        rows[half + i][i] = Fraction(1)
    return Matrix.from_rows(rows)


def padded_rotation_block(k: int) -> Matrix:
    inner = rotation_block(k - 1)
    rows = [list(r) + [Fraction(0)] for r in inner.rows]
    rows.append([Fraction(0)] * k)
    return Matrix.from_rows(rows)


def binomial_coeffs(half: int) -> tuple:
    # coefficients of (1 + t^2)^half in t
    coeffs = [Fraction(0)] * (2 * half + 1)
    c = 1
    for i in range(half + 1):
        coeffs[2 * i] = Fraction(c)
        c = c * (half - i) // (i + 1)
    return tuple(coeffs)


def test_criterion_1_pencil_exactness():
    start = time.perf_counter()
    for k in (2, 4):
        f = pencil_polynomial(rotation_block(k), Matrix.identity(k))
        assert f == binomial_coeffs(k // 2)
    assert pencil_polynomial(rotation_block(4), Matrix.identity(4)) == (1, 0, 2, 0, 1)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    print(f"\n[criterion 1] PASS pencil exactness ({elapsed:.3f}s)")


def test_criterion_2_sample_points_proper_and_generic():
    start = time.perf_counter()
    for k in (2, 4):
        p = Branch2Param(k, rotation_block(k), Matrix.identity(k))
        assert is_proper(p).proper and is_generic(p)
    for k in (3, 5):
        p = Branch2Param(k, padded_rotation_block(k), Matrix.identity(k))
        assert is_proper(p).proper and is_generic(p)
    elapsed = time.perf_counter() - start
    print(f"\n[criterion 2] PASS sample points proper and generic ({elapsed:.3f}s)")


def test_criterion_3_non_interior_point():
    start = time.perf_counter()
    p = branch2_param(2, [[0, 0], [0, 0]], [[1, 0], [0, 1]])
    assert is_proper(p).proper
    assert not is_generic(p)
    report = stability_probe(p, Fraction(1, 10), trials=200, seed=20260810)
    assert report.proper_fraction < 1
    assert any(c.branch == 1 for c in report.crossings)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    print(
        f"\n[criterion 3] PASS non-interior point: proper_fraction="
        f"{report.proper_fraction}, branch-1 crossings="
        f"{sum(1 for c in report.crossings if c.branch == 1)} ({elapsed:.3f}s)"
    )


def test_criterion_4_dimension_table():
    start = time.perf_counter()
    expected_t = {1: 2, 2: 7, 3: 16, 4: 31}
    for k in (1, 2, 3, 4):
        dims = generic_dimension(k)
        assert dims.deformation_generic == expected_t[k]
        assert dims.branch1_regular == k * (k + 2)
    elapsed = time.perf_counter() - start
    print(f"\n[criterion 4] PASS dimension table ({elapsed:.3f}s)")


def test_criterion_5_criterion_criterion_agreement():
    start = time.perf_counter()
    rng = Random(5)
    disagreements = 0
    for k in (1, 2, 3, 4):
        for branch in (1, 2):
            for _ in range(1000):
                p = random_param(rng, k, branch)
                if is_proper(p, with_witness=False).proper != is_proper_lie(p):
                    disagreements += 1
    assert disagreements == 0
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0
    print(
        f"\n[criterion 5] PASS criterion/criterion agreement on 8000 parameters "
        f"({elapsed:.1f}s)"
    )


def test_criterion_6_criterion_oracle_agreement():
    start = time.perf_counter()
    rng = Random(6)
    contradictions = 0
    tally = {PROPER: 0, NOT_PROPER: 0, INCONCLUSIVE: 0}
    for k in (1, 2, 3):
        for branch in (1, 2):
            for _ in range(300):
                p = random_param(rng, k, branch)
                report = oracle_verdict(p, 1, (8, 16, 32, 64))
                tally[report.verdict] += 1
                truth = is_proper(p, with_witness=False).proper
                if report.verdict == PROPER and not truth:
                    contradictions += 1
                if report.verdict == NOT_PROPER and truth:
                    contradictions += 1
    assert contradictions == 0
    elapsed = time.perf_counter() - start
    assert elapsed < 600.0
    print(
        f"\n[criterion 6] PASS criterion/oracle agreement on 1800 parameters: "
        f"{tally} ({elapsed:.1f}s)"
    )


def test_criterion_7_canonicalization():
    start = time.perf_counter()
    rng = Random(7)
    failures = 0
    for branch in (1, 2):
        for _ in range(1000):
            k = rng.choice([1, 2, 3])
            p = random_proper(rng, k, branch)
            form = canonicalize(p)
            q = form.param
            if isinstance(q, Branch1Param):
                if not is_zero_vec(q.y_matrix.matvec(q.z)):
                    failures += 1
                if rank(q.y_matrix) != k - 1:
                    failures += 1
            else:
                if frobenius_inner(q.x_matrix, q.y_matrix) != 0:
                    failures += 1
            h = GroupElement(
                k,
                tuple(random_fraction(rng) for _ in range(k)),
                tuple(random_fraction(rng) for _ in range(k)),
                random_fraction(rng),
            )
            if canonicalize(act_on_param(h, p)) != form:
                failures += 1
            if canonicalize(q) != form:
                failures += 1
    assert failures == 0
    elapsed = time.perf_counter() - start
    print(
        f"\n[criterion 7] PASS canonicalization identities on 2000 proper "
        f"parameters ({elapsed:.1f}s)"
    )


def test_criterion_8_eigenvalue_slice():
    start = time.perf_counter()
    rng = Random(8)
    disagreements = 0
    for k in (2, 3):
        for _ in range(500):
            x = random_matrix(rng, k)
            if identity_slice_proper(x) != (not has_nonzero_real_eigenvalue(x)):
                disagreements += 1
    assert disagreements == 0
    elapsed = time.perf_counter() - start
    print(
        f"\n[criterion 8] PASS eigenvalue slice agreement on 1000 matrices "
        f"({elapsed:.1f}s)"
    )


def _max_entry_distance(p, approx) -> float:
    target = branch2_generators(p)
    moving = branch1_generators(approx)
    worst = 0.0
    for g, h in zip(target, moving):
        a, b = g.to_matrix(), h.to_matrix()
        for i in range(a.nrows):
            for j in range(a.ncols):
                worst = max(worst, abs(float(a[i, j] - b[i, j])))
    return worst


def test_criterion_9_closure_and_parity():
    start = time.perf_counter()
    rng = Random(9)
    for _ in range(100):
        k = rng.choice([1, 2, 3])
        p = random_rank_le1_branch2(rng, k)
        dists = [
            _max_entry_distance(p, branch1_approximant(p, l)) for l in (10, 100, 1000)
        ]
        assert dists[0] >= dists[1] >= dists[2]
        assert dists[1] < dists[0] or dists[0] == 0
        assert dists[2] < 1e-2

    # parity law over the criterion-5 sample stream
    rng5 = Random(5)
    checked = 0
    for k in (1, 2, 3, 4):
        for branch in (1, 2):
            for _ in range(1000):
                p = random_param(rng5, k, branch)
                if k % 2 == 1 and branch == 2 and is_proper(p, with_witness=False).proper:
                    assert det(p.x_matrix) == 0
                    checked += 1
    assert checked > 0
    elapsed = time.perf_counter() - start
    print(
        f"\n[criterion 9] PASS closure convergence and parity law "
        f"({checked} odd-k proper checks) ({elapsed:.1f}s)"
    )
