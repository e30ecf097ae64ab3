"""Conjugation on charts, canonical forms, orbit equivalence, stability probe."""

from fractions import Fraction
from random import Random

import pytest

from nilact.deformation import (
    NotProperError,
    act_on_param,
    canonicalize,
    orbit_equivalent,
    stability_probe,
)
from nilact.group import GroupElement, inverse_element, multiply
from nilact.homspace import Branch1Param, branch1_param, branch2_param, generators
from nilact.linalg import Matrix, is_zero_vec, rank, frobenius_inner
from nilact.properness import is_proper
from nilact.sampling import random_branch1, random_branch2, random_fraction, random_proper

I2 = [[1, 0], [0, 1]]
J2 = [[0, -1], [1, 0]]


def rand_group(rng: Random, k: int) -> GroupElement:
    return GroupElement(
        k,
        tuple(random_fraction(rng) for _ in range(k)),
        tuple(random_fraction(rng) for _ in range(k)),
        random_fraction(rng),
    )


def rand_proper(rng: Random, k: int, branch: int):
    return random_proper(rng, k, branch)


def test_identity_acts_trivially():
    rng = Random(601)
    for branch in (1, 2):
        p = rand_proper(rng, 2, branch)
        from nilact.group import identity

        assert act_on_param(identity(2), p) == p


def test_branch2_shift_example():
    p = branch2_param(2, J2, [[1, -1], [1, 1]])  # Y = I + J
    h = GroupElement(2, (Fraction(0),) * 2, (Fraction(0),) * 2, Fraction(1))
    q = act_on_param(h, p)
    assert q.x_matrix == Matrix.from_rows(J2)
    assert q.y_matrix == Matrix.identity(2)


def test_action_is_group_action():
    rng = Random(602)
    for _ in range(30):
        k = rng.choice([1, 2, 3])
        p = random_branch1(rng, k) if rng.random() < 0.5 else random_branch2(rng, k)
        h1, h2 = rand_group(rng, k), rand_group(rng, k)
        assert act_on_param(multiply(h1, h2), p) == act_on_param(h1, act_on_param(h2, p))


def test_action_transports_conjugation():
    rng = Random(603)
    for _ in range(30):
        k = rng.choice([1, 2, 3])
        p = random_branch1(rng, k) if rng.random() < 0.5 else random_branch2(rng, k)
        h = rand_group(rng, k)
        conj = tuple(
            multiply(multiply(h, g), inverse_element(h)) for g in generators(p)
        )
        assert generators(act_on_param(h, p)) == conj


def test_canonicalize_branch1_projection_example():
    p = branch1_param(2, [5, 7], I2, [1, 0])
    form = canonicalize(p)
    q = form.param
    assert isinstance(q, Branch1Param)
    assert q.y_matrix == Matrix.from_rows([[0, 0], [0, 1]])
    assert q.y_matrix.matvec(q.z) == (0, 0)
    assert rank(q.y_matrix) == 1


def test_canonicalize_branch2_already_canonical():
    p = branch2_param(2, J2, I2)
    assert canonicalize(p).param == p


def test_canonicalize_branch2_trace_shift():
    p = branch2_param(2, J2, [[1, -1], [1, 1]])
    q = canonicalize(p).param
    assert q.y_matrix == Matrix.identity(2)


def test_canonical_identities_hold_exactly():
    rng = Random(604)
    for _ in range(150):
        k = rng.choice([1, 2, 3])
        branch = rng.choice([1, 2])
        p = rand_proper(rng, k, branch)
        q = canonicalize(p).param
        if isinstance(q, Branch1Param):
            assert is_zero_vec(q.y_matrix.matvec(q.z))
            assert rank(q.y_matrix) == k - 1
        else:
            assert frobenius_inner(q.x_matrix, q.y_matrix) == 0


def test_canonicalize_idempotent():
    rng = Random(605)
    for _ in range(100):
        k = rng.choice([1, 2, 3])
        p = random_branch1(rng, k) if rng.random() < 0.5 else random_branch2(rng, k)
        once = canonicalize(p)
        assert canonicalize(once.param) == once


def test_canonicalize_orbit_invariant():
    rng = Random(606)
    for _ in range(150):
        k = rng.choice([1, 2, 3])
        p = random_branch1(rng, k) if rng.random() < 0.5 else random_branch2(rng, k)
        h = rand_group(rng, k)
        assert canonicalize(act_on_param(h, p)) == canonicalize(p)


def test_properness_is_orbit_invariant():
    rng = Random(607)
    for _ in range(100):
        k = rng.choice([1, 2, 3])
        p = random_branch1(rng, k) if rng.random() < 0.5 else random_branch2(rng, k)
        h = rand_group(rng, k)
        assert is_proper(act_on_param(h, p)).proper == is_proper(p).proper


def test_orbit_equivalence_within_orbit():
    rng = Random(608)
    for _ in range(50):
        k = rng.choice([1, 2])
        p = rand_proper(rng, k, rng.choice([1, 2]))
        h = rand_group(rng, k)
        assert orbit_equivalent(p, act_on_param(h, p))


def test_distinct_canonical_points_not_equivalent():
    p = branch2_param(2, J2, I2)
    q = branch2_param(2, J2, [[2, 0], [0, 2]])
    assert not orbit_equivalent(p, q)


def test_cross_branch_never_equivalent():
    p = branch1_param(2, [0, 0], I2, [1, 0])
    q = branch2_param(2, J2, I2)
    assert not orbit_equivalent(p, q)


def test_orbit_equivalence_requires_proper():
    p = branch2_param(2, [[0, 0], [0, 0]], [[0, 0], [0, 0]])
    q = branch2_param(2, J2, I2)
    with pytest.raises(NotProperError):
        orbit_equivalent(p, q)


def test_canonicalize_require_proper_flag():
    p = branch2_param(2, [[0, 0], [0, 0]], [[0, 0], [0, 0]])
    with pytest.raises(NotProperError):
        canonicalize(p, require_proper=True)


def test_probe_requires_proper_base():
    p = branch2_param(2, [[1, 0], [0, 0]], I2)
    with pytest.raises(NotProperError):
        stability_probe(p, Fraction(1, 10), 10, seed=0)


def test_probe_deterministic():
    p = branch2_param(2, J2, I2)
    a = stability_probe(p, Fraction(1, 10), 50, seed=42)
    b = stability_probe(p, Fraction(1, 10), 50, seed=42)
    assert a == b


def test_probe_branch1_point_is_stable():
    p = branch1_param(2, [0, 0], I2, [1, 0])
    rep = stability_probe(p, Fraction(1, 1000), 100, seed=7)
    assert rep.proper_fraction == 1
    assert rep.crossings == ()


def test_probe_generic_branch2_point_is_stable():
    p = branch2_param(2, J2, I2)
    rep = stability_probe(p, Fraction(1, 1000), 100, seed=7)
    assert rep.proper_fraction == 1


def test_probe_degenerate_point_is_unstable():
    p = branch2_param(2, [[0, 0], [0, 0]], I2)
    rep = stability_probe(p, Fraction(1, 10), 200, seed=11)
    assert rep.proper_fraction < 1
    assert any(c.branch == 1 for c in rep.crossings)
    assert any(not c.proper and c.branch == 2 for c in rep.crossings)
