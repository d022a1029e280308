import itertools
import math

import numpy as np
import pytest

from extropy.simplex import measures
from extropy.simplex.complement import complement
from extropy.simplex.probability_vector import (
    ProbabilityVector,
    SimplexException,
    echelon,
    uniform,
)

rng = np.random.default_rng(2012)

# Identities are exact in real arithmetic; this only covers rounding.
IDENTITY_TOL = 1e-12


def random_pmf(n: int, alpha: float = 1.0) -> ProbabilityVector:
    return ProbabilityVector(rng.dirichlet(np.full(n, alpha)))


def pmf_batches(dims, per_dim: int, alpha: float = 1.0):
    """Yield ``per_dim`` Dirichlet pmfs for each dimension, one draw per batch."""
    for n in dims:
        for masses in rng.dirichlet(np.full(n, alpha), size=per_dim):
            yield ProbabilityVector(masses)


@pytest.fixture
def worked_example():
    return ProbabilityVector([0.25, 0.5, 0.25])


def test_entropy_examples(worked_example):
    assert measures.entropy(worked_example) == pytest.approx(1.0397, abs=5e-4)
    assert measures.entropy(ProbabilityVector([1.0, 0.0, 0.0])) == 0.0
    assert measures.entropy(uniform(2)) == pytest.approx(math.log(2), abs=1e-15)


def test_extropy_examples(worked_example):
    assert measures.extropy(worked_example) == pytest.approx(0.7781, abs=5e-4)
    assert measures.extropy(ProbabilityVector([0.375, 0.25, 0.375])) == pytest.approx(
        0.8033, abs=5e-4
    )
    assert measures.extropy(ProbabilityVector([0.0, 1.0, 0.0])) == 0.0


def test_worked_example_chain(worked_example):
    q = complement(worked_example)
    np.testing.assert_allclose(q.masses, [0.375, 0.25, 0.375], atol=1e-15)
    h_q = measures.entropy(q)
    assert h_q == pytest.approx(1.0822, abs=5e-4)
    assert measures.extropy(q) == pytest.approx(0.8033, abs=5e-4)
    # J(p) = 2 [H(q) - log 2]
    reconstructed = 2.0 * (h_q - math.log(2))
    assert reconstructed == pytest.approx(2.0 * (1.0822 - 0.6931), abs=5e-4)
    assert reconstructed == pytest.approx(
        measures.extropy(worked_example), abs=IDENTITY_TOL
    )


def test_bounds_on_random_pmfs():
    for n in range(1, 30):
        for _ in range(20):
            pv = random_pmf(n)
            h = measures.entropy(pv)
            j = measures.extropy(pv)
            assert -IDENTITY_TOL <= h <= math.log(n) + IDENTITY_TOL
            assert -IDENTITY_TOL <= j <= measures.max_extropy_value(n) + IDENTITY_TOL
            assert j < 1


def test_binary_measure():
    assert measures.binary_measure(0.5) == pytest.approx(0.6931, abs=5e-5)
    assert measures.binary_measure(0) == 0.0
    assert measures.binary_measure(1) == 0.0
    assert measures.binary_measure(0.25) == pytest.approx(0.5623, abs=5e-5)
    for p in rng.uniform(0, 1, 50):
        pv = ProbabilityVector([p, 1.0 - p])
        assert measures.binary_measure(p) == pytest.approx(
            measures.entropy(pv), abs=IDENTITY_TOL
        )
        assert measures.binary_measure(p) == pytest.approx(
            measures.extropy(pv), abs=IDENTITY_TOL
        )
    for bad in [-0.1, 1.1]:
        with pytest.raises(ValueError):
            _ = measures.binary_measure(bad)


def test_pointwise_kernels():
    k = measures.pointwise_kernels(0.5)
    assert k.u == 0.0
    assert k.s == k.t
    assert measures.pointwise_kernels(0.25).u == pytest.approx(0.1308, abs=5e-5)
    assert measures.pointwise_kernels(0.75).u == pytest.approx(-0.1308, abs=5e-5)
    for p in [0.0, 1.0]:
        k = measures.pointwise_kernels(p)
        assert k.u == 0.0
    assert measures.pointwise_kernels(0.0).s == 0.0
    assert measures.pointwise_kernels(1.0).t == 0.0
    with pytest.raises(ValueError):
        _ = measures.pointwise_kernels(1.5)


def test_kernel_properties():
    # Sign, antisymmetry and midpoint concavity of u
    for p in np.linspace(0.001, 0.499, 200):
        assert measures.pointwise_kernels(p).u > 0
        assert measures.pointwise_kernels(1.0 - p).u < 0
        assert measures.pointwise_kernels(1.0 - p).u == pytest.approx(
            -measures.pointwise_kernels(p).u, abs=IDENTITY_TOL
        )
    for _ in range(200):
        a, b = np.sort(rng.uniform(0.001, 0.5, 2))
        if b - a < 1e-3:
            continue
        u_mid = measures.pointwise_kernels((a + b) / 2).u
        u_avg = (measures.pointwise_kernels(a).u + measures.pointwise_kernels(b).u) / 2
        assert u_mid > u_avg


def test_gap_examples(worked_example):
    assert measures.gap(worked_example) == pytest.approx(1.0397 - 0.7781, abs=1e-3)
    assert measures.gap(ProbabilityVector([0.3, 0.7])) == pytest.approx(
        0.0, abs=IDENTITY_TOL
    )
    pv = ProbabilityVector([0.2, 0.3, 0.5])
    expected = sum(measures.pointwise_kernels(p).u for p in [0.2, 0.3, 0.5])
    assert measures.gap(pv) == pytest.approx(expected, abs=IDENTITY_TOL)
    assert measures.gap(pv) > 0


def test_entropy_dominates_extropy():
    counts = np.bincount(rng.integers(2, 21, size=100_000), minlength=21)
    checked = 0
    for n in range(2, 21):
        shares = np.array_split(np.arange(counts[n]), 4)
        for alpha, share in zip((0.2, 0.5, 1.0, 2.0), shares):
            for pv in pmf_batches([n], share.size, alpha):
                checked += 1
                g = measures.gap(pv)
                assert g >= -IDENTITY_TOL
                h, j = measures.entropy(pv), measures.extropy(pv)
                assert abs(g - (h - j)) <= IDENTITY_TOL
                if np.count_nonzero(pv.masses > 1e-3) >= 3:
                    assert g > 0
    assert checked == 100_000


def test_binary_support_gives_equal_measures():
    for n in range(2, 8):
        for _ in range(10):
            p = rng.uniform()
            masses = np.zeros(n)
            i, j = rng.choice(n, 2, replace=False)
            masses[i], masses[j] = p, 1.0 - p
            pv = ProbabilityVector(masses)
            assert abs(measures.entropy(pv) - measures.extropy(pv)) < IDENTITY_TOL


def test_permutation_invariance():
    for n in range(2, 6):
        pv = random_pmf(n)
        h = measures.entropy(pv)
        j = measures.extropy(pv)
        for perm in itertools.permutations(pv.masses):
            permuted = ProbabilityVector(perm)
            assert measures.entropy(permuted) == pytest.approx(h, abs=IDENTITY_TOL)
            assert measures.extropy(permuted) == pytest.approx(j, abs=IDENTITY_TOL)


def test_partition_sum(worked_example):
    assert measures.partition_sum(worked_example) == pytest.approx(1.8178, abs=1e-3)
    assert measures.partition_sum(ProbabilityVector([1.0, 0.0, 0.0])) == 0.0
    assert measures.partition_sum(ProbabilityVector([0.3, 0.7])) == pytest.approx(
        2 * measures.binary_measure(0.3), abs=IDENTITY_TOL
    )
    for pv in pmf_batches(range(2, 51), 1000):
        h, j = measures.entropy(pv), measures.extropy(pv)
        assert abs(measures.partition_sum(pv) - (h + j)) <= IDENTITY_TOL


def test_extropy_from_complement_entropy():
    for pv in pmf_batches(range(2, 51), 1000):
        n = pv.n
        rebuilt = (n - 1) * (measures.entropy(complement(pv)) - math.log(n - 1))
        assert abs(rebuilt - measures.extropy(pv)) <= IDENTITY_TOL * n


def test_max_extropy_value():
    assert measures.max_extropy_value(1) == 0.0
    assert measures.max_extropy_value(2) == pytest.approx(math.log(2), abs=1e-15)
    assert measures.max_extropy_value(3) == pytest.approx(0.8109, abs=5e-5)
    # 999 log(1000/999) = 1 - 5.0017e-4
    assert measures.max_extropy_value(1000) == pytest.approx(1.0, abs=1e-3)
    assert measures.max_extropy_value(1001) == pytest.approx(1.0, abs=5e-4)
    values = [measures.max_extropy_value(n) for n in range(1, 2000)]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert all(v < 1 for v in values)
    for n in range(1, 60):
        assert measures.max_extropy_value(n) == pytest.approx(
            measures.extropy(uniform(n)), abs=IDENTITY_TOL
        )
    with pytest.raises(ValueError):
        _ = measures.max_extropy_value(0)


def test_max_entropy_value_monotone():
    values = [measures.max_entropy_value(n) for n in range(1, 200)]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert measures.max_entropy_value(5) == pytest.approx(
        measures.entropy(uniform(5)), abs=IDENTITY_TOL
    )


@pytest.mark.parametrize("n", [3, 5, 10])
def test_uniform_is_local_maximum(n):
    u = uniform(n)
    h_max = measures.entropy(u)
    j_max = measures.extropy(u)
    for _ in range(200):
        dp = rng.normal(size=n)
        dp -= dp.mean()
        dp *= rng.uniform(1e-3, 1e-2) / np.linalg.norm(dp)
        perturbed = ProbabilityVector(u.masses + dp)
        assert measures.extropy(perturbed) < j_max
        assert measures.entropy(perturbed) < h_max


def test_minimum_at_vertices():
    for n in range(1, 10):
        for i in range(n):
            assert measures.extropy(echelon(n, i)) == 0.0
            assert measures.entropy(echelon(n, i)) == 0.0


def test_quadratic_approximation():
    u = uniform(1000)
    assert measures.extropy_quadratic_approx(u) == pytest.approx(
        measures.extropy(u), abs=1e-3
    )
    degenerate = ProbabilityVector([1.0, 0.0])
    assert measures.extropy_quadratic_approx(degenerate) == 0.5
    assert measures.extropy(degenerate) == 0.0
    assert measures.extropy_quadratic_approx(uniform(2)) == 0.75
    assert measures.extropy(uniform(2)) == pytest.approx(0.6931, abs=5e-5)


def test_quadratic_remainder_bounds():
    for n in range(2, 40):
        pv = random_pmf(n)
        lower, upper = measures.extropy_quadratic_remainder(pv)
        discrepancy = measures.extropy_quadratic_approx(pv) - measures.extropy(pv)
        assert lower - IDENTITY_TOL <= discrepancy <= upper + IDENTITY_TOL
    _, upper = measures.extropy_quadratic_remainder(ProbabilityVector([1.0, 0.0]))
    assert upper == math.inf
    # Error shrinks as the largest mass shrinks
    errors = [
        measures.extropy_quadratic_approx(uniform(n)) - measures.extropy(uniform(n))
        for n in [10, 100, 1000]
    ]
    assert errors[0] > errors[1] > errors[2] > 0


def test_repeat_rate_and_gini():
    pv = ProbabilityVector([0.2, 0.5, 0.3])
    assert measures.repeat_rate(pv) == pytest.approx(0.38)
    assert measures.gini_heterogeneity(pv) == pytest.approx(0.62)


def test_expected_log_odds():
    for n in range(2, 10):
        assert measures.expected_log_odds(uniform(n)) == pytest.approx(
            -math.log(n - 1), abs=IDENTITY_TOL
        )
    assert measures.expected_log_odds(echelon(3, 0)) == math.inf


def test_joint_entropy():
    px = np.array([0.3, 0.7])
    py = np.array([0.1, 0.6, 0.3])
    joint = np.outer(px, py)
    assert measures.joint_entropy(joint) == pytest.approx(
        measures.entropy(ProbabilityVector(px)) + measures.entropy(ProbabilityVector(py)),
        abs=IDENTITY_TOL,
    )
    assert measures.joint_entropy([[0.0, 1.0], [0.0, 0.0]]) == 0.0
    m = [[0.1, 0.2], [0.3, 0.4]]
    marginal, conditional = measures.conditional_decomposition(m)
    assert measures.joint_entropy(m) == pytest.approx(
        marginal + conditional, abs=IDENTITY_TOL
    )
    # Zero rows are skipped by the decomposition
    m = [[0.0, 0.0], [0.25, 0.75]]
    marginal, conditional = measures.conditional_decomposition(m)
    assert measures.joint_entropy(m) == pytest.approx(
        marginal + conditional, abs=IDENTITY_TOL
    )


@pytest.mark.parametrize(
    "joint", [[[0.5, 0.4]], [[0.5, -0.1], [0.3, 0.3]], [0.5, 0.5], [[np.nan, 1.0]]]
)
def test_joint_entropy_rejects(joint):
    with pytest.raises(SimplexException):
        _ = measures.joint_entropy(joint)
