import math
from math import comb

import numpy as np
import pytest

from extropy.scoring.rules import (
    SCORING_RULES,
    barycentric_lattice,
    expected_score,
    expected_total_log,
    get_scoring_rule,
    log_score,
    nonoccurrence_score,
    quadratic_score,
    total_log_score,
    weighted_log_score,
)
from extropy.scoring.structs import ScoringException
from extropy.simplex.measures import entropy, extropy, repeat_rate
from extropy.simplex.probability_vector import ProbabilityVector, echelon, uniform

rng = np.random.default_rng(1955)


@pytest.fixture
def forecast():
    return ProbabilityVector([0.2, 0.5, 0.3])


def random_pmf(n):
    return ProbabilityVector(rng.dirichlet(np.ones(n)))


def test_log_score_examples(forecast):
    assert log_score(forecast, 1) == pytest.approx(-0.6931, abs=5e-5)
    assert log_score(echelon(3, 2), 2) == 0.0
    assert log_score(echelon(3, 2), 0) == -math.inf


def test_total_log_score_examples(forecast):
    assert total_log_score(forecast, 1) == pytest.approx(-1.2730, abs=5e-5)
    for p in [0.1, 0.5, 0.9]:
        assert total_log_score(ProbabilityVector([p, 1 - p]), 0) == pytest.approx(
            2 * math.log(p), abs=1e-12
        )
    assert total_log_score(echelon(4, 1), 1) == 0.0
    assert total_log_score(echelon(4, 1), 0) == -math.inf
    assert total_log_score(ProbabilityVector([0.0, 0.5, 0.5]), 0) == -math.inf


def test_quadratic_score_examples(forecast):
    assert quadratic_score(forecast, 1) == pytest.approx(0.62, abs=1e-12)
    assert quadratic_score(echelon(3, 0), 0) == 1.0
    assert quadratic_score(echelon(3, 0), 1) == -1.0
    for n in range(1, 10):
        for o in range(n):
            assert quadratic_score(uniform(n), o) == pytest.approx(1 / n, abs=1e-15)


@pytest.mark.parametrize("rule", list(SCORING_RULES.values()))
def test_rules_reject_bad_index(rule, forecast):
    for o in [-1, 3]:
        with pytest.raises(ScoringException):
            _ = rule(forecast, o)


def test_total_log_decomposition():
    for _ in range(500):
        n = int(rng.integers(2, 12))
        pv = random_pmf(n)
        o = int(rng.integers(0, n))
        assert total_log_score(pv, o) == pytest.approx(
            log_score(pv, o) + nonoccurrence_score(pv, o), abs=1e-12
        )


def test_nonoccurrence_score():
    assert nonoccurrence_score(ProbabilityVector([0.5, 0.5]), 0) == pytest.approx(
        math.log(0.5)
    )
    assert nonoccurrence_score(echelon(3, 0), 0) == 0.0
    assert nonoccurrence_score(echelon(3, 0), 1) == -math.inf


def test_weighted_log_score(forecast):
    assert weighted_log_score(forecast, 1) == total_log_score(forecast, 1)
    assert weighted_log_score(forecast, 1, 2.0, 0.5) == pytest.approx(
        2 * math.log(0.5) + 0.5 * (math.log(0.8) + math.log(0.7))
    )
    for weights in [(0.0, 1.0), (1.0, -1.0)]:
        with pytest.raises(ValueError):
            _ = weighted_log_score(forecast, 1, *weights)


def test_locality_witness():
    a = ProbabilityVector([0.5, 0.3, 0.2])
    b = ProbabilityVector([0.5, 0.1, 0.4])
    assert log_score(a, 0) == log_score(b, 0)
    assert total_log_score(a, 0) != pytest.approx(total_log_score(b, 0), abs=1e-3)


def test_get_scoring_rule():
    assert get_scoring_rule("log") is log_score
    assert get_scoring_rule("totallog") is total_log_score
    with pytest.raises(ScoringException, match="try: log, totallog"):
        _ = get_scoring_rule("brier")


def test_expected_total_log_examples():
    assert expected_total_log(ProbabilityVector([0.25, 0.5, 0.25])) == pytest.approx(
        -1.8178, abs=5e-5
    )
    assert expected_total_log(echelon(5, 3)) == 0.0
    assert expected_total_log(uniform(2)) == pytest.approx(-2 * math.log(2), abs=1e-15)


def test_expected_total_log_is_negentropy_plus_negextropy():
    for _ in range(1000):
        pv = random_pmf(int(rng.integers(2, 21)))
        assert expected_total_log(pv) == pytest.approx(
            -(entropy(pv) + extropy(pv)), abs=1e-12
        )


def test_expected_quadratic_is_repeat_rate():
    for _ in range(200):
        pv = random_pmf(int(rng.integers(1, 21)))
        assert expected_score(pv, pv, "quadratic") == pytest.approx(
            repeat_rate(pv), abs=1e-12
        )


def test_expected_score_skips_impossible_outcomes():
    truth = ProbabilityVector([0.5, 0.5, 0.0])
    candidate = ProbabilityVector([0.5, 0.5, 0.0])
    assert expected_score(truth, candidate, "log") == pytest.approx(math.log(0.5))
    assert expected_score(uniform(3), candidate, "log") == -math.inf
    with pytest.raises(ScoringException):
        _ = expected_score(uniform(3), uniform(4), "log")
    with pytest.raises(ScoringException):
        _ = expected_score(uniform(3), uniform(3), "spherical")


def test_barycentric_lattice():
    lattice = barycentric_lattice(3, 10)
    assert len(lattice) == 66
    assert len(set(lattice)) == 66
    assert lattice[0] == echelon(3, 0)
    assert lattice[-1] == echelon(3, 2)
    for n, m in [(2, 4), (4, 5), (5, 3)]:
        assert len(barycentric_lattice(n, m)) == comb(m + n - 1, n - 1)
    assert barycentric_lattice(1, 7) == [ProbabilityVector([1.0])]
    np.testing.assert_allclose(
        [pv.masses for pv in barycentric_lattice(2, 2)],
        [[1.0, 0.0], [0.5, 0.5], [0.0, 1.0]],
    )
    with pytest.raises(ValueError):
        _ = barycentric_lattice(3, 0)
