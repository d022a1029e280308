"""
Proper scoring rules for forecast distributions over discrete outcomes.

Scores are rewards: larger is better, and a certainty that is refuted
scores ``-inf``.
"""
import itertools
import logging
import math
from typing import Callable, List, Union

import numpy as np

from extropy.scoring.structs import ScoringException
from extropy.simplex.probability_vector import ProbabilityVector

logger = logging.getLogger(__name__)

ScoringRule = Callable[[ProbabilityVector, int], float]


def _check_index(pv: ProbabilityVector, o: int) -> None:
    if not 0 <= o < pv.n:
        raise ScoringException(
            f"Outcome index {o} out of range for a forecast over {pv.n} outcomes"
        )


def log_score(pv: ProbabilityVector, o: int) -> float:
    """
    Log score ``log p_o`` of the probability assigned to the outcome.

    :param pv: The forecast.
    :param o: Index of the observed outcome.
    :return: ``log p_o``; ``-inf`` when ``p_o = 0``.
    :raises ScoringException: If ``o`` is out of range.
    """
    _check_index(pv, o)
    p = float(pv[o])
    return math.log(p) if p > 0 else -math.inf


def nonoccurrence_score(pv: ProbabilityVector, o: int) -> float:
    """
    Non-occurrence component of the total log score,
    ``sum(log(1 - p_i) for i != o)``.

    :return: The score; ``-inf`` if some non-occurring outcome had
        probability 1.
    :raises ScoringException: If ``o`` is out of range.
    """
    _check_index(pv, o)
    others = np.delete(pv.masses, o)
    if np.any(others >= 1.0):
        return -math.inf
    return math.fsum(np.log1p(-others))


def weighted_log_score(
    pv: ProbabilityVector,
    o: int,
    occurrence_weight: float = 1.0,
    nonoccurrence_weight: float = 1.0,
) -> float:
    """
    Positive combination of the log score and the non-occurrence score.

    Every such combination is proper. Weights (1, 1) give
    :func:`total_log_score`.

    :raises ValueError: If a weight is not strictly positive.
    :raises ScoringException: If ``o`` is out of range.
    """
    if not (occurrence_weight > 0 and nonoccurrence_weight > 0):
        raise ValueError(
            f"Weights must be positive, got ({occurrence_weight}, {nonoccurrence_weight})"
        )
    occurrence = log_score(pv, o)
    nonoccurrence = nonoccurrence_score(pv, o)
    if math.isinf(occurrence) or math.isinf(nonoccurrence):
        return -math.inf
    return occurrence_weight * occurrence + nonoccurrence_weight * nonoccurrence


def total_log_score(pv: ProbabilityVector, o: int) -> float:
    """
    Total log score ``log p_o + sum(log(1 - p_i) for i != o)``.

    Its expectation under the forecast itself is minus the entropy plus
    the extropy of the forecast.

    :return: The score; ``-inf`` when ``p_o = 0`` or a non-occurring
        outcome had probability 1.
    :raises ScoringException: If ``o`` is out of range.
    """
    return weighted_log_score(pv, o)


def quadratic_score(pv: ProbabilityVector, o: int) -> float:
    """
    Quadratic score ``2 p_o - sum(p_i^2)``, bounded in [-1, 1].

    Its expectation under the forecast itself is the repeat rate.
    """
    _check_index(pv, o)
    p = pv.masses
    return 2.0 * float(p[o]) - float(np.dot(p, p))


SCORING_RULES = {
    "log": log_score,
    "totallog": total_log_score,
    "quadratic": quadratic_score,
    "nonoccurrence": nonoccurrence_score,
}

# Rules whose expectation is undefined unless the truth is interior
LOG_FAMILY = frozenset(["log", "totallog", "nonoccurrence"])


def get_scoring_rule(name: str) -> ScoringRule:
    """Return a scoring rule as a function given its name."""
    try:
        return SCORING_RULES[name]
    except KeyError:
        raise ScoringException(
            f"Invalid scoring rule {name}, try: " + ", ".join(SCORING_RULES.keys())
        ) from None


def expected_score(
    truth: ProbabilityVector,
    candidate: ProbabilityVector,
    rule: Union[str, ScoringRule],
) -> float:
    """
    Expected score of a candidate forecast when outcomes follow ``truth``.

    Computes ``sum(truth_o * score(candidate, o))`` by exact summation.
    Outcomes with ``truth_o = 0`` are skipped, so their scores may be
    infinite without affecting the result.

    :param truth: The distribution of the outcome.
    :param candidate: The forecast being scored.
    :param rule: A rule name or a scoring function.
    :return: The expected score.
    :raises ScoringException: If the dimensions differ or the rule is unknown.
    """
    if isinstance(rule, str):
        rule = get_scoring_rule(rule)
    if truth.n != candidate.n:
        raise ScoringException(f"Dimension mismatch: {truth.n} != {candidate.n}")
    terms = []
    for o, weight in enumerate(truth.masses.tolist()):
        if weight > 0:
            score = rule(candidate, o)
            if math.isinf(score):
                return -math.inf
            terms.append(weight * score)
    return math.fsum(terms)


def expected_total_log(pv: ProbabilityVector) -> float:
    """
    Expected total log score of a forecast under itself.

    This equals ``-(entropy(pv) + extropy(pv))``.
    """
    return expected_score(pv, pv, total_log_score)


def barycentric_lattice(n: int, resolution: int) -> List[ProbabilityVector]:
    """
    All pmfs over ``n`` outcomes whose masses are multiples of ``1 / resolution``.

    There are ``C(resolution + n - 1, n - 1)`` of them. They are ordered
    by decreasing first mass, then decreasing second mass, and so on.

    :param n: Number of outcomes, at least 1.
    :param resolution: Number of subdivisions ``M``, at least 1.
    :return: The lattice points.
    :raises ValueError: If ``n`` or ``resolution`` is below 1.
    """
    if n < 1 or resolution < 1:
        raise ValueError(f"Need n >= 1 and resolution >= 1, got {n} and {resolution}")
    points = []
    # Stars and bars: n - 1 bar positions among resolution + n - 1 slots
    for bars in itertools.combinations(range(resolution + n - 1), n - 1):
        edges = (-1,) + bars + (resolution + n - 1,)
        counts = [edges[k + 1] - edges[k] - 1 for k in range(n)]
        points.append(counts)
    points.sort(reverse=True)
    logger.debug(f"Built {len(points)} lattice points for n={n}, M={resolution}")
    return [ProbabilityVector(np.array(c, dtype=float) / resolution) for c in points]
