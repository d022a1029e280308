import logging
import math
from time import perf_counter
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np
import ray

from extropy import settings
from extropy.scoring.rules import (
    LOG_FAMILY,
    expected_score,
    get_scoring_rule,
)
from extropy.scoring.structs import (
    ForecastRecord,
    ProprietyResult,
    ScoreReport,
    ScoreRow,
    ScoringException,
)
from extropy.simplex.probability_vector import ProbabilityVector

logger = logging.getLogger(__name__)


@ray.remote
class RecordScorer:
    """Score forecast records under a fixed list of rules."""

    def __init__(self, rule_names: List[str]):
        self.rules = [get_scoring_rule(name) for name in rule_names]

    def run(self, record: ForecastRecord) -> List[float]:
        return [rule(record.forecast, record.outcome_index) for rule in self.rules]


def _score_locally(records: Sequence[ForecastRecord], rule_names: List[str]) -> List[List[float]]:
    rules = [get_scoring_rule(name) for name in rule_names]
    return [[rule(r.forecast, r.outcome_index) for rule in rules] for r in records]


def _score_with_actors(
    records: Sequence[ForecastRecord], rule_names: List[str], num_actors: int
) -> List[List[float]]:
    if not ray.is_initialized():
        logger.warning("Ray was not initialized before parallel scoring; starting it now.")
        ray.init()
    tic = perf_counter()
    scorers = [RecordScorer.remote(rule_names) for _ in range(num_actors)]
    logger.debug(f"Spawned {num_actors} scoring actors in {perf_counter() - tic:.2f} s")
    try:
        refs = [scorers[i % num_actors].run.remote(r) for i, r in enumerate(records)]
        # ray.get keeps the order of the references
        return ray.get(refs)
    finally:
        for scorer in scorers:
            ray.kill(scorer)


def score_sequence(
    records: Sequence[ForecastRecord],
    rules: Optional[Iterable[str]] = None,
    parallel: Optional[bool] = None,
    num_actors: Optional[int] = None,
) -> ScoreReport:
    """
    Score a sequence of forecast records under one or more rules.

    Rows and totals follow the input order whether or not scoring runs in
    parallel. A total is the exact sum of its record scores; if any record
    scores ``-inf`` the total is ``-inf`` and flagged as not finite.
    Records may have different dimensions.

    :param records: The records to score, at least one.
    :param rules: Rule names. Defaults to ``settings.DEFAULT_RULES``.
        Duplicates are ignored.
    :param parallel: Score on ray actors. Defaults to
        ``settings.PARALLEL_SCORING``.
    :param num_actors: Number of ray actors. Defaults to
        ``settings.NUM_ACTORS``.
    :return: The score report.
    :raises ScoringException: If there are no records or a rule is unknown.
    """
    records = list(records)
    if not records:
        raise ScoringException("Cannot score an empty record sequence.")
    rule_names = list(dict.fromkeys(settings.DEFAULT_RULES if rules is None else rules))
    if not rule_names:
        raise ScoringException("At least one scoring rule is required.")
    for name in rule_names:
        get_scoring_rule(name)
    if parallel is None:
        parallel = settings.PARALLEL_SCORING
    if num_actors is None:
        num_actors = settings.NUM_ACTORS

    if parallel:
        scores = _score_with_actors(records, rule_names, max(1, num_actors))
    else:
        scores = _score_locally(records, rule_names)

    per_record = []
    columns: Dict[str, List[float]] = {name: [] for name in rule_names}
    for record, record_scores in zip(records, scores):
        for name, score in zip(rule_names, record_scores):
            per_record.append(
                ScoreRow(id=record.id, rule=name, score=score, finite=math.isfinite(score))
            )
            columns[name].append(score)
    totals, finite = {}, {}
    for name, column in columns.items():
        if all(math.isfinite(s) for s in column):
            totals[name] = math.fsum(column)
            finite[name] = True
        else:
            totals[name] = -math.inf
            finite[name] = False
            logger.debug(f"Total {name} score is infinite")
    return ScoreReport(
        per_record=per_record, totals=totals, finite=finite, record_count=len(records)
    )


def propriety_probe(
    truth: ProbabilityVector, rule: str, grid: Sequence[ProbabilityVector]
) -> ProprietyResult:
    """
    Find the candidate forecast with the highest expected score under ``truth``.

    For a proper rule the best candidate is the truth itself; for a
    strictly proper one, every other candidate scores strictly lower.

    :param truth: The true distribution. Must be interior for the log,
        total log and non-occurrence rules.
    :param rule: Name of the scoring rule.
    :param grid: Candidate forecasts; must contain ``truth``.
    :return: The expected score of every candidate and the argmax.
    :raises ScoringException: If the rule is unknown, the truth is on the
        boundary for a log-family rule, the dimensions differ, or the grid
        does not contain the truth.
    """
    scoring_rule = get_scoring_rule(rule)
    if rule in LOG_FAMILY and not truth.is_interior():
        raise ScoringException(
            f"Rule {rule} needs a truth with every mass in (0, 1), got {truth}"
        )
    candidates = list(grid)
    for candidate in candidates:
        if candidate.n != truth.n:
            raise ScoringException(f"Dimension mismatch: {candidate.n} != {truth.n}")
    if not any(np.allclose(c.masses, truth.masses, rtol=0, atol=1e-12) for c in candidates):
        raise ScoringException("The candidate grid must contain the truth.")
    expected = [expected_score(truth, c, scoring_rule) for c in candidates]
    best = int(np.argmax(expected))
    return ProprietyResult(
        rule=rule,
        truth=truth,
        candidates=candidates,
        expected_scores=expected,
        argmax_index=best,
        truth_is_argmax=bool(
            np.allclose(candidates[best].masses, truth.masses, rtol=0, atol=1e-12)
        ),
    )
