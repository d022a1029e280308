from typing import Dict, List

import msgspec

from extropy.simplex.probability_vector import ProbabilityVector
from extropy.structs import STRUCT_KWARGS


class ScoringException(Exception):
    """Basic exception handling for forecast scoring."""

    def __init__(self, msg):
        super().__init__(msg)


class ForecastRecord(msgspec.Struct, frozen=True, **STRUCT_KWARGS):
    """
    A forecast pmf together with the outcome that was observed.

    :param id: Opaque identifier of the record.
    :param forecast: The forecast distribution.
    :param outcome_index: Zero-based index of the observed outcome.
    :raises ScoringException: If ``outcome_index`` does not address a
        component of ``forecast``.
    """

    id: str
    forecast: ProbabilityVector
    outcome_index: int

    def __post_init__(self):
        if not 0 <= self.outcome_index < self.forecast.n:
            raise ScoringException(
                f"Record {self.id}: outcome index {self.outcome_index} out of range "
                + f"for a forecast over {self.forecast.n} outcomes"
            )

    @property
    def observed_probability(self) -> float:
        return float(self.forecast[self.outcome_index])


class ScoreRow(msgspec.Struct, frozen=True, **STRUCT_KWARGS):
    id: str
    rule: str
    score: float
    finite: bool


class ScoreReport(msgspec.Struct, **STRUCT_KWARGS):
    """
    Per-record and cumulative scores of a forecast sequence.

    :param per_record: One row per record and rule, records in input order.
    :param totals: Cumulative score per rule; ``-inf`` if any record scored
        ``-inf`` under that rule.
    :param finite: Per rule, False if the total is infinite.
    :param record_count: Number of records scored.
    """

    per_record: List[ScoreRow]
    totals: Dict[str, float]
    finite: Dict[str, bool]
    record_count: int


class ProprietyResult(msgspec.Struct, **STRUCT_KWARGS):
    """
    Expected scores of every candidate forecast under a true distribution.

    :param rule: Name of the scoring rule.
    :param truth: The true distribution.
    :param candidates: The candidate forecasts, in input order.
    :param expected_scores: Expected score of each candidate.
    :param argmax_index: Position of the best candidate (first on ties).
    :param truth_is_argmax: True if the best candidate equals the truth.
    """

    rule: str
    truth: ProbabilityVector
    candidates: List[ProbabilityVector]
    expected_scores: List[float]
    argmax_index: int
    truth_is_argmax: bool

    @property
    def argmax(self) -> ProbabilityVector:
        return self.candidates[self.argmax_index]
