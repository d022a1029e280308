import logging
from typing import Iterable, Iterator, Union

import numpy as np

from extropy import settings

logger = logging.getLogger(__name__)


class SimplexException(Exception):
    """Basic exception handling for points on the unit simplex."""

    def __init__(self, msg):
        super().__init__(msg)


class ProbabilityVector:
    """
    An immutable point on the unit simplex.

    Masses are validated on construction: every mass must lie in [0, 1]
    and the masses must sum to 1 within ``settings.SIMPLEX_TOLERANCE``.
    Input is never silently rescaled; use :meth:`normalized` to request
    renormalization explicitly.

    :param masses: The probability masses, in order.
    :raises SimplexException: If the masses are empty, non-finite,
        outside [0, 1], or do not sum to 1.
    """

    __slots__ = ("_masses",)

    def __init__(self, masses: Union[Iterable[float], np.ndarray]):
        values = np.array(masses, dtype=float).ravel()
        if values.size == 0:
            raise SimplexException("A probability vector needs at least one mass.")
        if not np.all(np.isfinite(values)):
            raise SimplexException(f"Masses must be finite, got {values.tolist()}")
        if np.any(values < 0) or np.any(values > 1):
            raise SimplexException(f"Masses must lie in [0, 1], got {values.tolist()}")
        total = values.sum()
        if abs(total - 1.0) > settings.SIMPLEX_TOLERANCE:
            raise SimplexException(
                f"Masses sum to {total!r}, which is not within "
                + f"{settings.SIMPLEX_TOLERANCE} of 1."
            )
        values.setflags(write=False)
        self._masses = values

    @classmethod
    def normalized(cls, values: Union[Iterable[float], np.ndarray]) -> "ProbabilityVector":
        """
        Build a probability vector by dividing non-negative values by their sum.

        :param values: Non-negative weights, at least one of them positive.
        :return: The renormalized probability vector.
        :raises SimplexException: If any weight is negative or all are zero.
        """
        weights = np.array(values, dtype=float).ravel()
        if weights.size == 0 or np.any(weights < 0) or not np.all(np.isfinite(weights)):
            raise SimplexException("Weights must be finite and non-negative.")
        total = weights.sum()
        if total <= 0:
            raise SimplexException("Cannot normalize weights that sum to zero.")
        logger.debug(f"Renormalizing {weights.size} weights by factor {1.0 / total!r}")
        return cls(weights / total)

    @property
    def masses(self) -> np.ndarray:
        """Read-only array of the masses."""
        return self._masses

    @property
    def n(self) -> int:
        return self._masses.size

    def positive_count(self) -> int:
        return int(np.count_nonzero(self._masses))

    def is_interior(self) -> bool:
        """True if every mass is strictly between 0 and 1."""
        return bool(np.all(self._masses > 0) and np.all(self._masses < 1))

    def tolist(self):
        return self._masses.tolist()

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[float]:
        return iter(self._masses.tolist())

    def __getitem__(self, index):
        return self._masses[index]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._masses
        return self._masses.astype(dtype)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProbabilityVector):
            return NotImplemented
        return np.array_equal(self._masses, other._masses)

    def __hash__(self) -> int:
        return hash(tuple(self._masses.tolist()))

    def __repr__(self) -> str:
        return f"ProbabilityVector({self._masses.tolist()})"


def uniform(n: int) -> ProbabilityVector:
    """The uniform pmf over ``n`` possibilities."""
    if n < 1:
        raise ValueError(f"Dimension must be at least 1, got {n}")
    return ProbabilityVector(np.full(n, 1.0 / n))


def echelon(n: int, index: int) -> ProbabilityVector:
    """The certainty pmf placing all mass on ``index`` (a simplex vertex)."""
    if n < 1:
        raise ValueError(f"Dimension must be at least 1, got {n}")
    if not 0 <= index < n:
        raise SimplexException(f"Index {index} out of range for dimension {n}")
    masses = np.zeros(n)
    masses[index] = 1.0
    return ProbabilityVector(masses)


def sup_distance(a: ProbabilityVector, b: ProbabilityVector) -> float:
    """The sup-norm distance between two pmfs of equal dimension."""
    if a.n != b.n:
        raise SimplexException(f"Dimension mismatch: {a.n} != {b.n}")
    return float(np.max(np.abs(a.masses - b.masses)))


def check_unit_interval(name: str, value: float) -> float:
    """
    Check that a scalar argument lies in [0, 1].

    :raises ValueError: If ``value`` is outside [0, 1] or not finite.
    """
    if not (0.0 <= value <= 1.0):
        raise ValueError(f"{name} must satisfy 0 <= {name} <= 1, got {value}")
    return float(value)
