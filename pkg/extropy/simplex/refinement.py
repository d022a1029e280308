import numpy as np
from scipy.special import entr

from extropy.simplex.measures import binary_measure
from extropy.simplex.probability_vector import (
    ProbabilityVector,
    SimplexException,
    check_unit_interval,
)


def refine(pv: ProbabilityVector, index: int, t: float) -> ProbabilityVector:
    """
    Split one mass into two adjacent masses.

    The mass at ``index`` is replaced by ``t * p_index`` followed by
    ``(1 - t) * p_index``; all other masses keep their order, so the
    result has dimension ``n + 1``.

    :param pv: The probability vector to refine.
    :param index: Position of the mass to split.
    :param t: Fraction of the mass kept at ``index``, in [0, 1].
    :return: The refined probability vector.
    :raises SimplexException: If ``index`` is out of range.
    :raises ValueError: If ``t`` is outside [0, 1].
    """
    t = check_unit_interval("t", t)
    if not 0 <= index < pv.n:
        raise SimplexException(f"Index {index} out of range for dimension {pv.n}")
    p = pv.masses
    split = np.array([t * p[index], (1.0 - t) * p[index]])
    return ProbabilityVector(np.concatenate((p[:index], split, p[index + 1 :])))


def entropy_refinement_delta(p1: float, t: float) -> float:
    """
    Entropy gained by splitting mass ``p1`` in proportions ``(t, 1 - t)``.

    :return: ``p1 * binary_measure(t)``, in nats.
    :raises ValueError: If either argument is outside [0, 1].
    """
    p1 = check_unit_interval("p1", p1)
    return p1 * binary_measure(t)


def extropy_refinement_delta(p1: float, t: float) -> float:
    """
    Extropy gained by splitting mass ``p1`` in proportions ``(t, 1 - t)``.

    Computes ``(1 - p1) log(1 - p1) - (1 - t p1) log(1 - t p1)
    - (1 - (1 - t) p1) log(1 - (1 - t) p1)``, which is symmetric under
    ``t -> 1 - t``.

    :return: The extropy increase, in nats.
    :raises ValueError: If either argument is outside [0, 1].
    """
    p1 = check_unit_interval("p1", p1)
    t = check_unit_interval("t", t)
    return float(-entr(1.0 - p1) + entr(1.0 - t * p1) + entr(1.0 - (1.0 - t) * p1))
