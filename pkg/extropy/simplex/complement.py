import logging
from typing import List

from extropy.simplex.probability_vector import ProbabilityVector, SimplexException

logger = logging.getLogger(__name__)


def complement(pv: ProbabilityVector) -> ProbabilityVector:
    """
    Compute the complementary pmf ``q_i = (1 - p_i) / (n - 1)``.

    The complement of every pmf lies in the sub-simplex inscribed in the
    unit simplex (no mass exceeds ``1 / (n - 1)``), and the uniform pmf is
    the only pmf equal to its own complement.

    :param pv: The probability vector, with ``n >= 2``.
    :return: The complementary probability vector.
    :raises SimplexException: If ``n == 1``, where the complement is undefined.
    """
    if pv.n < 2:
        raise SimplexException("The complement of a one-point pmf is undefined.")
    return ProbabilityVector((1.0 - pv.masses) / (pv.n - 1))


def iterate_complement(pv: ProbabilityVector, k: int) -> List[ProbabilityVector]:
    """
    Apply the complement map ``k`` times and return the full trajectory.

    For ``n >= 3`` the map is a contraction toward the uniform pmf: each
    step divides the sup-norm distance to uniform by exactly ``n - 1``.
    For ``n = 2`` the map only swaps the two masses.

    :param pv: The starting probability vector, with ``n >= 2``.
    :param k: The number of steps, non-negative.
    :return: The list ``[pv, T(pv), ..., T^k(pv)]`` of length ``k + 1``.
    :raises SimplexException: If ``n == 1``.
    :raises ValueError: If ``k`` is negative.
    """
    if k < 0:
        raise ValueError(f"Number of steps must be non-negative, got {k}")
    if pv.n < 2:
        raise SimplexException("The complement of a one-point pmf is undefined.")
    if pv.n == 2:
        logger.warning("Complement map on 2 outcomes is a swap and does not contract.")
    trajectory = [pv]
    for step in range(k):
        trajectory.append(complement(trajectory[-1]))
        logger.debug(f"Complement step {step + 1}: {trajectory[-1]}")
    return trajectory
