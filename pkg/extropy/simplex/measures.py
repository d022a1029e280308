"""
Discrete entropy and extropy measures on the unit simplex.

All measures use natural logarithms and the conventions 0 log 0 = 0 and
(1 - p) log(1 - p) = 0 at p = 1. The conventions come from
``scipy.special.entr``, which is defined piecewise (0 at 0) rather than
by evaluating a limit, so no NaN values can appear.
"""
import logging
import math
from typing import Tuple

import msgspec
import numpy as np
from scipy.special import entr, xlogy

from extropy import settings
from extropy.simplex.probability_vector import (
    ProbabilityVector,
    SimplexException,
    check_unit_interval,
)
from extropy.structs import STRUCT_KWARGS

logger = logging.getLogger(__name__)


class KernelValues(msgspec.Struct, frozen=True, **STRUCT_KWARGS):
    """
    Pointwise kernels at a single probability, in nats.

    :param s: ``-p log p``, the entropy contribution.
    :param t: ``-(1 - p) log(1 - p)``, the extropy contribution.
    :param u: ``s - t``, the contribution to the entropy-extropy gap.
    """

    s: float
    t: float
    u: float


def entropy(pv: ProbabilityVector) -> float:
    """
    Compute the entropy ``H(p) = -sum(p_i log p_i)``, in nats.

    :param pv: The probability vector.
    :return: The entropy, between 0 and ``log(n)``.
    """
    return float(entr(pv.masses).sum())


def extropy(pv: ProbabilityVector) -> float:
    """
    Compute the extropy ``J(p) = -sum((1 - p_i) log(1 - p_i))``, in nats.

    :param pv: The probability vector.
    :return: The extropy, between 0 and ``(n - 1) log(n / (n - 1))``.
    """
    return float(entr(1.0 - pv.masses).sum())


def binary_measure(p: float) -> float:
    """
    Entropy of the binary pmf (p, 1 - p), which equals its extropy.

    :param p: Probability of the event, in [0, 1].
    :return: ``-p log p - (1 - p) log(1 - p)``, in nats.
    :raises ValueError: If ``p`` is outside [0, 1].
    """
    p = check_unit_interval("p", p)
    return float(entr(p) + entr(1.0 - p))


def pointwise_kernels(p: float) -> KernelValues:
    """
    Evaluate the kernels s, t and u at a single probability.

    The boundary values s(0) = t(1) = u(0) = u(1) = 0 hold exactly.

    :param p: A probability in [0, 1].
    :return: The kernel values at ``p``.
    :raises ValueError: If ``p`` is outside [0, 1].
    """
    p = check_unit_interval("p", p)
    s = float(entr(p))
    t = float(entr(1.0 - p))
    return KernelValues(s=s, t=t, u=s - t)


def gap(pv: ProbabilityVector) -> float:
    """
    Compute ``H(p) - J(p)`` as the sum of the u kernel over the masses.

    The gap is zero when at most two masses are positive and strictly
    positive otherwise.

    :param pv: The probability vector.
    :return: The entropy minus the extropy, in nats.
    """
    p = pv.masses
    return float((entr(p) - entr(1.0 - p)).sum())


def partition_sum(pv: ProbabilityVector) -> float:
    """
    Sum of the binary measures of each component probability.

    This equals ``H(p) + J(p)`` (the Fermi-Dirac entropy of the masses).

    :param pv: The probability vector.
    :return: ``sum(binary_measure(p_i))``, in nats.
    """
    p = pv.masses
    return float((entr(p) + entr(1.0 - p)).sum())


def max_entropy_value(n: int) -> float:
    """Entropy of the uniform pmf over ``n`` possibilities, ``log(n)``."""
    if n < 1:
        raise ValueError(f"Dimension must be at least 1, got {n}")
    return math.log(n)


def max_extropy_value(n: int) -> float:
    """
    Extropy of the uniform pmf over ``n`` possibilities.

    Computes ``(n - 1) log(n / (n - 1))``, which increases strictly with
    ``n`` and tends to 1 from below.

    :param n: The dimension, at least 1.
    :return: The maximum extropy for dimension ``n`` (0 for ``n = 1``).
    :raises ValueError: If ``n < 1``.
    """
    if n < 1:
        raise ValueError(f"Dimension must be at least 1, got {n}")
    if n == 1:
        return 0.0
    return (n - 1) * math.log1p(1.0 / (n - 1))


def repeat_rate(pv: ProbabilityVector) -> float:
    """The repeat rate ``sum(p_i^2)``."""
    return float(np.dot(pv.masses, pv.masses))


def gini_heterogeneity(pv: ProbabilityVector) -> float:
    """The Gini heterogeneity index ``1 - sum(p_i^2)``."""
    return 1.0 - repeat_rate(pv)


def extropy_quadratic_approx(pv: ProbabilityVector) -> float:
    """
    Quadratic approximation of the extropy, ``1 - sum(p_i^2) / 2``.

    The approximation is good when every mass is small. Use
    :func:`extropy_quadratic_remainder` to bound its error.

    :param pv: The probability vector.
    :return: The approximate extropy.
    """
    return 1.0 - 0.5 * repeat_rate(pv)


def extropy_quadratic_remainder(pv: ProbabilityVector) -> Tuple[float, float]:
    """
    Bound the error of :func:`extropy_quadratic_approx`.

    The difference ``approx - extropy`` equals
    ``sum_i sum_{k>=3} p_i^k / (k (k - 1))``, so it is at least
    ``sum(p_i^3) / 6`` and at most ``sum(p_i^3 / (6 (1 - p_i)))``.

    :param pv: The probability vector.
    :return: A tuple (lower, upper) bounding ``approx - extropy``. The
        upper bound is infinite if some mass equals 1.
    """
    p = pv.masses
    cubes = p**3
    lower = float(cubes.sum()) / 6.0
    if np.any(p >= 1.0):
        return lower, math.inf
    upper = float((cubes / (1.0 - p)).sum()) / 6.0
    return lower, upper


def expected_log_odds(pv: ProbabilityVector) -> float:
    """
    Expected log odds in favor of the occurring outcome.

    Computes ``sum(p_i log(p_i / (1 - p_i)))``, with zero masses
    contributing nothing. The uniform pmf gives ``-log(n - 1)``.

    :param pv: The probability vector.
    :return: The expected log odds; ``inf`` if some mass equals 1.
    """
    p = pv.masses
    if np.any(p >= 1.0):
        return math.inf
    return float((xlogy(p, p) - xlogy(p, 1.0 - p)).sum())


def _validate_joint(joint) -> np.ndarray:
    m = np.array(joint, dtype=float)
    if m.ndim != 2 or m.size == 0:
        raise SimplexException("A joint pmf must be a non-empty 2-D matrix.")
    if not np.all(np.isfinite(m)) or np.any(m < 0):
        raise SimplexException("Joint pmf entries must be finite and non-negative.")
    total = m.sum()
    if abs(total - 1.0) > settings.SIMPLEX_TOLERANCE:
        raise SimplexException(
            f"Joint pmf entries sum to {total!r}, which is not within "
            + f"{settings.SIMPLEX_TOLERANCE} of 1."
        )
    return m


def joint_entropy(joint) -> float:
    """
    Entropy of a joint pmf given as a matrix ``m[i, j] = P(X=x_i, Y=y_j)``.

    :param joint: A 2-D array of non-negative entries summing to 1.
    :return: ``-sum(m_ij log m_ij)``, in nats.
    :raises SimplexException: If the matrix is not a valid joint pmf.
    """
    m = _validate_joint(joint)
    return float(entr(m).sum())


def conditional_decomposition(joint) -> Tuple[float, float]:
    """
    Chain-rule decomposition of a joint entropy.

    Returns the marginal entropy ``H(X)`` of the row variable and the
    expected conditional entropy ``sum_i P(X=x_i) H(Y | X=x_i)``. Their
    sum equals :func:`joint_entropy`. Rows with zero marginal mass are
    skipped.

    :param joint: A 2-D array of non-negative entries summing to 1.
    :return: A tuple (marginal entropy, expected conditional entropy).
    :raises SimplexException: If the matrix is not a valid joint pmf.
    """
    m = _validate_joint(joint)
    row_mass = m.sum(axis=1)
    marginal = float(entr(row_mass).sum())
    conditional = 0.0
    for mass, row in zip(row_mass, m):
        if mass > 0:
            conditional += mass * float(entr(row / mass).sum())
    return marginal, conditional
