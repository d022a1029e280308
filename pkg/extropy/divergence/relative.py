"""
Relative entropy, its complementary dual, and their odds forms.

Support conventions: for the relative entropy a term with ``p_i = 0``
contributes nothing whatever ``s_i`` is, and ``p_i > 0`` with ``s_i = 0``
makes the divergence infinite. The complementary divergence mirrors this
at the other end of the unit interval, with ``1 - p_i`` and ``1 - s_i``
in place of ``p_i`` and ``s_i``. Both conventions are those of
``scipy.special.rel_entr``.
"""
import logging
import math
from typing import Tuple

import numpy as np
from scipy.special import rel_entr

from extropy import settings
from extropy.divergence.extended import (
    INFINITE,
    DivergenceException,
    ExtendedNonNegative,
)
from extropy.simplex.complement import complement
from extropy.simplex.measures import expected_log_odds
from extropy.simplex.probability_vector import ProbabilityVector

logger = logging.getLogger(__name__)


def _check_dimensions(p: ProbabilityVector, s: ProbabilityVector) -> None:
    if p.n != s.n:
        raise DivergenceException(f"Dimension mismatch: {p.n} != {s.n}")


def kl_divergence(p: ProbabilityVector, s: ProbabilityVector) -> ExtendedNonNegative:
    """
    Relative entropy ``D(p || s) = sum(p_i log(p_i / s_i))``.

    :param p: The first pmf.
    :param s: The reference pmf, of the same dimension.
    :return: The divergence, infinite iff some ``p_i > 0`` has ``s_i = 0``.
    :raises DivergenceException: If the dimensions differ.
    """
    _check_dimensions(p, s)
    if np.any((p.masses > 0) & (s.masses == 0)):
        return INFINITE
    return ExtendedNonNegative.from_value(math.fsum(rel_entr(p.masses, s.masses)))


def complementary_divergence(
    p: ProbabilityVector, s: ProbabilityVector
) -> ExtendedNonNegative:
    """
    Complementary relative entropy
    ``D^c(p || s) = sum((1 - p_i) log((1 - p_i) / (1 - s_i)))``.

    :param p: The first pmf.
    :param s: The reference pmf, of the same dimension.
    :return: The divergence, infinite iff some ``p_i < 1`` has ``s_i = 1``.
    :raises DivergenceException: If the dimensions differ.
    """
    _check_dimensions(p, s)
    if np.any((p.masses < 1) & (s.masses == 1)):
        return INFINITE
    return ExtendedNonNegative.from_value(
        math.fsum(rel_entr(1.0 - p.masses, 1.0 - s.masses))
    )


def half_euclidean(p: ProbabilityVector, s: ProbabilityVector) -> float:
    """
    Half the squared Euclidean distance, ``sum((p_i - s_i)^2) / 2``.

    Approximates :func:`complementary_divergence` when every mass of
    both arguments is small.
    """
    _check_dimensions(p, s)
    diff = p.masses - s.masses
    return 0.5 * float(np.dot(diff, diff))


def odds_divergences(
    p: ProbabilityVector,
) -> Tuple[ExtendedNonNegative, ExtendedNonNegative]:
    """
    Divergences of a pmf from its own complement, in odds form.

    With ``q = complement(p)`` this evaluates the closed forms
    ``D(p || q) = sum(p_i log(p_i / (1 - p_i))) + log(n - 1)`` and
    ``D^c(p || q) = (n - 1) (sum(q_i log(q_i / (1 - q_i))) + log(n - 1))``,
    which agree with the generic divergences applied to ``(p, q)``.
    Both vanish at the uniform pmf. ``D(p || q)`` is infinite when ``p``
    is a certainty; for ``n >= 3`` ``D^c(p || q)`` is then maximal and
    equals :func:`dc_upper_bound`.

    :param p: The pmf, with ``n >= 2``.
    :return: A tuple ``(D(p || q), D^c(p || q))``.
    :raises DivergenceException: If ``n == 1``.
    """
    n = p.n
    if n < 2:
        raise DivergenceException("Odds divergences need at least 2 outcomes.")
    q = complement(p)
    log_n1 = math.log(n - 1)
    d = expected_log_odds(p) + log_n1
    dc = (n - 1) * (expected_log_odds(q) + log_n1)
    # The complementary form is scaled by n - 1, and so is its rounding
    return (
        ExtendedNonNegative.from_value(d),
        ExtendedNonNegative.from_value(dc, settings.CLAMP_TOLERANCE * (n - 1)),
    )


def dc_upper_bound(n: int) -> float:
    """
    Largest complementary divergence of a pmf from its complement.

    :param n: The dimension, at least 3.
    :return: ``(n - 1) log((n - 1) / (n - 2))``, which decreases toward 1.
    :raises DivergenceException: If ``n <= 2``, where the divergence is
        unbounded.
    """
    if n <= 2:
        raise DivergenceException(
            f"The complementary odds divergence is unbounded for n = {n}; need n >= 3."
        )
    return (n - 1) * math.log1p(1.0 / (n - 2))
