"""
Bregman divergences on the unit simplex.

A generator's gradient is taken over the first ``n - 1`` coordinates,
with the final mass ``p_n = 1 - sum(p_1 .. p_{n-1})`` treated as
dependent, so component ``j`` of the gradient is
``d phi / d p_j - d phi / d p_n``.
"""
import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.special import entr

from extropy.divergence.extended import DivergenceException
from extropy.simplex.probability_vector import ProbabilityVector

logger = logging.getLogger(__name__)

# Central difference step and smallest mass for gradient checks
FD_STEP = 1e-6
FD_MIN_MASS = 1e-3
FD_RELATIVE_TOLERANCE = 1e-6
MAX_VERIFY_DIMENSION = 500


@dataclass(frozen=True)
class BregmanGenerator:
    """
    A strictly convex function on the simplex with its reduced gradient.

    :param name: Short identifier for logs and reports.
    :param phi: Maps an array of masses to a real value.
    :param gradient: Maps an array of masses to the length ``n - 1``
        reduced gradient.
    """

    name: str
    phi: Callable[[np.ndarray], float]
    gradient: Callable[[np.ndarray], np.ndarray]


def _neg_entropy(p: np.ndarray) -> float:
    return -float(entr(p).sum())


def _neg_entropy_gradient(s: np.ndarray) -> np.ndarray:
    logs = np.log(s)
    return logs[:-1] - logs[-1]


def _neg_extropy(p: np.ndarray) -> float:
    return -float(entr(1.0 - p).sum())


def _neg_extropy_gradient(s: np.ndarray) -> np.ndarray:
    logs = np.log1p(-s)
    return -logs[:-1] + logs[-1]


def _half_squared_norm(p: np.ndarray) -> float:
    return 0.5 * float(np.dot(p, p))


def _half_squared_norm_gradient(s: np.ndarray) -> np.ndarray:
    return s[:-1] - s[-1]


NEG_ENTROPY = BregmanGenerator("neg-entropy", _neg_entropy, _neg_entropy_gradient)
NEG_EXTROPY = BregmanGenerator("neg-extropy", _neg_extropy, _neg_extropy_gradient)
HALF_SQUARED_NORM = BregmanGenerator(
    "half-squared-norm", _half_squared_norm, _half_squared_norm_gradient
)


def bregman(gen: BregmanGenerator, p: ProbabilityVector, s: ProbabilityVector) -> float:
    """
    Compute ``phi(p) - phi(s) - <grad phi(s), p - s>``.

    The inner product runs over the ``n - 1`` free coordinates. With
    ``NEG_ENTROPY`` this is the relative entropy ``D(p || s)`` and with
    ``NEG_EXTROPY`` the complementary divergence ``D^c(p || s)``.

    :param gen: The generator.
    :param p: The first pmf.
    :param s: The reference pmf, strictly inside the simplex.
    :return: The divergence, non-negative for a valid generator.
    :raises DivergenceException: If the dimensions differ or ``s`` lies on
        the simplex boundary.
    """
    if p.n != s.n:
        raise DivergenceException(f"Dimension mismatch: {p.n} != {s.n}")
    if not s.is_interior():
        raise DivergenceException(
            f"Bregman divergence needs an interior reference pmf, got {s}"
        )
    grad = np.asarray(gen.gradient(s.masses), dtype=float)
    diff = p.masses[:-1] - s.masses[:-1]
    return gen.phi(p.masses) - gen.phi(s.masses) - float(np.dot(grad, diff))


def _interior_sample(n: int, rng: np.random.Generator) -> np.ndarray:
    # Mixing with uniform keeps every mass at least 0.5 / n
    return 0.5 * rng.dirichlet(np.ones(n)) + 0.5 / n


def verify_generator(
    gen: BregmanGenerator, n: int, samples: int, rng: np.random.Generator
) -> float:
    """
    Spot-check a generator on random interior pmfs.

    Each sample pair must satisfy the strict midpoint convexity
    inequality, and the reduced gradient must match central finite
    differences of ``phi`` (step ``FD_STEP``) within
    ``FD_RELATIVE_TOLERANCE``. Errors are relative to ``max(|g|, 1)``.

    :param gen: The generator to check.
    :param n: The dimension, between 2 and 500 so that every sampled mass
        is at least ``FD_MIN_MASS``.
    :param samples: The number of random pairs.
    :param rng: Source of randomness.
    :return: The worst relative gradient error seen.
    :raises DivergenceException: If a check fails or ``n`` is out of range.
    """
    if not 2 <= n <= MAX_VERIFY_DIMENSION:
        raise DivergenceException(f"Generator checks need 2 <= n <= 500, got {n}")
    worst = 0.0
    for _ in range(samples):
        p = _interior_sample(n, rng)
        s = _interior_sample(n, rng)
        midpoint = gen.phi(0.5 * (p + s))
        chord = 0.5 * (gen.phi(p) + gen.phi(s))
        if not midpoint < chord:
            raise DivergenceException(
                f"Generator {gen.name} fails midpoint convexity: "
                + f"{midpoint!r} >= {chord!r}"
            )
        grad = np.asarray(gen.gradient(s), dtype=float)
        if grad.shape != (n - 1,):
            raise DivergenceException(
                f"Generator {gen.name} gradient has shape {grad.shape}, "
                + f"expected ({n - 1},)"
            )
        for j in range(n - 1):
            step = np.zeros(n)
            step[j] = FD_STEP
            step[-1] = -FD_STEP
            fd = (gen.phi(s + step) - gen.phi(s - step)) / (2 * FD_STEP)
            error = abs(fd - grad[j]) / max(abs(grad[j]), 1.0)
            worst = max(worst, error)
            if error > FD_RELATIVE_TOLERANCE:
                raise DivergenceException(
                    f"Generator {gen.name} gradient component {j} is {grad[j]!r}, "
                    + f"finite difference gives {fd!r}"
                )
    logger.debug(f"Generator {gen.name} verified on {samples} pairs, worst error {worst}")
    return worst
