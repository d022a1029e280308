"""
Differential entropy and extropy, and relative measures between densities.

Integrals are composite-trapezoid sums over the grid nodes, so discrete
and continuous quantities line up node for node. Grids larger than
``NUMEXPR_THRESHOLD`` evaluate their integrands with NumExpr.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Tuple, Union

import numexpr as ne
import numpy as np
from scipy.integrate import trapezoid
from scipy.special import entr, rel_entr, xlogy

from extropy.continuum import NUMEXPR_THRESHOLD
from extropy.continuum.density_grid import DensityGrid, DensityGridException
from extropy.divergence.extended import INFINITE, ExtendedNonNegative
from extropy.simplex.probability_vector import ProbabilityVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScalarKernel:
    """
    A strictly convex scalar function with its derivative.

    Both callables act elementwise on arrays of density values.
    """

    name: str
    function: Callable[[np.ndarray], np.ndarray]
    derivative: Callable[[np.ndarray], np.ndarray]


ENTROPY_KERNEL = ScalarKernel("x-log-x", lambda x: xlogy(x, x), lambda x: np.log(x) + 1.0)
EXTROPY_KERNEL = ScalarKernel("half-square", lambda x: 0.5 * x * x, lambda x: x)


def discretize(
    grid: DensityGrid, return_factor: bool = False
) -> Union[ProbabilityVector, Tuple[ProbabilityVector, float]]:
    """
    Turn a density grid into a pmf with masses ``f(x_i) * step``.

    The raw masses only sum to 1 approximately, so they are renormalized.

    :param grid: The density grid.
    :param return_factor: If True, also return the renormalization factor
        applied to the raw masses.
    :return: The pmf, or a tuple (pmf, factor).
    :raises DensityGridException: If every density value is zero.
    """
    raw = grid.values * grid.step
    total = float(raw.sum())
    if total <= 0:
        raise DensityGridException("Cannot discretize an all-zero density grid.")
    factor = 1.0 / total
    pv = ProbabilityVector(raw * factor)
    logger.debug(f"Discretized {grid} with renormalization factor {factor!r}")
    if return_factor:
        return pv, factor
    return pv


def differential_entropy(grid: DensityGrid) -> float:
    """
    Differential entropy ``h(f) = -integral(f log f)``, in nats.

    Nodes with ``f = 0`` contribute nothing. The result may be negative.
    """
    f = grid.values
    if f.size < NUMEXPR_THRESHOLD:
        integrand = entr(f)
    else:
        integrand = ne.evaluate("where(f > 0, -f * log(f), 0.0)")
    return float(trapezoid(integrand, dx=grid.step))


def differential_extropy(grid: DensityGrid) -> float:
    """
    Differential extropy ``j(f) = -integral(f^2) / 2``.

    This is minus half the expected density value, so it is never positive.
    """
    f = grid.values
    if f.size < NUMEXPR_THRESHOLD:
        integrand = f * f
    else:
        integrand = ne.evaluate("f * f")
    return -0.5 * float(trapezoid(integrand, dx=grid.step))


def relative_entropy_density(f: DensityGrid, g: DensityGrid) -> ExtendedNonNegative:
    """
    Relative entropy ``d(f || g) = integral(f log(f / g))``.

    :param f: The first density.
    :param g: The reference density, on the same nodes.
    :return: The divergence, infinite iff ``f > 0`` at a node where
        ``g = 0``. Quadrature residues down to minus twice the
        normalization tolerance are clamped to 0.
    :raises DensityGridException: If the grids differ in interval or size.
    """
    f.check_same_support(g)
    fv, gv = f.values, g.values
    if np.any((fv > 0) & (gv == 0)):
        return INFINITE
    if fv.size < NUMEXPR_THRESHOLD:
        integrand = rel_entr(fv, gv)
    else:
        integrand = ne.evaluate("where(fv > 0, fv * log(fv / gv), 0.0)")
    value = float(trapezoid(integrand, dx=f.step))
    return ExtendedNonNegative.from_value(
        value, f.normalization_tolerance + g.normalization_tolerance
    )


def relative_extropy_density(f: DensityGrid, g: DensityGrid) -> float:
    """
    Relative extropy ``d^c(f || g) = integral((f - g)^2) / 2``.

    :raises DensityGridException: If the grids differ in interval or size.
    """
    f.check_same_support(g)
    fv, gv = f.values, g.values
    if fv.size < NUMEXPR_THRESHOLD:
        diff = fv - gv
        integrand = diff * diff
    else:
        integrand = ne.evaluate("(fv - gv) ** 2")
    return 0.5 * float(trapezoid(integrand, dx=f.step))


def bregman_density(kernel: ScalarKernel, f: DensityGrid, g: DensityGrid) -> float:
    """
    Integrate the pointwise Bregman integrand
    ``s(f) - s(g) - s'(g) (f - g)`` of a scalar kernel.

    With ``ENTROPY_KERNEL`` this equals :func:`relative_entropy_density`
    plus ``integral(g) - integral(f)``, so the two agree when both grids
    integrate to the same mass. With ``EXTROPY_KERNEL`` it equals
    :func:`relative_extropy_density`.

    :param kernel: The scalar kernel.
    :param f: The first density.
    :param g: The reference density, on the same nodes.
    :return: The integral, non-negative up to quadrature error.
    :raises DensityGridException: If the grids differ, or the integrand is
        undefined at a node where ``f != g``.
    """
    f.check_same_support(g)
    fv, gv = f.values, g.values
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        integrand = (
            kernel.function(fv) - kernel.function(gv) - kernel.derivative(gv) * (fv - gv)
        )
    integrand = np.where(fv == gv, 0.0, integrand)
    bad = ~np.isfinite(integrand)
    if np.any(bad):
        node = int(np.argmax(bad))
        raise DensityGridException(
            f"Kernel {kernel.name} is undefined at node {node} "
            + f"(f = {fv[node]!r}, g = {gv[node]!r})"
        )
    return float(trapezoid(integrand, dx=f.step))
