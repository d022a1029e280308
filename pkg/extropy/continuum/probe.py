import logging
import math
from typing import List, Optional, Sequence

import msgspec

from extropy.continuum.density_grid import DensityGrid, DensityGridException
from extropy.continuum.measures import (
    differential_entropy,
    differential_extropy,
    discretize,
    relative_extropy_density,
)
from extropy.divergence.relative import complementary_divergence
from extropy.simplex.measures import entropy, extropy
from extropy.structs import STRUCT_KWARGS

logger = logging.getLogger(__name__)


class ProbeTargets(msgspec.Struct, frozen=True, **STRUCT_KWARGS):
    """Limits the discrete probes are compared against."""

    entropy: float
    extropy: float
    relative_extropy: float


class ProbeRow(msgspec.Struct, frozen=True, **STRUCT_KWARGS):
    """
    Discretization-limit probes at one grid size.

    :param n: Number of grid nodes.
    :param step: Node spacing.
    :param entropy_value: ``H(p) + log(step)``.
    :param extropy_value: ``(J(p) - 1) / step``.
    :param relative_extropy_value: ``D^c(p || s) / step``.
    """

    n: int
    step: float
    entropy_value: float
    entropy_target: float
    entropy_error: float
    extropy_value: float
    extropy_target: float
    extropy_error: float
    relative_extropy_value: float
    relative_extropy_target: float
    relative_extropy_error: float


def convergence_probe(
    densities: Sequence[DensityGrid],
    references: Sequence[DensityGrid],
    targets: Optional[ProbeTargets] = None,
) -> List[ProbeRow]:
    """
    Compare discrete measures of discretized densities with their limits.

    For each grid size ``N`` with spacing ``step``, the density ``f`` and
    reference ``g`` are discretized to ``p`` and ``s`` and three probes
    are reported: ``H(p) + log(step)`` against ``h(f)``,
    ``(J(p) - 1) / step`` against ``j(f)``, and ``D^c(p || s) / step``
    against ``d^c(f || g)``. The errors shrink like ``step``.

    :param densities: The same density tabulated at strictly increasing
        node counts.
    :param references: The reference density on the same grids.
    :param targets: Explicit limits. When omitted the differential values
        of the finest grid pair are used.
    :return: One row per grid size, in the input order.
    :raises DensityGridException: If fewer than 2 grids are given, the node
        counts are not increasing, or a density and its reference differ
        in interval or size.
    """
    if len(densities) < 2:
        raise DensityGridException(
            f"A convergence probe needs at least 2 grids, got {len(densities)}"
        )
    if len(references) != len(densities):
        raise DensityGridException(
            f"Got {len(densities)} densities but {len(references)} references"
        )
    sizes = [grid.size for grid in densities]
    if any(a >= b for a, b in zip(sizes, sizes[1:])):
        raise DensityGridException(f"Grid sizes must be strictly increasing, got {sizes}")
    for f, g in zip(densities, references):
        f.check_same_support(g)

    if targets is None:
        finest, finest_reference = densities[-1], references[-1]
        targets = ProbeTargets(
            entropy=differential_entropy(finest),
            extropy=differential_extropy(finest),
            relative_extropy=relative_extropy_density(finest, finest_reference),
        )

    rows = []
    for f, g in zip(densities, references):
        step = f.step
        p = discretize(f)
        s = discretize(g)
        h_value = entropy(p) + math.log(step)
        j_value = (extropy(p) - 1.0) / step
        dc_value = complementary_divergence(p, s).value / step
        row = ProbeRow(
            n=f.size,
            step=step,
            entropy_value=h_value,
            entropy_target=targets.entropy,
            entropy_error=abs(h_value - targets.entropy),
            extropy_value=j_value,
            extropy_target=targets.extropy,
            extropy_error=abs(j_value - targets.extropy),
            relative_extropy_value=dc_value,
            relative_extropy_target=targets.relative_extropy,
            relative_extropy_error=abs(dc_value - targets.relative_extropy),
        )
        logger.debug(f"Probe row: {row}")
        rows.append(row)
    return rows
