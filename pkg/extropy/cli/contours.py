"""
Entropy and extropy over the barycentric lattice of the 3-outcome simplex.

The rows are raw data for external contour plotting: equal-entropy and
equal-extropy curves over the triangle, and the points near a chosen
entropy level.
"""
import logging
from typing import List

import msgspec

from extropy.scoring.rules import barycentric_lattice
from extropy.simplex.measures import entropy, extropy
from extropy.structs import STRUCT_KWARGS
from extropy.utils import ParameterException

logger = logging.getLogger(__name__)


class ContourRow(msgspec.Struct, frozen=True, **STRUCT_KWARGS):
    p1: float
    p2: float
    p3: float
    entropy: float
    extropy: float


class ContourGrid(msgspec.Struct, frozen=True, **STRUCT_KWARGS):
    """
    All pmfs over 3 outcomes with masses ``k / resolution``.

    :param resolution: The lattice denominator ``M``.
    :param rows: One row per lattice point, by decreasing ``p1`` then ``p2``.
    """

    resolution: int
    rows: List[ContourRow]


def build_contour_grid(resolution: int) -> ContourGrid:
    """
    Tabulate entropy and extropy on the barycentric lattice.

    :param resolution: The lattice denominator ``M``, at least 2.
    :return: The ``(M + 1)(M + 2) / 2`` rows.
    :raises ParameterException: If ``M < 2``.
    """
    if resolution < 2:
        raise ParameterException(f"Contour resolution must be at least 2, got {resolution}")
    rows = []
    for pv in barycentric_lattice(3, resolution):
        p1, p2, p3 = pv.tolist()
        rows.append(ContourRow(p1=p1, p2=p2, p3=p3, entropy=entropy(pv), extropy=extropy(pv)))
    logger.debug(f"Contour grid at M={resolution} has {len(rows)} rows")
    return ContourGrid(resolution=resolution, rows=rows)


def level_rows(grid: ContourGrid, level: float, tolerance: float) -> List[ContourRow]:
    """Rows whose entropy lies within ``tolerance`` of ``level``."""
    return [row for row in grid.rows if abs(row.entropy - level) <= tolerance]


def max_extropy_row(grid: ContourGrid) -> ContourRow:
    """The first row of largest extropy, the lattice point nearest the center."""
    return max(grid.rows, key=lambda row: row.extropy)
