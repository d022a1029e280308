import logging
from typing import List, Optional

import msgspec

from extropy.simplex.complement import iterate_complement
from extropy.simplex.probability_vector import ProbabilityVector, sup_distance, uniform
from extropy.structs import STRUCT_KWARGS

logger = logging.getLogger(__name__)


class TrajectoryStep(msgspec.Struct, frozen=True, **STRUCT_KWARGS):
    """
    One point of a complement-map trajectory.

    :param step: Number of complement steps applied.
    :param pmf: The pmf after ``step`` steps.
    :param sup_distance: Sup-norm distance to the uniform pmf.
    :param ratio: Distance divided by the previous step's distance; absent
        at step 0 and when the previous distance is 0.
    """

    step: int
    pmf: List[float]
    sup_distance: float
    ratio: Optional[float] = None


def build_trajectory(pv: ProbabilityVector, steps: int) -> List[TrajectoryStep]:
    """
    Follow the complement map from ``pv`` for ``steps`` steps.

    For ``n >= 3`` each ratio is ``1 / (n - 1)``; for ``n = 2`` the map
    swaps the masses and every ratio is 1.
    """
    center = uniform(pv.n)
    result = []
    previous = None
    for k, point in enumerate(iterate_complement(pv, steps)):
        distance = sup_distance(point, center)
        ratio = distance / previous if previous else None
        result.append(
            TrajectoryStep(step=k, pmf=point.tolist(), sup_distance=distance, ratio=ratio)
        )
        previous = distance
    return result
