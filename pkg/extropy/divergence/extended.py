import logging
import math
from typing import Optional

import msgspec

from extropy import settings
from extropy.structs import STRUCT_KWARGS

logger = logging.getLogger(__name__)


class DivergenceException(Exception):
    """Basic exception handling for divergence computations."""

    def __init__(self, msg):
        super().__init__(msg)


class ExtendedNonNegative(msgspec.Struct, frozen=True, **STRUCT_KWARGS):
    """
    A value in [0, inf], in nats.

    :param value: The non-negative value, or ``math.inf``.
    :param clamped: True if a rounding residue was replaced by exactly 0.
    """

    value: float
    clamped: bool = False

    @property
    def finite(self) -> bool:
        return math.isfinite(self.value)

    def __float__(self) -> float:
        return self.value

    @classmethod
    def from_value(
        cls, x: float, tolerance: Optional[float] = None
    ) -> "ExtendedNonNegative":
        """
        Wrap a computed divergence, absorbing rounding near zero.

        :param x: The computed value.
        :param tolerance: Values with ``|x| <= tolerance`` become exactly 0.
            Defaults to ``settings.CLAMP_TOLERANCE``.
        :return: The wrapped value.
        :raises DivergenceException: If ``x`` is NaN or below ``-tolerance``.
        """
        if tolerance is None:
            tolerance = settings.CLAMP_TOLERANCE
        x = float(x)
        if math.isnan(x):
            raise DivergenceException("Divergence evaluated to NaN.")
        if x == math.inf:
            return INFINITE
        if x < -tolerance:
            raise DivergenceException(
                f"Divergence {x!r} is negative beyond tolerance {tolerance}."
            )
        if abs(x) <= tolerance:
            if x != 0.0:
                logger.debug(f"Clamping divergence {x!r} to zero")
                return cls(value=0.0, clamped=True)
            return cls(value=0.0)
        return cls(value=x)


INFINITE = ExtendedNonNegative(value=math.inf)
