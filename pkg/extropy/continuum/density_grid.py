import logging
import math
from pathlib import Path
from typing import Callable, List, Optional, Union

import msgspec
import numpy as np
from scipy.integrate import trapezoid

from extropy import settings
from extropy.structs import STRUCT_KWARGS, msgspec_enc

logger = logging.getLogger(__name__)

# Relative tolerance on node spacing when reading density files
SPACING_TOLERANCE = 1e-6


class DensityGridException(Exception):
    """Basic exception handling for tabulated densities."""

    def __init__(self, msg):
        super().__init__(msg)


class DensityFile(msgspec.Struct, **STRUCT_KWARGS):
    """JSON layout of a tabulated density."""

    x: List[float]
    f: List[float]


class DensityGrid:
    """
    A density tabulated at ``N`` uniformly spaced nodes on ``[lower, upper]``.

    The node spacing is ``step = (upper - lower) / (N - 1)``. Values are
    validated on construction: they must be finite and non-negative, and
    their composite-trapezoid integral must lie within
    ``normalization_tolerance`` of 1.

    :param lower: Left end of the support interval.
    :param upper: Right end of the support interval.
    :param values: Density values at the nodes, in order.
    :param normalization_tolerance: Allowed deviation of the integral from
        1. Defaults to ``settings.NORMALIZATION_TOLERANCE``.
    :raises DensityGridException: If any of the conditions above fails.
    """

    __slots__ = ("_lower", "_upper", "_values", "_tolerance")

    def __init__(
        self,
        lower: float,
        upper: float,
        values: Union[List[float], np.ndarray],
        normalization_tolerance: Optional[float] = None,
    ):
        if normalization_tolerance is None:
            normalization_tolerance = settings.NORMALIZATION_TOLERANCE
        lower, upper = float(lower), float(upper)
        if not (math.isfinite(lower) and math.isfinite(upper)) or upper <= lower:
            raise DensityGridException(
                f"Interval [{lower}, {upper}] must be finite with upper > lower."
            )
        f = np.array(values, dtype=float).ravel()
        if f.size < 2:
            raise DensityGridException(f"A density grid needs at least 2 nodes, got {f.size}")
        if not np.all(np.isfinite(f)) or np.any(f < 0):
            raise DensityGridException("Density values must be finite and non-negative.")
        step = (upper - lower) / (f.size - 1)
        total = float(trapezoid(f, dx=step))
        if abs(total - 1.0) > normalization_tolerance:
            raise DensityGridException(
                f"Density integrates to {total!r}, which is not within "
                + f"{normalization_tolerance} of 1."
            )
        f.setflags(write=False)
        self._lower = lower
        self._upper = upper
        self._values = f
        self._tolerance = normalization_tolerance

    @classmethod
    def uniform(cls, lower: float, upper: float, n: int) -> "DensityGrid":
        """The uniform density on ``[lower, upper]`` at ``n`` nodes."""
        if upper <= lower:
            raise DensityGridException(
                f"Interval [{lower}, {upper}] must have upper > lower."
            )
        return cls(lower, upper, np.full(n, 1.0 / (upper - lower)))

    @classmethod
    def from_function(
        cls,
        func: Callable[[np.ndarray], np.ndarray],
        lower: float,
        upper: float,
        n: int,
        normalize: bool = False,
    ) -> "DensityGrid":
        """
        Tabulate a vectorized function at ``n`` uniform nodes.

        :param func: Maps an array of nodes to density values.
        :param lower: Left end of the interval.
        :param upper: Right end of the interval.
        :param n: Number of nodes, at least 2.
        :param normalize: If True, divide the values by their quadrature
            so that the grid integrates to 1 up to rounding.
        :return: The tabulated density.
        :raises DensityGridException: If the result is not a valid grid.
        """
        if n < 2:
            raise DensityGridException(f"A density grid needs at least 2 nodes, got {n}")
        nodes = np.linspace(lower, upper, n)
        values = np.broadcast_to(np.asarray(func(nodes), dtype=float), nodes.shape)
        if normalize:
            total = float(trapezoid(values, dx=(upper - lower) / (n - 1)))
            if not total > 0:
                raise DensityGridException("Cannot normalize a density with zero integral.")
            logger.debug(f"Normalizing tabulated density by factor {1.0 / total!r}")
            values = values / total
        return cls(lower, upper, values)

    @property
    def lower(self) -> float:
        return self._lower

    @property
    def upper(self) -> float:
        return self._upper

    @property
    def values(self) -> np.ndarray:
        """Read-only array of the density values."""
        return self._values

    @property
    def size(self) -> int:
        return self._values.size

    @property
    def step(self) -> float:
        return (self._upper - self._lower) / (self.size - 1)

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self._lower, self._upper, self.size)

    @property
    def normalization_tolerance(self) -> float:
        return self._tolerance

    def resample(self, n: int) -> "DensityGrid":
        """
        Linearly interpolate onto ``n`` uniform nodes of the same interval.

        The interpolated values are renormalized so that the new grid
        integrates to 1.

        :param n: The new number of nodes, at least 2.
        :return: The resampled grid.
        """
        nodes = self.nodes
        return DensityGrid.from_function(
            lambda x: np.interp(x, nodes, self._values),
            self._lower,
            self._upper,
            n,
            normalize=True,
        )

    def check_same_support(self, other: "DensityGrid") -> None:
        """
        :raises DensityGridException: If the grids differ in interval or size.
        """
        if (
            self.size != other.size
            or not math.isclose(self._lower, other.lower, rel_tol=1e-12, abs_tol=1e-12)
            or not math.isclose(self._upper, other.upper, rel_tol=1e-12, abs_tol=1e-12)
        ):
            raise DensityGridException(
                f"Grid mismatch: [{self._lower}, {self._upper}] with {self.size} nodes "
                + f"vs [{other.lower}, {other.upper}] with {other.size} nodes"
            )

    def __repr__(self) -> str:
        return f"DensityGrid(lower={self._lower}, upper={self._upper}, size={self.size})"


def _grid_from_columns(x: np.ndarray, f: np.ndarray, source: str) -> DensityGrid:
    if x.size != f.size:
        raise DensityGridException(
            f"{source}: {x.size} nodes but {f.size} density values"
        )
    if x.size < 2:
        raise DensityGridException(f"{source}: a density grid needs at least 2 nodes")
    spacing = np.diff(x)
    if np.any(spacing <= 0) or not np.allclose(
        spacing, spacing.mean(), rtol=SPACING_TOLERANCE, atol=0
    ):
        raise DensityGridException(f"{source}: nodes must be increasing and uniformly spaced")
    return DensityGrid(x[0], x[-1], f)


def load_density(path: Union[str, Path]) -> DensityGrid:
    """
    Read a tabulated density.

    Files ending in ``.json`` hold ``{"x": [...], "f": [...]}``. Any other
    file holds two whitespace-separated columns ``x f(x)`` per line, with
    ``#`` starting a comment.

    :param path: The file to read.
    :return: The density grid.
    :raises DensityGridException: If the file content is malformed.
    :raises OSError: If the file cannot be read.
    """
    path = Path(path)
    if path.suffix.lower() == ".json":
        try:
            content = msgspec.json.decode(path.read_bytes(), type=DensityFile)
        except msgspec.DecodeError as e:
            raise DensityGridException(f"{path}: {e}") from e
        x = np.array(content.x, dtype=float)
        f = np.array(content.f, dtype=float)
    else:
        try:
            table = np.loadtxt(path, comments="#", ndmin=2)
        except ValueError as e:
            raise DensityGridException(f"{path}: {e}") from e
        if table.shape[1] != 2:
            raise DensityGridException(
                f"{path}: expected 2 columns, found {table.shape[1]}"
            )
        x, f = table[:, 0], table[:, 1]
    logger.debug(f"Read {x.size} density nodes from {path}")
    return _grid_from_columns(x, f, str(path))


def save_density(grid: DensityGrid, path: Union[str, Path]) -> None:
    """Write a density grid in the format chosen by the file suffix."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        content = DensityFile(x=grid.nodes.tolist(), f=grid.values.tolist())
        path.write_bytes(msgspec_enc.encode(content))
    else:
        np.savetxt(
            path, np.column_stack((grid.nodes, grid.values)), fmt="%.17g", header="x f(x)"
        )
