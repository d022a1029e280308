import logging
from pathlib import Path

from environs import Env

from extropy.utils import load_from_yaml

logger = logging.getLogger(__name__)
env = Env()

logger.debug("Initializing extropy settings")
CONFIG_DIR = Path(__file__).parent.resolve() / "configs"
DEFAULTS_FILE = env.path("EXTROPY_DEFAULTS_FILE", default=CONFIG_DIR / "defaults.yml")

if not DEFAULTS_FILE.is_file():
    logger.warning(f"Defaults file {DEFAULTS_FILE} not found, using packaged defaults.")
    DEFAULTS_FILE = CONFIG_DIR / "defaults.yml"
_defaults = load_from_yaml(DEFAULTS_FILE)
logger.debug(f"EXTROPY: DEFAULTS_FILE: {DEFAULTS_FILE}")

# Mass-sum tolerance for points on the unit simplex
SIMPLEX_TOLERANCE = env.float(
    "EXTROPY_SIMPLEX_TOLERANCE", default=_defaults["simplex_tolerance"]
)
# Divergences within this distance of zero are reported as exactly zero
CLAMP_TOLERANCE = env.float(
    "EXTROPY_CLAMP_TOLERANCE", default=_defaults["clamp_tolerance"]
)
# Allowed deviation of a density grid's quadrature from 1
NORMALIZATION_TOLERANCE = env.float(
    "EXTROPY_NORMALIZATION_TOLERANCE", default=_defaults["normalization_tolerance"]
)
EUCLID_RELATIVE_GAP = env.float(
    "EXTROPY_EUCLID_RELATIVE_GAP", default=_defaults["euclid_relative_gap"]
)
SIGNIFICANT_DIGITS = env.int(
    "EXTROPY_SIGNIFICANT_DIGITS", default=_defaults["significant_digits"]
)
DEFAULT_RULES = env.list("EXTROPY_DEFAULT_RULES", default=_defaults["default_rules"])
DEFAULT_PROBE_GRID = env.list(
    "EXTROPY_DEFAULT_PROBE_GRID",
    default=_defaults["default_probe_grid"],
    subcast=int,
)
CONTOUR_LEVEL = env.float("EXTROPY_CONTOUR_LEVEL", default=_defaults["contour_level"])
CONTOUR_LEVEL_TOLERANCE = env.float(
    "EXTROPY_CONTOUR_LEVEL_TOLERANCE", default=_defaults["contour_level_tolerance"]
)
PARALLEL_SCORING = env.bool("EXTROPY_PARALLEL_SCORING", default=False)
NUM_ACTORS = env.int("EXTROPY_NUM_ACTORS", default=_defaults["num_actors"])
LOG_LEVEL = env.log_level("EXTROPY_LOG_LEVEL", default=logging.WARNING)
