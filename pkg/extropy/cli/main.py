"""
Command-line entry point.

Exit codes: 0 on success (infinite scores included), 2 when an input fails
validation, 3 when a file cannot be read or written.
"""
import argparse
import logging
import sys
from typing import List, Optional

from extropy import __version__, settings
from extropy.cli.commands import COMMANDS, DIVERGENCE_MODES
from extropy.cli.forecast_file import FORMATS, ForecastFileException
from extropy.cli.formatting import OUTPUT_FORMATS
from extropy.continuum.density_grid import DensityGridException
from extropy.divergence.extended import DivergenceException
from extropy.scoring.structs import ScoringException
from extropy.simplex.probability_vector import SimplexException
from extropy.utils import ParameterException

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3

VALIDATION_ERRORS = (
    SimplexException,
    DivergenceException,
    DensityGridException,
    ScoringException,
    ForecastFileException,
    ParameterException,
    ValueError,
)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _add_pmf_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("pmf", nargs="?", help="Comma-separated masses, e.g. 1/4,1/2,1/4")
    parser.add_argument("--pmf-file", help="Read the masses from a file instead")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default="json")
    common.add_argument("--output", help="Write to this file instead of stdout")
    common.add_argument("--log-level", choices=LOG_LEVELS, help="Defaults to EXTROPY_LOG_LEVEL")

    parser = argparse.ArgumentParser(
        prog="extropy", description="Entropy, extropy and forecast scoring tools."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    measure = subparsers.add_parser(
        "measure", parents=[common], help="Entropy, extropy and related measures of a pmf"
    )
    _add_pmf_arguments(measure)

    diverge = subparsers.add_parser(
        "diverge", parents=[common], help="Divergences between two pmfs"
    )
    diverge.add_argument("p", help="First pmf, comma-separated")
    diverge.add_argument("s", help="Second pmf, comma-separated")
    diverge.add_argument("--mode", choices=DIVERGENCE_MODES, default="all")

    score = subparsers.add_parser(
        "score", parents=[common], help="Score forecast files, one per forecaster"
    )
    score.add_argument("files", nargs="+", help="Forecast files in CSV or JSON")
    score.add_argument("--rules", help="Comma-separated rule names, e.g. log,totallog")
    score.add_argument(
        "--input-format", choices=FORMATS, help="Forecast file format; inferred from suffix"
    )
    score.add_argument(
        "--parallel", action="store_true", default=None, help="Score on ray actors"
    )
    score.add_argument("--num-actors", type=int, help="Defaults to EXTROPY_NUM_ACTORS")

    contours = subparsers.add_parser(
        "contours", parents=[common], help="Entropy and extropy on the 3-outcome lattice"
    )
    contours.add_argument("--resolution", type=int, default=200, help="Lattice denominator M")
    contours.add_argument("--level", type=float, help="Entropy level to report")
    contours.add_argument("--level-tolerance", type=float)

    contract = subparsers.add_parser(
        "contract", parents=[common], help="Iterate the complement map"
    )
    _add_pmf_arguments(contract)
    contract.add_argument("--steps", type=int, default=5)

    continuum = subparsers.add_parser(
        "continuum", parents=[common], help="Differential measures and their discrete limits"
    )
    continuum.add_argument("density", help="Density file, two-column text or JSON")
    continuum.add_argument("--reference", help="Reference density; uniform if omitted")
    continuum.add_argument("--grid", help="Comma-separated node counts, e.g. 11,101,1001")
    return parser


def write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.debug(f"Wrote {len(text)} characters to {path}")


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    level = args.log_level if args.log_level else settings.LOG_LEVEL
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        output = COMMANDS[args.command](args)
        write_output(output.render(args.format), args.output)
    except VALIDATION_ERRORS as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_VALIDATION
    except OSError as e:
        logger.error(f"I/O failure: {e}")
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
