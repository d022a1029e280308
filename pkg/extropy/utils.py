import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, List

from ruamel.yaml import YAML

logger = logging.getLogger(__name__)


class ParameterException(Exception):
    """Basic exception handling for parameter-related problems."""

    def __init__(self, msg):
        super().__init__(msg)


def load_from_yaml(fname: Path) -> Any:
    """Load a single YAML document with the safe loader."""
    yaml = YAML(typ="safe")
    try:
        return yaml.load(Path(fname))
    except Exception as e:
        logger.exception(f"Unable to load YAML file {fname}")
        raise e


def list_to_string(a_list) -> str:
    string_list = [str(i) for i in a_list]
    return ",".join(string_list)


def string_to_int_list(value: str) -> List[int]:
    """
    Parse a comma-separated list of integers, e.g. ``"11,101,1001"``.

    :param value: The comma-separated string.
    :return: The parsed integers, in the order given.
    :raises ParameterException: If any entry is not an integer.
    """
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise ParameterException(f"Expected comma-separated integers, got {value!r}")


def string_to_float_list(value: str) -> List[float]:
    """
    Parse a comma-separated list of real numbers.

    Entries may be decimals (``0.25``) or fractions (``1/4``), so that
    exact rational pmfs such as ``1/3,1/3,1/3`` can be typed directly.

    :param value: The comma-separated string.
    :return: The parsed values as floats.
    :raises ParameterException: If any entry cannot be parsed.
    """
    values = []
    for token in value.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(float(Fraction(token)))
        except (ValueError, ZeroDivisionError):
            raise ParameterException(f"Unable to parse {token!r} as a number.")
    if not values:
        raise ParameterException("No values given.")
    return values
