"""
Deterministic rendering of command results.

JSON numbers are rounded to ``settings.SIGNIFICANT_DIGITS`` significant
digits and infinities become the strings ``"inf"`` and ``"-inf"``. Tables
are written as TSV or CSV with the same number of significant digits.
Dictionary keys keep their insertion order, so identical inputs give
identical bytes.
"""
import csv
import io
import math
from typing import Any, List, Optional, Sequence

import msgspec

from extropy import settings
from extropy.structs import to_builtins

OUTPUT_FORMATS = ("json", "tsv", "csv")


def round_significant(x: float, digits: Optional[int] = None) -> float:
    """Round a finite float to ``digits`` significant digits."""
    if digits is None:
        digits = settings.SIGNIFICANT_DIGITS
    if not math.isfinite(x):
        return x
    rounded = float(f"{x:.{digits}g}")
    # No negative zeros in output
    return 0.0 if rounded == 0 else rounded


def _jsonable(obj: Any, digits: int) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if math.isnan(obj):
            return "nan"
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return round_significant(obj, digits)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v, digits) for v in obj]
    return obj


def render_json(payload: Any) -> str:
    """Render a payload of structs, dicts, lists and numbers as one JSON line."""
    data = _jsonable(to_builtins(payload), settings.SIGNIFICANT_DIGITS)
    return msgspec.json.encode(data).decode("utf-8") + "\n"


def format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.*g" % (settings.SIGNIFICANT_DIGITS, value)
    if isinstance(value, (list, tuple)):
        return ",".join(format_cell(v) for v in value)
    return str(value)


def render_table(header: Sequence[str], rows: Sequence[Sequence[Any]], fmt: str) -> str:
    """
    Render a table as TSV or CSV with LF line endings.

    :param header: Column names.
    :param rows: Row values; floats use ``%g`` formatting, booleans ``true``/``false``.
    :param fmt: ``tsv`` or ``csv``.
    :return: The table text.
    """
    buffer = io.StringIO()
    writer = csv.writer(
        buffer, delimiter="\t" if fmt == "tsv" else ",", lineterminator="\n"
    )
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])
    return buffer.getvalue()


class CommandOutput(msgspec.Struct):
    """
    Result of one subcommand: a JSON payload and its tabular view.

    :param payload: Nested object emitted with ``--format json``.
    :param header: Column names of the tabular view.
    :param rows: Rows of the tabular view.
    """

    payload: Any
    header: List[str]
    rows: List[List[Any]]

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return render_json(self.payload)
        return render_table(self.header, self.rows, fmt)


def key_value_rows(payload: dict) -> List[List[Any]]:
    """Flatten a dict of scalars and lists into ``[key, value]`` rows."""
    rows = []
    for key, value in payload.items():
        if isinstance(value, dict):
            for sub_key, sub_value in value.items():
                rows.append([f"{key}.{sub_key}", sub_value])
        else:
            rows.append([key, value])
    return rows
