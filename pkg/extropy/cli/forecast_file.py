"""
Reading and writing forecast files.

CSV files start with the header ``id,p_1,...,p_n,outcome_index`` and hold
one record per row. JSON files hold
``{"n": n or null, "records": [{"id", "forecast", "outcome_index"}]}``.
Row numbers in error messages count the CSV header as row 1 and the
first JSON record as row 1.
"""
import csv
import io
import logging
from pathlib import Path
from typing import List, Optional, Union

import msgspec

from extropy.scoring.structs import ForecastRecord, ScoringException
from extropy.simplex.probability_vector import ProbabilityVector, SimplexException
from extropy.structs import STRUCT_KWARGS

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json")


class ForecastFileException(Exception):
    """Basic exception handling for malformed forecast files."""

    def __init__(self, msg):
        super().__init__(msg)


class ForecastEntry(msgspec.Struct, **STRUCT_KWARGS):
    id: str
    forecast: List[float]
    outcome_index: int


class ForecastDocument(msgspec.Struct, **STRUCT_KWARGS):
    records: List[ForecastEntry]
    n: Optional[int] = None


class ForecastFile(msgspec.Struct, **STRUCT_KWARGS):
    """
    Validated records read from, or to be written to, a forecast file.

    :param format: ``csv`` or ``json``.
    :param records: The records in file order.
    """

    format: str
    records: List[ForecastRecord]


def _format_from_path(path: Path, fmt: Optional[str]) -> str:
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "csv"
    if fmt not in FORMATS:
        raise ForecastFileException(f"Unknown forecast file format {fmt}, try: csv, json")
    return fmt


def _make_record(row: int, id: str, masses: List[float], outcome_index: int) -> ForecastRecord:
    try:
        return ForecastRecord(
            id=id, forecast=ProbabilityVector(masses), outcome_index=outcome_index
        )
    except (SimplexException, ScoringException) as e:
        raise ForecastFileException(f"Row {row}: {e}") from e


def _parse_csv(text: str) -> List[ForecastRecord]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        return []
    header = [cell.strip() for cell in rows[0]]
    n = len(header) - 2
    expected = ["id"] + [f"p_{i}" for i in range(1, n + 1)] + ["outcome_index"]
    if n < 1 or header != expected:
        raise ForecastFileException(
            "Row 1: header must be id,p_1,...,p_n,outcome_index, got " + ",".join(header)
        )
    records = []
    for number, cells in enumerate(rows[1:], start=2):
        if not cells or all(not c.strip() for c in cells):
            continue
        if len(cells) != n + 2:
            raise ForecastFileException(
                f"Row {number}: expected {n + 2} fields, found {len(cells)}"
            )
        try:
            masses = [float(c) for c in cells[1:-1]]
            outcome_index = int(cells[-1])
        except ValueError as e:
            raise ForecastFileException(f"Row {number}: {e}") from e
        records.append(_make_record(number, cells[0], masses, outcome_index))
    return records


def _parse_json(text: str) -> List[ForecastRecord]:
    try:
        document = msgspec.json.decode(text, type=ForecastDocument)
    except msgspec.DecodeError as e:
        raise ForecastFileException(f"Malformed forecast JSON: {e}") from e
    records = []
    for number, entry in enumerate(document.records, start=1):
        if document.n is not None and len(entry.forecast) != document.n:
            raise ForecastFileException(
                f"Row {number}: forecast has {len(entry.forecast)} masses, "
                + f"file declares n = {document.n}"
            )
        records.append(_make_record(number, entry.id, entry.forecast, entry.outcome_index))
    return records


def parse_forecasts(path: Union[str, Path], format: Optional[str] = None) -> ForecastFile:
    """
    Read and validate a forecast file.

    :param path: The file to read.
    :param format: ``csv`` or ``json``; inferred from the suffix if omitted.
    :return: The validated records. An empty file gives no records.
    :raises ForecastFileException: If a row is malformed, a forecast is
        not a pmf, or an outcome index is out of range.
    :raises OSError: If the file cannot be read.
    """
    path = Path(path)
    fmt = _format_from_path(path, format)
    text = path.read_text(encoding="utf-8")
    if not text.strip():
        logger.warning(f"Forecast file {path} is empty.")
        return ForecastFile(format=fmt, records=[])
    records = _parse_csv(text) if fmt == "csv" else _parse_json(text)
    if not records:
        logger.warning(f"Forecast file {path} holds no records.")
    logger.debug(f"Read {len(records)} records from {path}")
    return ForecastFile(format=fmt, records=records)


def serialize_forecasts(forecasts: ForecastFile, format: Optional[str] = None) -> str:
    """
    Write forecast records in the CSV or JSON layout.

    Masses are written with ``repr`` so that reading the text back gives
    exactly the same records.

    :param forecasts: The records to write.
    :param format: ``csv`` or ``json``; defaults to ``forecasts.format``.
    :return: The file content.
    :raises ForecastFileException: If CSV output is requested for records
        of different dimensions, or the format is unknown.
    """
    fmt = format or forecasts.format
    if fmt not in FORMATS:
        raise ForecastFileException(f"Unknown forecast file format {fmt}, try: csv, json")
    dims = {r.forecast.n for r in forecasts.records}
    if fmt == "json":
        document = ForecastDocument(
            n=dims.pop() if len(dims) == 1 else None,
            records=[
                ForecastEntry(id=r.id, forecast=r.forecast.tolist(), outcome_index=r.outcome_index)
                for r in forecasts.records
            ],
        )
        return msgspec.json.encode(document).decode("utf-8") + "\n"
    if len(dims) > 1:
        raise ForecastFileException(
            f"CSV needs one forecast dimension, records have {sorted(dims)}"
        )
    n = dims.pop() if dims else 1
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["id"] + [f"p_{i}" for i in range(1, n + 1)] + ["outcome_index"])
    for r in forecasts.records:
        writer.writerow([r.id] + [repr(m) for m in r.forecast.tolist()] + [r.outcome_index])
    return buffer.getvalue()
