"""A recursive descent parser for JSON reports."""

from typing import Any, List, Optional, Sized, Tuple

from . import Parser
from ..config import Config
from ..exceptions import ReportFormatError
from ..models.common import Json
from ..models.reports import Document, Row


def check_dict(d: Any) -> None:
    if not isinstance(d, dict):
        raise ReportFormatError(f"{d} is not a dict")


def check_list(_list: Any) -> None:
    if not isinstance(_list, list):
        raise ReportFormatError(f"{_list} is not a list")


def check_str(s: Any) -> None:
    if not isinstance(s, str):
        raise ReportFormatError(f"{s} is not a str")


def check_key(observed: str, expected: str) -> None:
    if observed != expected:
        raise ReportFormatError(f"{observed} != {expected}")


def check_empty(i: Sized) -> None:
    if len(i) > 0:
        raise ReportFormatError(f"{i} is not empty")


def check_scalar(value: Any) -> None:
    # NOTE: floats never appear; Monte Carlo fields are decimal strings.
    if value is not None and not isinstance(value, (str, int, bool)):
        raise ReportFormatError(f"{value!r} is not a report scalar")


def schema_version(_schema_version: Any) -> str:
    check_str(_schema_version)
    if _schema_version != Config.SCHEMA_VERSION:
        raise ReportFormatError(f"unsupported schema_version: {_schema_version}")
    return _schema_version


def command(_command: Any) -> str:
    check_str(_command)
    if _command not in Config.COMMANDS:
        raise ReportFormatError(f"unknown command: {_command}")
    return _command


def row(_row: Json, columns: Optional[Tuple[str, ...]]) -> Row:
    check_dict(_row)
    for key, value in _row.items():
        check_str(key)
        check_scalar(value)
    if columns is not None and tuple(_row) != columns:
        raise ReportFormatError(f"{tuple(_row)} != {columns}")
    return dict(_row)


def rows(_rows: List) -> Tuple[Tuple[str, ...], List[Row]]:
    check_list(_rows)
    columns: Optional[Tuple[str, ...]] = None
    parsed: List[Row] = []

    # NOTE: pop in order of appearance, so that we preserve the row order.
    while len(_rows) > 0:
        _row = row(_rows.pop(0), columns)
        if columns is None:
            columns = tuple(_row)
        parsed.append(_row)

    return columns or (), parsed


def summary(_summary: Json) -> Json:
    check_dict(_summary)
    for key, value in _summary.items():
        check_str(key)
        check_scalar(value)
    return dict(_summary)


def document(d: Json) -> Document:
    check_dict(d)

    _summary = None
    if "summary" in d:
        k, _summary = d.popitem()
        check_key(k, "summary")
        _summary = summary(_summary)

    k, _rows = d.popitem()
    check_key(k, "rows")
    columns, _rows = rows(_rows)

    k, _command = d.popitem()
    check_key(k, "command")
    _command = command(_command)

    k, _schema_version = d.popitem()
    check_key(k, "schema_version")
    schema_version(_schema_version)

    check_empty(d)
    return Document(_command, columns, _rows, _summary)


class JSONParser(Parser):
    @classmethod
    def parse(cls, d: Json) -> Document:
        """Parse a JSON report object.

        It destructively reads the dictionary in reverse order of writing, so
        pass in a copy if the original must be preserved."""
        try:
            return document(d)
        except KeyError as e:
            raise ReportFormatError(f"missing field in report: {e}") from e
