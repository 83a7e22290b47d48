import csv
import json
from typing import List, Optional

from .exactnum import parse_rational
from .exceptions import ReportFormatError
from .models.common import Filepath, Rationals
from .models.reports import Document
from .parsers.json import JSONParser


class ReaderMixIn:
    """A mixin to read reports back, so that exact values can be compared
    with the values computed in-process."""

    def read_document(self, path: Filepath, command: Optional[str] = None) -> Document:
        """Read, parse, and return the Document from the file. Formats that do
        not record the command take it from the caller."""
        raise NotImplementedError

    def exact_column(self, document: Document, column: str) -> Rationals:
        """Parse one column of canonical rational text; empty cells (skipped
        values) are left out."""
        if column not in document.columns:
            raise ReportFormatError(f"{column} not in {document.columns}")
        values = []
        for row in document.rows:
            text = row.get(column)
            if text is None or text == "":
                continue
            try:
                values.append(parse_rational(text))
            except (TypeError, ValueError) as e:
                raise ReportFormatError(f"{column}: {e}") from e
        return values


class JSONReaderMixIn(ReaderMixIn):
    def read_document(self, path: Filepath, command: Optional[str] = None) -> Document:
        with open(path, encoding="utf-8") as f:
            try:
                d = json.load(f)
            except json.JSONDecodeError as e:
                raise ReportFormatError(f"{path}: {e}") from e
        return JSONParser.parse(d)


class CSVReaderMixIn(ReaderMixIn):
    def read_document(self, path: Filepath, command: Optional[str] = None) -> Document:
        if command is None:
            raise ReportFormatError(f"{path}: CSV reports do not name their command")
        with open(path, encoding="utf-8", newline="") as f:
            records: List[List[str]] = list(csv.reader(f))
        if not records:
            raise ReportFormatError(f"{path} has no header row")

        columns = tuple(records[0])
        rows = []
        for record in records[1:]:
            if len(record) != len(columns):
                raise ReportFormatError(
                    f"{path}: {len(record)} fields where {len(columns)} expected"
                )
            rows.append(dict(zip(columns, record)))
        return Document(command, columns, rows)
