import csv
import io
import json
import os
import tempfile
from typing import Any, Optional

from .config import Config
from .models.common import Filepath
from .models.reports import Document


def cell_text(value: Any) -> str:
    """Text of one report cell in the tabular formats."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


class WriterMixIn:
    """A mixin to separate report formats from report contents."""

    def render(self, document: Document) -> str:
        """Override this function to serialize a Document."""
        raise NotImplementedError

    def write_document(self, document: Document, path: Optional[Filepath]) -> None:
        """Write the rendered document to path, or to standard output."""
        text = self.render(document)
        if path is None:
            print(text, end="")
        else:
            self.write_file(path, text)

    def write_file(self, path: Filepath, text: str) -> None:
        # Same directory as the destination, so that os.replace is atomic.
        dst_dir = os.path.dirname(os.path.abspath(path))
        if not os.path.isdir(dst_dir):
            os.makedirs(dst_dir, mode=0o700, exist_ok=True)
        fd, temp_path = tempfile.mkstemp(dir=dst_dir)
        try:
            with open(fd, "w", encoding="utf-8", newline="") as temp_file:
                temp_file.write(text)
            os.replace(temp_path, path)
        except BaseException:
            os.remove(temp_path)
            raise


class JSONWriterMixIn(WriterMixIn):
    """One top-level object: schema_version, command, rows and an optional
    summary."""

    def render(self, document: Document) -> str:
        obj = {
            "schema_version": Config.SCHEMA_VERSION,
            "command": document.command,
            "rows": [
                {column: row.get(column) for column in document.columns}
                for row in document.rows
            ],
        }
        if document.summary is not None:
            obj["summary"] = document.summary
        return json.dumps(obj, indent=2) + "\n"


class CSVWriterMixIn(WriterMixIn):
    """A header row, then one record per row with a constant field count."""

    def render(self, document: Document) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(document.columns)
        for row in document.rows:
            writer.writerow(cell_text(row.get(column)) for column in document.columns)
        return buffer.getvalue()


class MarkdownWriterMixIn(WriterMixIn):
    """A pipe table."""

    def render(self, document: Document) -> str:
        def line(cells: Any) -> str:
            return "| " + " | ".join(c.replace("|", "\\|") for c in cells) + " |\n"

        text = line(document.columns)
        text += line("---" for _ in document.columns)
        for row in document.rows:
            text += line(cell_text(row.get(column)) for column in document.columns)
        return text
