from typing import Any

from ..models.reports import Document


class Parser:
    """Inherit this class to implement your own parser."""

    @classmethod
    def parse(cls, d: Any) -> Document:
        """Override this function to transform an input of any type to a
        Document object."""
        raise NotImplementedError
