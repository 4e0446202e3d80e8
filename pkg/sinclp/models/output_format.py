from enum import Enum


class OutputFormat(str, Enum):
    """Rendering of command results."""

    TEXT = "text"
    CSV = "csv"
    JSON = "json"
