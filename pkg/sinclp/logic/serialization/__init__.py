from .serialization import (
    BOUND_CSV_HEADER,
    INTEGRAL_CSV_HEADER,
    ResultEncoder,
    bound_report_row,
    format_real,
    integral_row,
    rational_str,
    to_json,
)

__all__ = [
    "BOUND_CSV_HEADER",
    "INTEGRAL_CSV_HEADER",
    "ResultEncoder",
    "bound_report_row",
    "format_real",
    "integral_row",
    "rational_str",
    "to_json",
]  # noqa: F401
