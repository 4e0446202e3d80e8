from .progress_bar import ProgressBar
from .report_view import ReportView

__all__ = ["ProgressBar", "ReportView"]  # noqa: F401
