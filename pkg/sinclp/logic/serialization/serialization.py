import json
import numpy as np
from sympy.polys.domains import QQ

from sinclp.models import (
    BoundReport,
    CheckFailure,
    QuadratureResult,
    Rational,
    SincNormResult,
    VerificationSummary,
)

BOUND_CSV_HEADER = [
    "p",
    "integral",
    "total_error",
    "ball_bound",
    "c_p",
    "improved_bound",
    "margin_ball",
    "margin_improved",
    "asymptotic_ratio",
]
INTEGRAL_CSV_HEADER = [
    "p",
    "value",
    "quad_error",
    "tail_bound",
    "cutoff",
    "total_error",
]
CSV_DIGITS = 17


class ResultEncoder(json.JSONEncoder):
    """
    Custom JSON encoder for the result objects.

    Handles serialization of custom types to JSON-compatible formats:
    - NumPy scalars and arrays are converted to floats and lists
    - Rationals are converted to "numerator/denominator" strings
    - SincNormResult, QuadratureResult, BoundReport, CheckFailure, and
      VerificationSummary objects are converted to dicts
    Floats keep Python's shortest round-trip representation.
    """

    def default(self, obj):
        # Handle NumPy scalars
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.integer):
            return int(obj)

        # Handle NumPy arrays
        if isinstance(obj, np.ndarray):
            return obj.tolist()

        # Handle exact rationals
        if isinstance(obj, Rational):
            return rational_str(obj)

        # Handle SincNormResult objects
        if isinstance(obj, SincNormResult):
            return {
                "p": obj.p,
                "value": obj.value,
                "quad_error": obj.quad_error,
                "tail_bound": obj.tail_bound,
                "cutoff": obj.cutoff,
                "total_error": obj.total_error,
            }

        # Handle QuadratureResult objects
        if isinstance(obj, QuadratureResult):
            return {
                "value": obj.value,
                "error_estimate": obj.error_estimate,
                "panels_used": obj.panels_used,
                "converged": obj.converged,
            }

        # Handle BoundReport objects
        if isinstance(obj, BoundReport):
            return {
                "p": obj.p,
                "integral": obj.integral,
                "ball_bound": obj.ball_bound,
                "c_p": obj.c_p,
                "improved_bound": obj.improved_bound,
                "margin_ball": obj.margin_ball,
                "margin_improved": obj.margin_improved,
                "asymptotic_ratio": obj.asymptotic_ratio,
            }

        # Handle CheckFailure objects
        if isinstance(obj, CheckFailure):
            return {
                "check": obj.check,
                "p": obj.p,
                "observed": obj.observed,
                "required": obj.required,
            }

        # Handle VerificationSummary objects
        if isinstance(obj, VerificationSummary):
            return {
                "passed": obj.passed,
                "grid": list(obj.grid),
                "checks_run": obj.checks_run,
                "failures": obj.failures,
            }

        # Let the parent class handle all other types
        return super().default(obj)


def to_json(payload) -> str:
    """
    Serialize a result (or a dict or list of results) to a JSON document.

    Parameters
    ----------
    payload : object
        Anything `ResultEncoder` can handle

    Returns
    -------
    str
        JSON string, keys in insertion order
    """
    return json.dumps(payload, cls=ResultEncoder, indent=2)


def rational_str(value: Rational) -> str:
    """Exact "numerator/denominator" form, the denominator always shown."""
    return f"{int(QQ.numer(value))}/{int(QQ.denom(value))}"


def format_real(value: float, digits: int = CSV_DIGITS) -> str:
    """
    Render a real with the given number of significant digits.

    Parameters
    ----------
    value : float
        Number to render
    digits : int
        Significant digits, 17 for a round-trip safe rendering

    Returns
    -------
    str
        The rendering
    """
    return f"{float(value):.{digits}g}"


def bound_report_row(report: BoundReport, digits: int = CSV_DIGITS):
    """
    A `BOUND_CSV_HEADER` row for a bound report.

    Parameters
    ----------
    report : BoundReport
        The report
    digits : int
        Significant digits of every column

    Returns
    -------
    list[str]
        The formatted columns
    """
    values = [
        report.p,
        report.integral.value,
        report.integral.total_error,
        report.ball_bound,
        report.c_p,
        report.improved_bound,
        report.margin_ball,
        report.margin_improved,
        report.asymptotic_ratio,
    ]
    return [format_real(v, digits) for v in values]


def integral_row(result: SincNormResult, digits: int = CSV_DIGITS):
    """An `INTEGRAL_CSV_HEADER` row for a computed I(p)."""
    values = [
        result.p,
        result.value,
        result.quad_error,
        result.tail_bound,
        result.cutoff,
        result.total_error,
    ]
    return [format_real(v, digits) for v in values]
