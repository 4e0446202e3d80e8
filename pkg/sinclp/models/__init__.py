from .bound_report import BoundReport
from .grid_spec import GridSpec
from .output_format import OutputFormat
from .piecewise_poly import PiecewisePoly, Rational
from .quadrature_config import QuadratureConfig, TailPolicy
from .quadrature_result import QuadratureResult
from .sinc_norm_result import SincNormResult
from .verification_summary import CheckFailure, VerificationSummary

__all__ = [
    "BoundReport",
    "CheckFailure",
    "GridSpec",
    "OutputFormat",
    "PiecewisePoly",
    "QuadratureConfig",
    "QuadratureResult",
    "Rational",
    "SincNormResult",
    "TailPolicy",
    "VerificationSummary",
]  # noqa: F401
