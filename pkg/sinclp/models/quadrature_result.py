from dataclasses import dataclass


@dataclass(frozen=True)
class QuadratureResult:
    """
    Outcome of an adaptive integration over a finite interval.

    Attributes
    ----------
    value : float
        Approximation of the integral
    error_estimate : float
        Sum of the per-panel discrepancies of the embedded rule pair
    panels_used : int
        Number of panels in the final partition
    converged : bool
        False only when the subdivision budget was exhausted
    """

    value: float
    error_estimate: float
    panels_used: int
    converged: bool
