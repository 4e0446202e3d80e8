from dataclasses import dataclass

from .sinc_norm_result import SincNormResult


@dataclass(frozen=True)
class BoundReport:
    """
    I(p) side by side with the bounds on it.

    Attributes
    ----------
    p : float
        Exponent
    integral : SincNormResult
        The computed I(p)
    ball_bound : float
        1 / sqrt(p)
    c_p : float
        The constant C(p)
    improved_bound : float
        C(p) * sqrt(3/pi) / sqrt(p)
    margin_ball : float
        ball_bound - integral.value
    margin_improved : float
        improved_bound - integral.value
    asymptotic_ratio : float
        integral.value * sqrt(p) / sqrt(3/pi)
    """

    p: float
    integral: SincNormResult
    ball_bound: float
    c_p: float
    improved_bound: float
    margin_ball: float
    margin_improved: float
    asymptotic_ratio: float
