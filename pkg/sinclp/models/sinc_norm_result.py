from dataclasses import dataclass


@dataclass(frozen=True)
class SincNormResult:
    """
    Value of I(p) = (1/pi) * int (sin^2 t / t^2)^p dt with its error budget.

    The true value lies in [value - total_error, value + total_error].

    Attributes
    ----------
    p : float
        Exponent
    value : float
        Estimate of I(p)
    quad_error : float
        Quadrature error estimate over [-T, T]
    tail_bound : float
        Bound on the part of the mass beyond |t| = T that `value` does not
        account for
    cutoff : float
        The cutoff T, a multiple of pi
    total_error : float
        quad_error + tail_bound
    """

    p: float
    value: float
    quad_error: float
    tail_bound: float
    cutoff: float
    total_error: float

    @property
    def lower(self) -> float:
        """Lower end of the enclosure."""
        return self.value - self.total_error

    @property
    def upper(self) -> float:
        """Upper end of the enclosure."""
        return self.value + self.total_error
