class SincLpError(Exception):
    """Base class of every error raised by `sinclp`."""


class DomainError(SincLpError, ValueError):
    """A parameter lies outside the domain of an operation."""


class DivergenceError(DomainError):
    """The requested integral does not converge (p <= 1/2)."""


class ArgumentError(SincLpError, ValueError):
    """Malformed arguments: reversed intervals, bad grids, bad literals."""


class IntegrandEvaluationError(SincLpError, ArithmeticError):
    """
    The integrand returned a non-finite value.

    Attributes
    ----------
    abscissa : float
        First evaluation point at which the value was not finite
    """

    def __init__(self, abscissa: float):
        super().__init__(
            f"Integrand is not finite at t = {abscissa!r}"
        )
        self.abscissa = abscissa


class ConvergenceError(SincLpError, RuntimeError):
    """
    Adaptive quadrature exhausted its subdivision budget.

    Attributes
    ----------
    lobe : int | None
        Index k of the lobe [k*pi, (k+1)*pi] that failed, or None when the
        failing integral was a single interval
    result : QuadratureResult | None
        The partial result returned by the integrator
    """

    def __init__(self, message: str, lobe=None, result=None):
        super().__init__(message)
        self.lobe = lobe
        self.result = result


class BracketError(SincLpError, RuntimeError):
    """The root of the p0 equation is not bracketed."""
