from dataclasses import dataclass, replace
from enum import Enum

from sinclp.constants import (
    DEFAULT_ABS_TOL,
    DEFAULT_MAX_SUBDIVISIONS,
    DEFAULT_PANEL_ORDER,
    DEFAULT_REL_TOL,
)
from sinclp.errors import ArgumentError


class TailPolicy(str, Enum):
    """
    How the mass of the integrand beyond the cutoff T is accounted for.

    MAJORANT
        Discard the mass beyond T and report the bound
        (2/pi) T^(1-2p) / (2p-1) obtained from |sin t| <= 1.
    AVERAGED
        Add the mean-value estimate of the mass beyond T to the result and
        report a bound on the remainder only.
    """

    MAJORANT = "majorant"
    AVERAGED = "averaged"


@dataclass(frozen=True)
class QuadratureConfig:
    """
    Settings of the adaptive quadrature and of the cutoff choice.

    Attributes
    ----------
    abs_tol : float
        Absolute tolerance (> 0)
    rel_tol : float
        Relative tolerance (>= 0)
    max_subdivisions : int
        Largest number of panels a single integral may use (>= 1)
    panel_order : int
        Number of nodes of the embedded panel rule. Only the
        7/15-point Gauss-Kronrod pair is tabulated.
    tail_policy : TailPolicy
        Treatment of the mass of the integrand beyond the cutoff

    Methods
    -------
    with_tolerance(tol: float)
        Return a copy with both tolerances set to `tol`.
    """

    abs_tol: float = DEFAULT_ABS_TOL
    rel_tol: float = DEFAULT_REL_TOL
    max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS
    panel_order: int = DEFAULT_PANEL_ORDER
    tail_policy: TailPolicy = TailPolicy.AVERAGED

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ArgumentError(
                f"abs_tol must be positive, got {self.abs_tol}"
            )
        if not self.rel_tol >= 0:
            raise ArgumentError(
                f"rel_tol must be non-negative, got {self.rel_tol}"
            )
        if self.max_subdivisions < 1:
            raise ArgumentError(
                "max_subdivisions must be at least 1, "
                f"got {self.max_subdivisions}"
            )
        if self.panel_order < 1:
            raise ArgumentError(
                f"panel_order must be positive, got {self.panel_order}"
            )
        # Accept the plain strings used on the command line
        object.__setattr__(self, "tail_policy", TailPolicy(self.tail_policy))

    def with_tolerance(self, tol: float) -> "QuadratureConfig":
        """
        Return a copy with both tolerances set to `tol`.

        Parameters
        ----------
        tol : float
            New absolute and relative tolerance

        Returns
        -------
        QuadratureConfig
            The updated configuration
        """
        return replace(self, abs_tol=tol, rel_tol=tol)
