from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckFailure:
    """
    A single failed check of the verification suite.

    Attributes
    ----------
    check : str
        Name of the check (e.g., "ball", "monotone")
    p : float
        Exponent the check refers to (p0 or 2^k for the global checks)
    observed : float
        The observed quantity
    required : float
        The bound the observed quantity had to respect
    """

    check: str
    p: float
    observed: float
    required: float


@dataclass
class VerificationSummary:
    """
    Outcome of a verification run over a grid of exponents.

    Attributes
    ----------
    grid : list[float]
        The exponents that were checked, ascending
    checks_run : int
        Number of individual checks evaluated
    failures : list[CheckFailure]
        The failed checks, in the order they were evaluated

    Methods
    -------
    record(check: str, p: float, observed: float, required: float, ok: bool)
        Count a check and keep it as a failure if `ok` is False.
    """

    grid: list[float] = field(default_factory=list)
    checks_run: int = 0
    failures: list[CheckFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """True when no check failed."""
        return not self.failures

    def record(
        self, check: str, p: float, observed: float, required: float, ok: bool
    ):
        """
        Count a check and keep it as a failure if `ok` is False.

        Parameters
        ----------
        check : str
            Name of the check
        p : float
            Exponent the check refers to
        observed : float
            Observed quantity
        required : float
            Bound the observed quantity had to respect
        ok : bool
            Outcome of the check
        """
        self.checks_run += 1
        if not ok:
            self.failures.append(CheckFailure(check, p, observed, required))
