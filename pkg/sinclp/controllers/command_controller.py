from functools import partial
import logging
import math
import numpy as np

from sinclp.constants import SQRT_3_OVER_PI
from sinclp.core import (
    as_rational,
    asymptotic_ratio,
    bound_report,
    bspline,
    closed_form_eval,
    evaluate,
    exact_lp_integer,
    gaussian_profile_deviation,
    p0,
    p0_residual,
    sinc_lp_integral,
    verify_suite,
)
from sinclp.errors import ArgumentError, DomainError
from sinclp.logic.workers import GridWorker
from sinclp.models import OutputFormat, QuadratureConfig
from sinclp.views import ProgressBar, ReportView

logger = logging.getLogger(__name__)

PROFILE_DEGREES = (10, 20, 40)
PROFILE_GRID = np.linspace(-3.0, 3.0, 61)


class CommandController:
    """
    Controller running the command line subcommands.

    Each `cmd_*` method computes its result, hands it to the view, and
    returns the process exit code: 0 on success, 1 when a verification
    fails or two exact evaluations disagree. Invalid arguments raise
    `ArgumentError` or `DomainError`, which the application reports as
    usage errors.

    Attributes
    ----------
    view : ReportView
        Renders the results
    config : QuadratureConfig
        Quadrature settings shared by all commands
    jobs : int
        Number of processes for the grid commands
    progress : bool
        Whether the grid commands show a progress bar
    """

    def __init__(
        self,
        view: ReportView,
        config: QuadratureConfig,
        jobs: int = 1,
        progress: bool = False,
    ):
        self.view = view
        self.config = config
        self.jobs = jobs
        self.progress = progress

    def _config(self, tol=None) -> QuadratureConfig:
        if tol is None:
            return self.config
        return self.config.with_tolerance(tol)

    def _run_grid(self, worker: GridWorker, description: str):
        if not self.progress:
            return worker.do_work()
        bar = ProgressBar(description)
        worker.progress_callback = bar.update_progress
        try:
            return worker.do_work()
        finally:
            bar.close()

    @staticmethod
    def _require_p(p: float):
        if not (p >= 1 and math.isfinite(p)):
            raise DomainError(f"p must be finite and at least 1, got {p}")

    def cmd_integral(self, p: float, fmt: OutputFormat, tol=None) -> int:
        """Compute and render I(p)."""
        self._require_p(p)
        self.view.show_integral(sinc_lp_integral(p, self._config(tol)), fmt)
        return 0

    def cmd_bounds(self, p: float, fmt: OutputFormat, tol=None) -> int:
        """Compute and render the bound report at one exponent."""
        self._require_p(p)
        report = bound_report(p, self._config(tol))
        self.view.show_bound_reports([report], fmt, single=True)
        return 0

    def cmd_p0(self, fmt: OutputFormat) -> int:
        """Render p0 and its residual."""
        root = p0()
        self.view.show_p0(root, p0_residual(root), fmt)
        return 0

    def cmd_table(self, grid, fmt: OutputFormat, tol=None) -> int:
        """
        Render bound reports over a grid, one row per point.

        Parameters
        ----------
        grid : list[float]
            Grid points
        fmt : OutputFormat
            Output format
        tol : float | None
            Quadrature tolerance, the configured one when None

        Returns
        -------
        int
            Exit code
        """
        points = sorted(set(grid))
        for p in points:
            self._require_p(p)
        worker = GridWorker(
            partial(bound_report, cfg=self._config(tol)), points, self.jobs
        )
        reports = self._run_grid(worker, "table")
        self.view.show_bound_reports(reports, fmt)
        return 0

    def cmd_bspline(self, n: int, x: str, fmt: OutputFormat) -> int:
        """
        Render beta^n(x), computed both by recursion and in closed form.

        Parameters
        ----------
        n : int
            Degree, n >= 0
        x : str
            Rational literal such as "1/2"
        fmt : OutputFormat
            Output format

        Returns
        -------
        int
            0 when both values agree, 1 otherwise
        """
        if n < 0:
            raise DomainError(f"B-spline degree must be non-negative, got {n}")
        point = as_rational(x)
        recursive = evaluate(bspline(n), point)
        closed = closed_form_eval(n, point)
        if recursive != closed:
            logger.error(
                "beta^%d(%s): recursion gives %s, closed form %s",
                n,
                x,
                recursive,
                closed,
            )
            return 1
        self.view.show_bspline(n, point, recursive, fmt)
        return 0

    def cmd_verify(self, grid, fmt: OutputFormat, tol=None) -> int:
        """Run the verification suite; exit code 1 when a check fails."""
        callback = None
        bar = ProgressBar("verify") if self.progress else None
        if bar is not None:
            callback = bar.update_progress
        try:
            summary = verify_suite(
                grid, self._config(tol), self.jobs, callback
            )
        finally:
            if bar is not None:
                bar.close()
        self.view.show_verification(summary, fmt)
        return 0 if summary.passed else 1

    def cmd_asymptote(self, n_max: int, fmt: OutputFormat) -> int:
        """
        Render exact I(p) against sqrt(3/pi)/sqrt(p) for p = 1, 2, 4, ...

        Also renders the Gaussian profile deviation of beta^n for the
        degrees 10, 20, and 40 that do not exceed `n_max`.
        """
        if n_max < 1:
            raise ArgumentError(f"--n-max must be at least 1, got {n_max}")
        rows = []
        p = 1
        while p <= n_max:
            exact = exact_lp_integer(p)
            asymptote = SQRT_3_OVER_PI / math.sqrt(p)
            rows.append((p, exact, asymptote, asymptotic_ratio(p)))
            p *= 2
        profile = [
            (n, gaussian_profile_deviation(n, PROFILE_GRID))
            for n in PROFILE_DEGREES
            if n <= n_max
        ]
        self.view.show_asymptote(rows, profile, fmt)
        return 0
