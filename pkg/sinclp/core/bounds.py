from functools import lru_cache, partial
import logging
import math
from scipy.optimize import bisect

from sinclp.constants import (
    BALL_CUTOFF,
    BALL_RATIO,
    BOUND_SLACK,
    P0_BRACKET,
    P0_TARGET,
    P0_XTOL,
    SQRT_3_OVER_PI,
    SQRT_PI_OVER_3,
)
from sinclp.errors import ArgumentError, BracketError, DomainError
from sinclp.logic.workers import GridWorker
from sinclp.models import BoundReport, QuadratureConfig, VerificationSummary
from .bspline_exact import exact_lp_integer, to_float
from .sinc_norm import central_integral, sinc_lp_integral, tail_bound

logger = logging.getLogger(__name__)

# Tolerances of the verification checks
EQUALITY_TOL = 1e-10
ORACLE_SLACK = 1e-12
BRANCH_SLACK = 1e-12
STRICT_FROM = 1.1
ASYMPTOTIC_POWERS = range(1, 7)


def _require_p(p: float):
    if not (p >= 1 and math.isfinite(p)):
        raise DomainError(f"The bounds hold for finite p >= 1, got p = {p}")


def _is_integer(p: float) -> bool:
    return float(p).is_integer()


def ball_bound(p: float) -> float:
    """
    Ball's bound 1/sqrt(p).

    Parameters
    ----------
    p : float
        Exponent, p >= 1

    Returns
    -------
    float
        1 / sqrt(p)
    """
    _require_p(p)
    return 1.0 / math.sqrt(p)


def p0_lhs(p: float) -> float:
    """
    Left side of the p0 equation, (sqrt5/6)^(2p-1) / (sqrt p - 1/(2 sqrt p)).

    Parameters
    ----------
    p : float
        Exponent, p > 1/2

    Returns
    -------
    float
        The value, strictly decreasing in p on [1, 3]
    """
    root = math.sqrt(p)
    return BALL_RATIO ** (2.0 * p - 1.0) / (root - 0.5 / root)


def p0_residual(p: float) -> float:
    """Residual p0_lhs(p) - pi (1 - sqrt(3/pi)) of the p0 equation."""
    return p0_lhs(p) - P0_TARGET


def solve_p0(tol: float) -> float:
    """
    Root p0 of the equation where the two branches of C(p) meet.

    Bisection on [1, 3]. The bracket is narrowed to `tol` or to the float
    resolution of the root, whichever is smaller, so the residual is at
    round-off level for any `tol`.

    Parameters
    ----------
    tol : float
        Largest admissible bracket width, tol > 0

    Returns
    -------
    float
        p0 (1.8414 to 4 decimals)
    """
    if not tol > 0:
        raise ArgumentError(f"Tolerance must be positive, got {tol}")
    lo, hi = P0_BRACKET
    f_lo, f_hi = p0_residual(lo), p0_residual(hi)
    if not f_lo > 0 > f_hi:
        raise BracketError(
            f"p0 is not bracketed by [{lo}, {hi}]: residuals "
            f"{f_lo!r}, {f_hi!r}"
        )
    root = bisect(p0_residual, lo, hi, xtol=min(tol, 4.0 * math.ulp(hi)))
    logger.debug("p0 = %.15g, residual %.3e", root, p0_residual(root))
    return root


@lru_cache(maxsize=None)
def p0() -> float:
    """The cached p0, solved once to a 1e-12 bracket."""
    return solve_p0(P0_XTOL)


def c_of_p_tail_branch(p: float) -> float:
    """
    Second branch of C(p), 1 + (1/sqrt(3 pi)) p0_lhs(p), at any p >= 1.

    Times sqrt(3/pi)/sqrt(p) it equals sqrt(3/pi)/sqrt(p) plus the tail
    bound at 6/sqrt(5).

    Parameters
    ----------
    p : float
        Exponent, p >= 1

    Returns
    -------
    float
        The formula value
    """
    _require_p(p)
    return 1.0 + p0_lhs(p) / math.sqrt(3.0 * math.pi)


def c_of_p(p: float) -> float:
    """
    The constant C(p): sqrt(pi/3) up to p0, the tail branch beyond.

    Parameters
    ----------
    p : float
        Exponent, p >= 1

    Returns
    -------
    float
        C(p)
    """
    _require_p(p)
    if p <= p0():
        return SQRT_PI_OVER_3
    return c_of_p_tail_branch(p)


def improved_bound(p: float) -> float:
    """
    The improved bound C(p) sqrt(3/pi) / sqrt(p).

    On [1, p0] the product cancels to Ball's bound, which is returned as
    is.

    Parameters
    ----------
    p : float
        Exponent, p >= 1

    Returns
    -------
    float
        The bound
    """
    _require_p(p)
    if p <= p0():
        return ball_bound(p)
    return c_of_p(p) * SQRT_3_OVER_PI / math.sqrt(p)


def _sandwich_holds(p: float, lower: float, upper: float) -> bool:
    floor = math.floor(p)
    outer_upper = to_float(exact_lp_integer(floor))
    outer_lower = to_float(exact_lp_integer(floor + 1))
    return (
        lower <= outer_upper + BOUND_SLACK
        and outer_lower <= upper + BOUND_SLACK
    )


def sandwich_check(p: float, cfg: QuadratureConfig | None = None) -> bool:
    """
    Check I(floor(p) + 1) <= I(p) <= I(floor(p)).

    The outer terms are exact, the middle one is computed by quadrature
    and compared through its error enclosure.

    Parameters
    ----------
    p : float
        Exponent, p >= 1
    cfg : QuadratureConfig | None
        Quadrature settings; the defaults when None

    Returns
    -------
    bool
        True when both inequalities hold
    """
    _require_p(p)
    integral = sinc_lp_integral(p, cfg)
    return _sandwich_holds(p, integral.lower, integral.upper)


def asymptotic_ratio(p: float, cfg: QuadratureConfig | None = None) -> float:
    """
    I(p) sqrt(p) / sqrt(3/pi), which tends to 1.

    Integer p use the exact value of I(p), other p the quadrature.

    Parameters
    ----------
    p : float
        Exponent, p >= 1
    cfg : QuadratureConfig | None
        Quadrature settings; the defaults when None

    Returns
    -------
    float
        The ratio
    """
    _require_p(p)
    if _is_integer(p):
        value = to_float(exact_lp_integer(int(p)))
    else:
        value = sinc_lp_integral(p, cfg).value
    return value * math.sqrt(p) / SQRT_3_OVER_PI


def asymptotic_sandwich(p: float) -> tuple[float, float]:
    """
    Exact enclosure of the asymptotic ratio from the integer values.

    Parameters
    ----------
    p : float
        Exponent, p >= 1

    Returns
    -------
    tuple[float, float]
        I(floor(p)+1) and I(floor(p)), both times sqrt(p)/sqrt(3/pi)
    """
    _require_p(p)
    floor = math.floor(p)
    scale = math.sqrt(p) / SQRT_3_OVER_PI
    return (
        to_float(exact_lp_integer(floor + 1)) * scale,
        to_float(exact_lp_integer(floor)) * scale,
    )


def bound_report(p: float, cfg: QuadratureConfig | None = None) -> BoundReport:
    """
    Assemble I(p), the bounds, and the margins at one exponent.

    Margins are bound minus point estimate; the error budget stays in
    `integral`.

    Parameters
    ----------
    p : float
        Exponent, p >= 1
    cfg : QuadratureConfig | None
        Quadrature settings; the defaults when None

    Returns
    -------
    BoundReport
        The report
    """
    _require_p(p)
    integral = sinc_lp_integral(p, cfg)
    ball = ball_bound(p)
    improved = improved_bound(p)
    return BoundReport(
        p=p,
        integral=integral,
        ball_bound=ball,
        c_p=c_of_p(p),
        improved_bound=improved,
        margin_ball=ball - integral.value,
        margin_improved=improved - integral.value,
        asymptotic_ratio=integral.value * math.sqrt(p) / SQRT_3_OVER_PI,
    )


def evaluate_point(p: float, cfg: QuadratureConfig | None = None):
    """
    Quantities needed by the verification suite at one exponent.

    Parameters
    ----------
    p : float
        Exponent, p >= 1
    cfg : QuadratureConfig | None
        Quadrature settings; the defaults when None

    Returns
    -------
    tuple[BoundReport, float]
        The bound report and the central integral
    """
    return bound_report(p, cfg), central_integral(p, cfg)


def _check_point(summary, report, central, cfg):
    p = report.p
    integral = report.integral

    summary.record(
        "ball", p, integral.lower, report.ball_bound,
        integral.lower <= report.ball_bound,
    )
    if p >= STRICT_FROM:
        summary.record(
            "ball_strict", p, integral.upper, report.ball_bound,
            integral.upper < report.ball_bound,
        )
    if p == 1:
        deviation = max(
            abs(integral.value - 1.0),
            abs(report.margin_ball),
            abs(report.margin_improved),
        )
        summary.record(
            "equality_p1", p, deviation, EQUALITY_TOL,
            deviation <= EQUALITY_TOL,
        )
    summary.record(
        "improved_lower", p, integral.lower, report.improved_bound,
        integral.lower <= report.improved_bound,
    )
    summary.record(
        "improved_upper", p, report.improved_bound,
        report.ball_bound + BOUND_SLACK,
        report.improved_bound <= report.ball_bound + BOUND_SLACK,
    )

    central_bound = SQRT_3_OVER_PI / math.sqrt(p)
    summary.record(
        "central_estimate", p, central - cfg.abs_tol, central_bound,
        central - cfg.abs_tol <= central_bound,
    )
    ball_tail = tail_bound(p, BALL_CUTOFF)
    summary.record(
        "decomposition", p, integral.lower,
        central + ball_tail + cfg.abs_tol,
        integral.lower <= central + ball_tail + cfg.abs_tol,
    )
    closed_tail = BALL_RATIO ** (2.0 * p - 1.0)
    reproduced = ball_tail * math.pi * (p - 0.5)
    summary.record(
        "tail_reproduction", p, reproduced, closed_tail,
        abs(reproduced - closed_tail) <= 1e-15 * closed_tail,
    )

    branch = c_of_p_tail_branch(p)
    if p <= p0():
        ok = branch >= SQRT_PI_OVER_3 - BRANCH_SLACK
    else:
        ok = branch <= SQRT_PI_OVER_3 + BRANCH_SLACK
    summary.record("c_branch", p, branch, SQRT_PI_OVER_3, ok)

    if _is_integer(p):
        exact = to_float(exact_lp_integer(int(p)))
        deviation = abs(integral.value - exact)
        required = integral.total_error + ORACLE_SLACK
        summary.record(
            "integer_oracle", p, deviation, required, deviation <= required
        )
    upper = to_float(exact_lp_integer(math.floor(p)))
    summary.record(
        "sandwich", p, integral.value, upper,
        _sandwich_holds(p, integral.lower, integral.upper),
    )


def _check_global(summary):
    root = p0()
    residual = abs(p0_residual(root))
    summary.record(
        "p0_residual", root, residual, ORACLE_SLACK, residual <= ORACLE_SLACK
    )
    previous = None
    for k in ASYMPTOTIC_POWERS:
        p = 2.0**k
        deviation = abs(asymptotic_ratio(p) - 1.0)
        if previous is not None:
            summary.record(
                "asymptotic_convergence", p, deviation, previous,
                deviation < previous,
            )
        previous = deviation


def verify_suite(
    grid,
    cfg: QuadratureConfig | None = None,
    jobs: int = 1,
    progress_callback=None,
) -> VerificationSummary:
    """
    Run every inequality and identity check over a grid of exponents.

    Failures are returned as data. Grid points are evaluated by a
    `GridWorker`, on `jobs` processes when jobs > 1; the checks are then
    applied in ascending p, so the summary does not depend on evaluation
    order.

    Parameters
    ----------
    grid : Iterable[float]
        Exponents, all >= 1, at least one
    cfg : QuadratureConfig | None
        Quadrature settings; the defaults when None
    jobs : int = 1
        Number of processes
    progress_callback : callable | None
        Called with the completed percentage

    Returns
    -------
    VerificationSummary
        The checks run and the failures
    """
    cfg = cfg or QuadratureConfig()
    points = sorted(set(float(p) for p in grid))
    if not points:
        raise ArgumentError("The verification grid is empty")
    bad = [p for p in points if not (p >= 1 and math.isfinite(p))]
    if bad:
        raise ArgumentError(f"Grid points must be finite and >= 1, got {bad}")

    worker = GridWorker(
        partial(evaluate_point, cfg=cfg), points, jobs, progress_callback
    )
    evaluations = worker.do_work()
    summary = VerificationSummary(grid=points)

    previous = None
    for report, central in evaluations:
        _check_point(summary, report, central, cfg)
        if previous is not None:
            summary.record(
                "monotone", report.p, report.integral.upper,
                previous.integral.lower,
                report.integral.upper < previous.integral.lower,
            )
            summary.record(
                "c_monotone", report.p, report.c_p, previous.c_p,
                report.c_p <= previous.c_p,
            )
        previous = report
    _check_global(summary)
    logger.debug(
        "Verified %d points: %d checks, %d failures",
        len(points),
        summary.checks_run,
        len(summary.failures),
    )
    return summary
