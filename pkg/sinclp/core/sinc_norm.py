import logging
import math
import numpy as np
from scipy.special import gammaln, zeta

from sinclp.constants import BALL_CUTOFF, MAX_LOBES
from sinclp.errors import (
    ArgumentError,
    ConvergenceError,
    DivergenceError,
    DomainError,
)
from sinclp.models import QuadratureConfig, SincNormResult, TailPolicy
from .quadrature import integrate_adaptive

logger = logging.getLogger(__name__)

# ln(sin t / t) = -sum_{k>=1} zeta(2k) (t/pi)^(2k) / k, valid for |t| < pi.
# Used for |t| < 1, where (t/pi)^2 < 0.102 and 20 terms reach round-off.
_SERIES_RADIUS = 1.0
_SERIES_TERMS = 20
_kk = np.arange(1, _SERIES_TERMS + 1)
_LOG_SINC_COEFFS = (zeta(2.0 * _kk) / _kk)[::-1]  # highest power first

# Near 0 the integrand is below exp(-p t^2 / 3). Intervals starting at 0
# are split at multiples of its width sqrt(3/p), out to exp(-1600)
_PEAK_PANELS = 40


def log_abs_sinc(t):
    """
    ln|sin t / t| with the removable singularity filled (0 at t = 0).

    Parameters
    ----------
    t : float | NDArray[np.float64]
        Abscissae

    Returns
    -------
    float | NDArray[np.float64]
        The logarithm; -inf at the zeros of sin t
    """
    scalar = np.ndim(t) == 0
    t = np.abs(np.atleast_1d(np.asarray(t, dtype=np.float64)))
    out = np.empty_like(t)

    near = t < _SERIES_RADIUS
    u = (t[near] / np.pi) ** 2
    out[near] = -u * np.polyval(_LOG_SINC_COEFFS, u)

    far = ~near
    with np.errstate(divide="ignore"):
        out[far] = np.log(np.abs(np.sin(t[far])) / t[far])
    return float(out[0]) if scalar else out


def _sinc_pow(t, p):
    return np.exp(2.0 * p * log_abs_sinc(t))


def sinc_pow_integrand(t, p: float):
    """
    The integrand |sin t / t|^(2p), equal to 1 at t = 0.

    The power is taken in log space, so large p does not underflow
    before the result itself does.

    Parameters
    ----------
    t : float | NDArray[np.float64]
        Abscissae
    p : float
        Exponent, p >= 1/2

    Returns
    -------
    float | NDArray[np.float64]
        Values in [0, 1]
    """
    if not p >= 0.5:
        raise DomainError(
            f"The integral of |sin t / t|^(2p) diverges for p = {p} < 1/2"
        )
    if not math.isfinite(p):
        raise DomainError(f"The exponent must be finite, got p = {p}")
    return _sinc_pow(t, p)


def tail_bound(p: float, T: float) -> float:
    """
    Majorant of the mass of I(p) beyond |t| = T.

    (1/pi) * 2 * int_T^inf t^(-2p) dt = (2/pi) T^(1-2p) / (2p - 1).
    At T = 6/sqrt(5) this is (1/pi) (sqrt(5)/6)^(2p-1) / (p - 1/2).

    Parameters
    ----------
    p : float
        Exponent, p > 1/2
    T : float
        Cutoff, T > 0

    Returns
    -------
    float
        The bound
    """
    if not p > 0.5:
        raise DivergenceError(f"The tail diverges for p = {p} <= 1/2")
    if not math.isfinite(p):
        raise DomainError(f"The exponent must be finite, got p = {p}")
    if not T > 0:
        raise DomainError(f"The cutoff must be positive, got T = {T}")
    exponent = 2.0 * p - 1.0
    return 2.0 / (math.pi * exponent) * (1.0 / T) ** exponent


def sin_power_mean(p: float) -> float:
    """
    Mean of sin^(2p) over a period, Gamma(p + 1/2) / (sqrt(pi) Gamma(p + 1)).

    Parameters
    ----------
    p : float
        Exponent, p > -1/2

    Returns
    -------
    float
        The mean value, 1/2 at p = 1
    """
    return math.exp(gammaln(p + 0.5) - gammaln(p + 1.0)) / math.sqrt(math.pi)


def averaged_tail(p: float, T: float) -> tuple[float, float]:
    """
    Mean-value estimate of the mass of I(p) beyond |t| = T, and its error.

    Writing sin^(2p) t = m + (sin^(2p) t - m) with m = `sin_power_mean(p)`,
    the first part gives m times the majorant. The second part has zero
    mean over every lobe, and so does its primitive; integrating by parts
    twice, with both primitives vanishing at T, bounds it by
    4 p pi m T^(-2p-1) after the 2/pi normalisation.

    Parameters
    ----------
    p : float
        Exponent, p > 1/2
    T : float
        Cutoff, a positive multiple of pi

    Returns
    -------
    tuple[float, float]
        The estimate and the bound on |mass - estimate|
    """
    mean = sin_power_mean(p)
    estimate = mean * tail_bound(p, T)
    remainder = 4.0 * p * math.pi * mean * (1.0 / T) ** (2.0 * p + 1.0)
    return estimate, remainder


def _peak_points(p: float) -> list:
    width = math.sqrt(3.0 / p)
    return [k * width for k in range(1, _PEAK_PANELS + 1)]


def _require_finite_p(p: float):
    if not (p >= 1 and math.isfinite(p)):
        raise DomainError(f"I(p) is computed for finite p >= 1, got p = {p}")


def _tail_error(p: float, T: float, policy: TailPolicy) -> float:
    if policy == TailPolicy.AVERAGED:
        return averaged_tail(p, T)[1]
    return tail_bound(p, T)


def choose_cutoff(
    p: float, tol: float, policy: TailPolicy = TailPolicy.MAJORANT
) -> float:
    """
    Smallest lobe boundary k*pi >= 6/sqrt(5) whose tail error is <= tol/2.

    Parameters
    ----------
    p : float
        Exponent, p > 1/2
    tol : float
        Error budget, tol > 0; half of it goes to the tail
    policy : TailPolicy = TailPolicy.MAJORANT
        Which tail error is compared with tol/2: the majorant
        `tail_bound`, or the remainder of `averaged_tail`

    Returns
    -------
    float
        The cutoff k*pi
    """
    if not p > 0.5:
        raise DivergenceError(f"The tail diverges for p = {p} <= 1/2")
    if not math.isfinite(p):
        raise DomainError(f"The exponent must be finite, got p = {p}")
    if not tol > 0:
        raise ArgumentError(f"Tolerance must be positive, got {tol}")
    policy = TailPolicy(policy)
    budget = 0.5 * tol

    # Invert the bound for a first guess, then settle on the exact k
    if policy == TailPolicy.AVERAGED:
        scale = 4.0 * p * math.pi * sin_power_mean(p)
        exponent = 2.0 * p + 1.0
    else:
        exponent = 2.0 * p - 1.0
        scale = 2.0 / (math.pi * exponent)
    log_cutoff = (math.log(scale) - math.log(budget)) / exponent
    if log_cutoff > 50.0:
        raise DomainError(
            f"Cutoff for p = {p}, tol = {tol} with the {policy.value} "
            "policy is beyond reach"
        )
    k_min = max(1, math.ceil(BALL_CUTOFF / math.pi))
    k = max(k_min, math.ceil(math.exp(log_cutoff) / math.pi))
    while k > k_min and _tail_error(p, (k - 1) * math.pi, policy) <= budget:
        k -= 1
    while _tail_error(p, k * math.pi, policy) > budget:
        k += 1
    return k * math.pi


def sinc_lp_integral(
    p: float, cfg: QuadratureConfig | None = None
) -> SincNormResult:
    """
    Compute I(p) = (1/pi) int (sin^2 t / t^2)^p dt with an error budget.

    The integrand is even, so (2/pi) int_0^T is computed lobe by lobe over
    [k*pi, (k+1)*pi], with T from `choose_cutoff`. The mass beyond T is
    handled according to `cfg.tail_policy`.

    Parameters
    ----------
    p : float
        Exponent, p >= 1
    cfg : QuadratureConfig | None
        Quadrature settings; the defaults when None

    Returns
    -------
    SincNormResult
        The value with the quadrature and tail errors
    """
    _require_finite_p(p)
    cfg = cfg or QuadratureConfig()
    cutoff = choose_cutoff(p, cfg.abs_tol, cfg.tail_policy)
    lobes = round(cutoff / math.pi)
    if lobes > MAX_LOBES:
        hint = "loosen the tolerance"
        if cfg.tail_policy == TailPolicy.MAJORANT:
            hint += " or use the averaged tail policy"
        raise DomainError(
            f"I({p}) at tol = {cfg.abs_tol} needs {lobes} lobes, more "
            f"than {MAX_LOBES}; {hint}"
        )
    logger.debug(
        "I(%r): %s tail, cutoff %.6g (%d lobes)",
        p,
        cfg.tail_policy.value,
        cutoff,
        lobes,
    )

    def integrand(t):
        return _sinc_pow(t, p)

    values = []
    errors = []
    for k in range(lobes):
        res = integrate_adaptive(
            integrand,
            k * math.pi,
            (k + 1) * math.pi,
            cfg,
            points=_peak_points(p) if k == 0 else None,
        )
        if not res.converged:
            raise ConvergenceError(
                f"Quadrature of lobe {k} did not converge for p = {p}",
                lobe=k,
                result=res,
            )
        values.append(res.value)
        errors.append(res.error_estimate)

    scale = 2.0 / math.pi
    value = scale * math.fsum(values)
    quad_error = scale * math.fsum(errors)
    if cfg.tail_policy == TailPolicy.AVERAGED:
        estimate, tail = averaged_tail(p, cutoff)
        value += estimate
    else:
        tail = tail_bound(p, cutoff)
    return SincNormResult(
        p=p,
        value=value,
        quad_error=quad_error,
        tail_bound=tail,
        cutoff=cutoff,
        total_error=quad_error + tail,
    )


def central_integral(p: float, cfg: QuadratureConfig | None = None) -> float:
    """
    The central part (1/pi) int_{-6/sqrt5}^{6/sqrt5} (sin^2 t / t^2)^p dt.

    Parameters
    ----------
    p : float
        Exponent, p >= 1
    cfg : QuadratureConfig | None
        Quadrature settings; the defaults when None

    Returns
    -------
    float
        The central part of I(p)
    """
    _require_finite_p(p)
    cfg = cfg or QuadratureConfig()
    res = integrate_adaptive(
        lambda t: _sinc_pow(t, p), 0.0, BALL_CUTOFF, cfg, _peak_points(p)
    )
    if not res.converged:
        raise ConvergenceError(
            f"Quadrature over the central interval did not converge "
            f"for p = {p}",
            result=res,
        )
    return 2.0 / math.pi * res.value
