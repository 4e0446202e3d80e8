from bisect import bisect_right
from functools import lru_cache
from itertools import pairwise
import logging
import math
import numpy as np
from sympy import Rational as SympyRational
from sympy.core.sympify import SympifyError
from sympy.polys.densearith import dup_sub
from sympy.polys.densetools import dup_shift
from sympy.polys.domains import QQ
from sympy.polys.polyerrors import CoercionFailed

from sinclp.errors import ArgumentError, DomainError
from sinclp.models import PiecewisePoly, Rational

logger = logging.getLogger(__name__)

HALF = QQ(1, 2)


def as_rational(value) -> Rational:
    """
    Convert a number or a literal to an exact rational.

    Parameters
    ----------
    value : int | float | str | Rational
        Integers and rationals are taken as they are, floats by their exact
        binary value, strings such as "3/4", "-2" or "0.125" are parsed.

    Returns
    -------
    Rational
        The exact value
    """
    if isinstance(value, bool):
        raise ArgumentError(f"Not a rational number: {value!r}")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ArgumentError(f"Not a rational number: {value!r}")
        return QQ(*value.as_integer_ratio())
    if isinstance(value, str):
        try:
            return QQ.from_sympy(SympyRational(value.strip()))
        except (
            CoercionFailed,
            SympifyError,
            TypeError,
            ValueError,
            ZeroDivisionError,
        ):
            raise ArgumentError(f"Not a rational literal: {value!r}")
    try:
        return QQ.convert(value)
    except CoercionFailed:
        raise ArgumentError(f"Not a rational number: {value!r}")


def to_float(value: Rational) -> float:
    """
    Correctly rounded float of an exact rational.

    Parameters
    ----------
    value : Rational
        Exact value, possibly with very large numerator and denominator

    Returns
    -------
    float
        The nearest double
    """
    return int(QQ.numer(value)) / int(QQ.denom(value))


def make_box() -> PiecewisePoly:
    """
    The indicator of [-1/2, 1/2] as a degree-0 piecewise polynomial.

    Returns
    -------
    PiecewisePoly
        beta^0
    """
    return PiecewisePoly(
        breakpoints=(-HALF, HALF),
        pieces=((QQ.one,),),
        degree=0,
    )


def _primitive_from(f, primitives, total, x0):
    """
    F(x0 + u) as a polynomial in u, F the antiderivative of f.

    Valid while x0 + u stays within the interval of f that contains x0.
    """
    ii = bisect_right(f.breakpoints, x0) - 1
    if ii < 0:
        return []
    if ii >= len(f.pieces):
        return [total] if total else []
    return dup_shift(primitives[ii], x0 - f.breakpoints[ii], QQ)


def convolve_box(f: PiecewisePoly) -> PiecewisePoly:
    """
    Convolve with the unit box: x -> int_{x-1/2}^{x+1/2} f(t) dt.

    The result is F(x + 1/2) - F(x - 1/2) with F the exact piecewise
    antiderivative of f. Its knots are the knots of f shifted by -1/2 and
    by +1/2, so that on every new interval both shifted arguments stay
    inside a single interval of f.

    Parameters
    ----------
    f : PiecewisePoly
        The function to smooth

    Returns
    -------
    PiecewisePoly
        Degree one higher, support wider by 1
    """
    knots = sorted(
        {k - HALF for k in f.breakpoints} | {k + HALF for k in f.breakpoints}
    )
    primitives = f.antiderivative_pieces()
    total = f.integral()
    pieces = []
    for left, _ in pairwise(knots):
        upper = _primitive_from(f, primitives, total, left + HALF)
        lower = _primitive_from(f, primitives, total, left - HALF)
        pieces.append(tuple(dup_sub(upper, lower, QQ)))
    return PiecewisePoly(
        breakpoints=tuple(knots),
        pieces=tuple(pieces),
        degree=f.degree + 1,
    )


@lru_cache(maxsize=None)
def bspline(n: int) -> PiecewisePoly:
    """
    The symmetric B-spline beta^n, the (n+1)-fold convolution of the box.

    Built by n applications of `convolve_box` to `make_box()`; memoized.

    Parameters
    ----------
    n : int
        Degree, n >= 0

    Returns
    -------
    PiecewisePoly
        beta^n, supported on [-(n+1)/2, (n+1)/2]
    """
    if n < 0:
        raise DomainError(f"B-spline degree must be non-negative, got {n}")
    if n == 0:
        return make_box()
    logger.debug("Building beta^%d", n)
    return convolve_box(bspline(n - 1))


def closed_form_eval(n: int, x) -> Rational:
    """
    Truncated power form of beta^n(x), independent of `bspline`.

    beta^n(x) = (1/n!) sum_{k=0}^{n+1} (-1)^k C(n+1, k)
    (x + (n+1)/2 - k)_+^n, where (y)_+^n = y^n for y >= 0 and 0 otherwise.
    Taking y >= 0 (and 0^0 = 1) makes the degree-0 case the box on
    [-1/2, 1/2), in agreement with `PiecewisePoly.evaluate`.

    Parameters
    ----------
    n : int
        Degree, n >= 0
    x : Rational
        Evaluation point

    Returns
    -------
    Rational
        beta^n(x)
    """
    if n < 0:
        raise DomainError(f"B-spline degree must be non-negative, got {n}")
    x = as_rational(x)
    shift = QQ(n + 1, 2)
    total = QQ.zero
    for k in range(n + 2):
        base = x + shift - k
        if base < 0:
            break
        term = QQ(math.comb(n + 1, k)) * (QQ.one if n == 0 else base**n)
        total += -term if k % 2 else term
    return total * QQ(1, math.factorial(n))


def evaluate(f: PiecewisePoly, x) -> Rational:
    """
    Exact value of a piecewise polynomial (0 outside its support).

    Parameters
    ----------
    f : PiecewisePoly
        The function
    x : Rational
        Evaluation point

    Returns
    -------
    Rational
        f(x)
    """
    return f.evaluate(as_rational(x))


@lru_cache(maxsize=None)
def central(n: int) -> Rational:
    """
    The central value beta^n(0).

    Computed from the closed form at 0, a sum of at most n + 2 terms, so
    the full beta^n is never built.

    Parameters
    ----------
    n : int
        Degree, n >= 0

    Returns
    -------
    Rational
        beta^n(0)
    """
    return closed_form_eval(n, QQ.zero)


def exact_lp_integer(p: int) -> Rational:
    """
    Exact I(p) for a positive integer p.

    The Fourier transform of beta^m is sinc^(m+1), so Plancherel gives
    I(p) = int beta^(p-1)(s)^2 ds = beta^(2p-1)(0).

    Parameters
    ----------
    p : int
        Exponent, p >= 1

    Returns
    -------
    Rational
        I(p)
    """
    if isinstance(p, float) and p.is_integer():
        p = int(p)
    if not isinstance(p, int) or isinstance(p, bool) or p < 1:
        raise DomainError(f"Exact I(p) needs an integer p >= 1, got {p!r}")
    return central(2 * p - 1)


def autocorrelation_check(n: int) -> bool:
    """
    Check int beta^n(s)^2 ds == beta^(2n+1)(0) in exact arithmetic.

    Parameters
    ----------
    n : int
        Degree, n >= 0

    Returns
    -------
    bool
        True when both sides are the same rational
    """
    return bspline(n).squared_integral() == central(2 * n + 1)


def unser_scaled_central(n: int) -> float:
    """
    sqrt(pi (n+1) / 6) * beta^n(0), which tends to 1 as n grows.

    Parameters
    ----------
    n : int
        Degree, n >= 0

    Returns
    -------
    float
        The normalised central value
    """
    return math.sqrt(math.pi * (n + 1) / 6.0) * to_float(central(n))


def gaussian_profile_deviation(n: int, grid) -> float:
    """
    Largest deviation of the rescaled beta^n from exp(-x^2/2) on a grid.

    Computes max |sqrt(pi (n+1)/6) beta^n(sigma x) - exp(-x^2/2)| with
    sigma = sqrt((n+1)/12). The spline is evaluated exactly at the binary
    rational nearest to sigma * x.

    Parameters
    ----------
    n : int
        Degree, n >= 1
    grid : Iterable[float]
        Finite sample points

    Returns
    -------
    float
        The sup-norm deviation over the grid
    """
    if n < 1:
        raise DomainError(f"Gaussian profile needs n >= 1, got {n}")
    grid = np.asarray(list(grid), dtype=np.float64)
    if grid.size == 0 or not np.isfinite(grid).all():
        raise ArgumentError("Grid points must be finite, at least one")
    spline = bspline(n)
    sigma = math.sqrt((n + 1) / 12.0)
    scale = math.sqrt(math.pi * (n + 1) / 6.0)
    values = np.array(
        [to_float(spline(as_rational(float(sigma * x)))) for x in grid]
    )
    return float(np.max(np.abs(scale * values - np.exp(-0.5 * grid**2))))
