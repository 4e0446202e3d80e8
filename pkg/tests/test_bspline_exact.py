import math
import numpy as np
import pytest
from sympy.polys.domains import QQ

from sinclp.core import (
    as_rational,
    autocorrelation_check,
    bspline,
    central,
    closed_form_eval,
    convolve_box,
    evaluate,
    exact_lp_integer,
    gaussian_profile_deviation,
    make_box,
    to_float,
    unser_scaled_central,
)
from sinclp.errors import ArgumentError, DomainError
from sinclp.models import PiecewisePoly


class TestRational:
    """Conversions between numbers, literals, and exact rationals."""

    @pytest.mark.parametrize(
        "literal, expected",
        [
            ("3/4", QQ(3, 4)),
            ("-2", QQ(-2)),
            ("0.125", QQ(1, 8)),
            (" 5 ", QQ(5)),
            (0.1, QQ(*(0.1).as_integer_ratio())),
            (7, QQ(7)),
        ],
    )
    def test_parse(self, literal, expected):
        assert as_rational(literal) == expected

    @pytest.mark.parametrize("literal", ["abc", "1/0", "", True, math.nan])
    def test_reject(self, literal):
        with pytest.raises(ArgumentError):
            as_rational(literal)

    def test_to_float_is_correctly_rounded(self):
        assert to_float(QQ(1, 3)) == 1.0 / 3.0
        assert to_float(QQ(10**400 + 1, 10**400)) == 1.0


class TestPiecewisePoly:
    """Construction and exact operations of piecewise polynomials."""

    def test_box(self):
        box = make_box()
        assert box(QQ(0)) == 1
        assert box(QQ(-1, 2)) == 1
        assert box(QQ(1, 2)) == 0
        assert box.integral() == 1

    def test_mismatched_pieces_rejected(self):
        with pytest.raises(ArgumentError):
            PiecewisePoly(breakpoints=(QQ(0), QQ(1)), pieces=(), degree=0)

    def test_decreasing_breakpoints_rejected(self):
        with pytest.raises(ArgumentError):
            PiecewisePoly(
                breakpoints=(QQ(1), QQ(0)), pieces=((QQ(1),),), degree=0
            )

    def test_convolution_of_box_is_hat(self):
        hat = convolve_box(make_box())
        assert hat.support() == (QQ(-1), QQ(1))
        assert hat(QQ(0)) == 1
        assert hat(QQ(1, 2)) == QQ(1, 2)
        assert hat(QQ(-3, 4)) == QQ(1, 4)

    def test_antiderivative_reaches_total_mass(self):
        f = bspline(2)
        primitives = f.antiderivative_pieces()
        last = f.widths()[-1]
        total = sum(
            (c * last ** (len(primitives[-1]) - 1 - ii))
            for ii, c in enumerate(primitives[-1])
        )
        assert total == f.integral() == 1


class TestBSpline:
    """The symmetric B-splines beta^n."""

    @pytest.mark.parametrize(
        "n, x, value",
        [
            (0, "0", QQ(1)),
            (1, "1/2", QQ(1, 2)),
            (2, "0", QQ(3, 4)),
            (2, "1", QQ(1, 8)),
            (3, "0", QQ(2, 3)),
            (3, "1", QQ(1, 6)),
            (2, "5", QQ(0)),
        ],
    )
    def test_known_values(self, n, x, value):
        assert evaluate(bspline(n), x) == value
        assert closed_form_eval(n, x) == value

    @pytest.mark.parametrize("n", range(0, 21))
    def test_support_and_mass(self, n):
        spline = bspline(n)
        half = QQ(n + 1, 2)
        assert spline.support() == (-half, half)
        assert spline.degree == n
        assert spline.integral() == 1

    @pytest.mark.parametrize("n", range(0, 13))
    def test_recursion_matches_closed_form(self, n):
        spline = bspline(n)
        lo, hi = spline.support()
        # 25 points spanning the support, knots and interior points alike
        for k in range(25):
            x = lo + (hi - lo) * QQ(k, 24)
            assert spline(x) == closed_form_eval(n, x), (n, x)
        for k in range(-4 * (n + 2), 4 * (n + 2) + 1):
            x = QQ(k, 8)
            assert spline(x) == closed_form_eval(n, x), (n, x)
        assert spline(lo - 1) == closed_form_eval(n, lo - 1) == 0
        assert spline(hi) == 0

    @pytest.mark.parametrize("n", range(1, 7))
    def test_symmetric(self, n):
        spline = bspline(n)
        for k in range(1, 4 * (n + 1)):
            x = QQ(k, 7)
            assert spline(x) == spline(-x)

    @pytest.mark.parametrize("n", range(0, 6))
    def test_partition_of_unity(self, n):
        spline = bspline(n)
        x = QQ(1, 3)
        total = sum(spline(x - k) for k in range(-n - 2, n + 3))
        assert total == 1

    @pytest.mark.parametrize("n", range(1, 11))
    def test_smoothness(self, n):
        spline = bspline(n)
        assert spline.derivative_mismatches(n - 1) == []
        jumps = spline.derivative_mismatches(n)
        assert jumps and all(order == n for _, order in jumps)

    def test_negative_degree(self):
        with pytest.raises(DomainError):
            bspline(-1)
        with pytest.raises(DomainError):
            closed_form_eval(-1, 0)

    def test_bad_literal(self):
        with pytest.raises(ArgumentError):
            evaluate(bspline(1), "one half")


class TestIntegerOracle:
    """Exact I(p) at integer p from the central B-spline values."""

    @pytest.mark.parametrize(
        "p, value",
        [
            (1, QQ(1)),
            (2, QQ(2, 3)),
            (3, QQ(11, 20)),
            (4, QQ(151, 315)),
            (5, QQ(15619, 36288)),
        ],
    )
    def test_known_integrals(self, p, value):
        assert exact_lp_integer(p) == value

    def test_integral_float_accepted(self):
        assert exact_lp_integer(3.0) == QQ(11, 20)

    @pytest.mark.parametrize("p", [0, -1, 2.5, True])
    def test_reject(self, p):
        with pytest.raises(DomainError):
            exact_lp_integer(p)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_autocorrelation(self, n):
        assert autocorrelation_check(n)

    def test_central_decreasing(self):
        values = [central(n) for n in range(1, 40, 2)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_large_degree_central_stays_exact(self):
        value = exact_lp_integer(100)
        assert 0 < value < 1
        assert to_float(value) == pytest.approx(
            math.sqrt(3.0 / math.pi) / 10.0, rel=2e-3
        )


class TestGaussianProfile:
    """Convergence of the rescaled B-splines to the Gaussian."""

    def test_scaled_central_tends_to_one(self):
        deviations = [abs(unser_scaled_central(n) - 1) for n in (1, 9, 99)]
        assert deviations[0] > deviations[1] > deviations[2]
        assert deviations[2] < 1e-2

    def test_profile_deviation_shrinks(self):
        grid = np.linspace(-3.0, 3.0, 61)
        d10 = gaussian_profile_deviation(10, grid)
        d20 = gaussian_profile_deviation(20, grid)
        d40 = gaussian_profile_deviation(40, grid)
        assert d40 < d20 < d10 < 0.1

    def test_profile_needs_positive_degree(self):
        with pytest.raises(DomainError):
            gaussian_profile_deviation(0, [0.0])
