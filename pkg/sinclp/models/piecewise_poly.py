from bisect import bisect_right
from dataclasses import dataclass
from itertools import pairwise
from sympy.polys.densearith import dup_add_ground, dup_sqr
from sympy.polys.densetools import dup_diff, dup_eval, dup_integrate
from sympy.polys.domains import QQ

from sinclp.errors import ArgumentError

# Exact scalar of the spline engine (gmpy2.mpq or sympy's PythonMPQ)
Rational = QQ.dtype


@dataclass(frozen=True)
class PiecewisePoly:
    """
    A compactly supported piecewise polynomial with rational data.

    On the interval [breakpoints[i], breakpoints[i+1]) the function equals
    pieces[i] evaluated at u = x - breakpoints[i]. Each piece is a dense
    coefficient list over QQ in the order used by `sympy.polys` (highest
    power first, [] is the zero polynomial). Outside
    [breakpoints[0], breakpoints[-1]) the function is 0.

    Attributes
    ----------
    breakpoints : tuple[Rational, ...]
        Strictly increasing knots, support endpoints included
    pieces : tuple[tuple[Rational, ...], ...]
        One coefficient list per inter-knot interval
    degree : int
        Polynomial degree

    Methods
    -------
    evaluate(x: Rational)
        Exact value at x. Also available as a call.
    support()
        The support endpoints.
    widths()
        Lengths of the inter-knot intervals.
    integral()
        Exact integral over the real line.
    squared_integral()
        Exact integral of the square over the real line.
    antiderivative_pieces()
        Pieces of the antiderivative that vanishes left of the support.
    derivative_mismatches(max_order: int)
        Interior knots at which a derivative jumps.
    """

    breakpoints: tuple
    pieces: tuple
    degree: int

    def __post_init__(self):
        if len(self.pieces) != len(self.breakpoints) - 1:
            raise ArgumentError(
                f"{len(self.breakpoints)} breakpoints need "
                f"{len(self.breakpoints) - 1} pieces, got {len(self.pieces)}"
            )
        if any(a >= b for a, b in pairwise(self.breakpoints)):
            raise ArgumentError("Breakpoints must be strictly increasing")

    def __call__(self, x) -> Rational:
        return self.evaluate(x)

    def evaluate(self, x) -> Rational:
        """
        Exact value at x.

        The intervals are closed on the left, so for degree 0 the box takes
        the value 1 on [-1/2, 1/2) and 0 at 1/2.

        Parameters
        ----------
        x : Rational
            Evaluation point

        Returns
        -------
        Rational
            The value of the function at x
        """
        x = QQ.convert(x)
        ii = bisect_right(self.breakpoints, x) - 1
        if ii < 0 or ii >= len(self.pieces):
            return QQ.zero
        return dup_eval(list(self.pieces[ii]), x - self.breakpoints[ii], QQ)

    def support(self) -> tuple:
        """
        The support endpoints.

        Returns
        -------
        tuple[Rational, Rational]
            First and last breakpoint
        """
        return self.breakpoints[0], self.breakpoints[-1]

    def widths(self) -> list:
        """
        Lengths of the inter-knot intervals.

        Returns
        -------
        list[Rational]
            breakpoints[i+1] - breakpoints[i]
        """
        return [b - a for a, b in pairwise(self.breakpoints)]

    def integral(self) -> Rational:
        """
        Exact integral over the real line.

        Returns
        -------
        Rational
            Sum of the integrals of the pieces
        """
        total = QQ.zero
        for piece, width in zip(self.pieces, self.widths()):
            total += dup_eval(dup_integrate(list(piece), 1, QQ), width, QQ)
        return total

    def squared_integral(self) -> Rational:
        """
        Exact integral of the square over the real line.

        Returns
        -------
        Rational
            Sum over the pieces of the integral of the squared piece
        """
        total = QQ.zero
        for piece, width in zip(self.pieces, self.widths()):
            square = dup_sqr(list(piece), QQ)
            total += dup_eval(dup_integrate(square, 1, QQ), width, QQ)
        return total

    def antiderivative_pieces(self) -> list:
        """
        Pieces of the antiderivative that vanishes left of the support.

        Piece i is the antiderivative on the i-th interval, in the same
        shifted variable as the pieces themselves. Its constant term is the
        mass accumulated to the left of breakpoints[i].

        Returns
        -------
        list[list[Rational]]
            Dense coefficient lists, one per interval
        """
        result = []
        mass = QQ.zero
        for piece, width in zip(self.pieces, self.widths()):
            primitive = dup_add_ground(
                dup_integrate(list(piece), 1, QQ), mass, QQ
            )
            result.append(primitive)
            mass = dup_eval(primitive, width, QQ)
        return result

    def derivative_mismatches(self, max_order: int) -> list:
        """
        Interior knots at which a derivative jumps.

        The comparison is exact: the left piece is evaluated at the right
        end of its interval, the right piece at u = 0.

        Parameters
        ----------
        max_order : int
            Highest derivative order to compare (0 compares values)

        Returns
        -------
        list[tuple[Rational, int]]
            (knot, order) pairs with a jump; empty for a C^max_order
            function
        """
        mismatches = []
        widths = self.widths()
        for ii in range(1, len(self.pieces)):
            left = list(self.pieces[ii - 1])
            right = list(self.pieces[ii])
            for order in range(max_order + 1):
                left_value = dup_eval(
                    dup_diff(left, order, QQ), widths[ii - 1], QQ
                )
                right_value = dup_eval(dup_diff(right, order, QQ), QQ.zero, QQ)
                if left_value != right_value:
                    mismatches.append((self.breakpoints[ii], order))
        return mismatches
