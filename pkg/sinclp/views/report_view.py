import csv
import sys

from sinclp.core import to_float
from sinclp.logic.serialization import (
    BOUND_CSV_HEADER,
    INTEGRAL_CSV_HEADER,
    bound_report_row,
    format_real,
    integral_row,
    rational_str,
    to_json,
)
from sinclp.models import OutputFormat

TEXT_DIGITS = 6
P0_TEXT_DIGITS = 12


class ReportView:
    """
    Renders results to a text stream as text, CSV, or JSON.

    Text output is meant for people (6 significant digits), CSV output has
    17 significant digits, and JSON output is one document per call.

    Attributes
    ----------
    stream : TextIO
        Destination of the output
    """

    def __init__(self, stream=None):
        self.stream = stream if stream is not None else sys.stdout

    def _write(self, text: str):
        self.stream.write(text)
        if not text.endswith("\n"):
            self.stream.write("\n")

    def _write_csv(self, header, rows):
        writer = csv.writer(self.stream, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)

    def _write_pairs(self, pairs):
        width = max(len(key) for key, _ in pairs)
        for key, value in pairs:
            self._write(f"{key:<{width}}  {value}")

    def _write_table(self, header, rows):
        widths = [
            max(len(h), *(len(r[ii]) for r in rows)) if rows else len(h)
            for ii, h in enumerate(header)
        ]
        for line in [header, *rows]:
            cells = (f"{c:>{w}}" for c, w in zip(line, widths))
            self._write("  ".join(cells).rstrip())

    def show_integral(self, result, fmt: OutputFormat):
        """
        Render a computed I(p).

        Parameters
        ----------
        result : SincNormResult
            The integral
        fmt : OutputFormat
            Output format
        """
        if fmt == OutputFormat.JSON:
            self._write(to_json(result))
        elif fmt == OutputFormat.CSV:
            self._write_csv(INTEGRAL_CSV_HEADER, [integral_row(result)])
        else:
            self._write_pairs(
                list(
                    zip(
                        INTEGRAL_CSV_HEADER,
                        integral_row(result, TEXT_DIGITS),
                    )
                )
            )

    def show_bound_reports(self, reports, fmt: OutputFormat, single=False):
        """
        Render bound reports, one row per exponent.

        Parameters
        ----------
        reports : list[BoundReport]
            Reports in ascending p
        fmt : OutputFormat
            Output format
        single : bool
            Render the only report as an object rather than a list
        """
        if fmt == OutputFormat.JSON:
            self._write(to_json(reports[0] if single else list(reports)))
        elif fmt == OutputFormat.CSV:
            self._write_csv(
                BOUND_CSV_HEADER, [bound_report_row(r) for r in reports]
            )
        elif single:
            self._write_pairs(
                list(
                    zip(
                        BOUND_CSV_HEADER,
                        bound_report_row(reports[0], TEXT_DIGITS),
                    )
                )
            )
        else:
            self._write_table(
                BOUND_CSV_HEADER,
                [bound_report_row(r, TEXT_DIGITS) for r in reports],
            )

    def show_p0(self, root: float, residual: float, fmt: OutputFormat):
        """Render p0 and the residual of its equation."""
        if fmt == OutputFormat.JSON:
            self._write(to_json({"p0": root, "residual": residual}))
        elif fmt == OutputFormat.CSV:
            self._write_csv(
                ["p0", "residual"],
                [[format_real(root), format_real(residual)]],
            )
        else:
            self._write_pairs(
                [
                    ("p0", format_real(root, P0_TEXT_DIGITS)),
                    ("residual", format_real(residual, TEXT_DIGITS)),
                ]
            )

    def show_bspline(self, n: int, x, value, fmt: OutputFormat):
        """
        Render an exact B-spline value.

        Parameters
        ----------
        n : int
            Degree
        x : Rational
            Evaluation point
        value : Rational
            beta^n(x)
        fmt : OutputFormat
            Output format
        """
        exact = rational_str(value)
        approx = to_float(value)
        decimal = format_real(approx)
        if fmt == OutputFormat.JSON:
            self._write(
                to_json(
                    {
                        "n": n,
                        "x": x,
                        "value": value,
                        "decimal": approx,
                    }
                )
            )
        elif fmt == OutputFormat.CSV:
            self._write_csv(
                ["n", "x", "value", "decimal"],
                [[str(n), rational_str(x), exact, decimal]],
            )
        else:
            self._write(f"{exact} ({decimal})")

    def show_verification(self, summary, fmt: OutputFormat):
        """
        Render the outcome of a verification run.

        Text output is one "CHECK p OBSERVED REQUIRED" line per failure
        followed by a PASSED or FAILED line.
        """
        if fmt == OutputFormat.JSON:
            self._write(to_json(summary))
            return
        if fmt == OutputFormat.CSV:
            self._write_csv(
                ["check", "p", "observed", "required"],
                [
                    [
                        f.check,
                        format_real(f.p),
                        format_real(f.observed),
                        format_real(f.required),
                    ]
                    for f in summary.failures
                ],
            )
            return
        for f in summary.failures:
            self._write(
                f"{f.check} {format_real(f.p)} {format_real(f.observed)} "
                f"{format_real(f.required)}"
            )
        if summary.passed:
            self._write(
                f"PASSED {summary.checks_run} checks on "
                f"{len(summary.grid)} grid points"
            )
        else:
            self._write(
                f"FAILED {len(summary.failures)} of "
                f"{summary.checks_run} checks"
            )

    def show_asymptote(self, rows, profile, fmt: OutputFormat):
        """
        Render the approach of I(p) to sqrt(3/pi)/sqrt(p).

        Parameters
        ----------
        rows : list[tuple[int, Rational, float, float]]
            p, exact I(p), sqrt(3/pi)/sqrt(p), and their ratio
        profile : list[tuple[int, float]]
            Degree n and the Gaussian profile deviation of beta^n
        fmt : OutputFormat
            Output format
        """
        if fmt == OutputFormat.JSON:
            self._write(
                to_json(
                    {
                        "rows": [
                            {
                                "p": p,
                                "exact": exact,
                                "asymptote": asymptote,
                                "ratio": ratio,
                            }
                            for p, exact, asymptote, ratio in rows
                        ],
                        "gaussian_profile": [
                            {"n": n, "deviation": deviation}
                            for n, deviation in profile
                        ],
                    }
                )
            )
            return

        digits = TEXT_DIGITS if fmt == OutputFormat.TEXT else 17
        header = ["p", "exact", "asymptote", "ratio"]
        table = [
            [
                str(p),
                rational_str(exact),
                format_real(asymptote, digits),
                format_real(ratio, digits),
            ]
            for p, exact, asymptote, ratio in rows
        ]
        profile_header = ["n", "profile_deviation"]
        profile_table = [[str(n), format_real(d, digits)] for n, d in profile]
        if fmt == OutputFormat.CSV:
            self._write_csv(header, table)
            if profile_table:
                self._write_csv(profile_header, profile_table)
        else:
            self._write_table(header, table)
            if profile_table:
                self._write("")
                self._write_table(profile_header, profile_table)
