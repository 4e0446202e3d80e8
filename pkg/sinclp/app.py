import argparse
from dataclasses import replace
import logging
import sys

from sinclp.controllers import CommandController
from sinclp.errors import ArgumentError, DomainError, SincLpError
from sinclp.models import OutputFormat, TailPolicy
from sinclp.models.factories import (
    mk_default_config,
    mk_default_grid,
    mk_grid,
)
from sinclp.views import ReportView

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


class SincLpApplication:
    """
    Command line application.

    Builds the argument parser, configures logging, and dispatches the
    subcommands to a `CommandController`.

    Attributes
    ----------
    parser : argparse.ArgumentParser
        Parser of the `sinclp` command line
    stream : TextIO
        Destination of the rendered results
    """

    def __init__(self, stream=None):
        self.stream = stream if stream is not None else sys.stdout
        self.parser = self._build_parser()

    @staticmethod
    def _build_parser() -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument(
            "--format",
            choices=[f.value for f in OutputFormat],
            default=OutputFormat.TEXT.value,
            help="output format (default: text)",
        )
        common.add_argument(
            "--tol",
            type=float,
            default=None,
            help="quadrature tolerance (default: 1e-12)",
        )
        common.add_argument(
            "--policy",
            choices=[t.value for t in TailPolicy],
            default=None,
            help="treatment of the integrand beyond the cutoff",
        )
        common.add_argument(
            "--jobs",
            type=int,
            default=1,
            help="processes used by the grid commands",
        )
        common.add_argument(
            "--progress",
            action="store_true",
            help="show a progress bar on stderr",
        )
        common.add_argument(
            "-v", "--verbose", action="store_true", help="debug logging"
        )

        parser = argparse.ArgumentParser(
            prog="sinclp",
            description="The sinc L_p integral, its bounds, and B-splines.",
        )
        commands = parser.add_subparsers(dest="command", required=True)

        integral = commands.add_parser(
            "integral", parents=[common], help="compute I(p)"
        )
        integral.add_argument("--p", type=float, required=True)

        bounds = commands.add_parser(
            "bounds", parents=[common], help="I(p) against its bounds"
        )
        bounds.add_argument("--p", type=float, required=True)

        commands.add_parser(
            "p0", parents=[common], help="the exponent where C(p) switches"
        )

        table = commands.add_parser(
            "table", parents=[common], help="bound reports over a grid"
        )
        table.add_argument("--grid", required=True, help="start:stop:step")

        spline = commands.add_parser(
            "bspline", parents=[common], help="exact B-spline value"
        )
        spline.add_argument("--n", type=int, required=True)
        spline.add_argument("--x", required=True, help='rational, e.g. "1/2"')

        verify = commands.add_parser(
            "verify", parents=[common], help="run every check over a grid"
        )
        verify.add_argument(
            "--grid",
            default=None,
            help="start:stop:step (default: 1:10:0.1 and 15:100:5)",
        )

        asymptote = commands.add_parser(
            "asymptote",
            parents=[common],
            help="exact I(p) against sqrt(3/pi)/sqrt(p)",
        )
        asymptote.add_argument("--n-max", type=int, default=64)
        return parser

    def _dispatch(self, args, controller: CommandController) -> int:
        fmt = OutputFormat(args.format)
        match args.command:
            case "integral":
                return controller.cmd_integral(args.p, fmt, args.tol)
            case "bounds":
                return controller.cmd_bounds(args.p, fmt, args.tol)
            case "p0":
                return controller.cmd_p0(fmt)
            case "table":
                return controller.cmd_table(mk_grid(args.grid), fmt, args.tol)
            case "bspline":
                return controller.cmd_bspline(args.n, args.x, fmt)
            case "verify":
                grid = mk_grid(args.grid) if args.grid else mk_default_grid()
                return controller.cmd_verify(grid, fmt, args.tol)
            case "asymptote":
                return controller.cmd_asymptote(args.n_max, fmt)

    def run(self, argv=None) -> int:
        """
        Parse the command line and run the subcommand.

        Parameters
        ----------
        argv : list[str] | None
            Arguments without the program name, `sys.argv[1:]` when None

        Returns
        -------
        int
            Exit code: 0 on success, 1 on a failed check, 2 on a usage
            error (raised as SystemExit by the parser)
        """
        args = self.parser.parse_args(argv)
        logging.basicConfig(
            level=logging.DEBUG if args.verbose else logging.WARNING,
            format=LOG_FORMAT,
            stream=sys.stderr,
            force=True,
        )
        try:
            config = mk_default_config()
            if args.policy is not None:
                config = replace(config, tail_policy=args.policy)
            controller = CommandController(
                ReportView(self.stream),
                config,
                jobs=args.jobs,
                progress=args.progress,
            )
            return self._dispatch(args, controller)
        except (ArgumentError, DomainError) as e:
            self.parser.error(str(e))
        except SincLpError as e:
            logger.error("%s", e)
            return 1


def main(argv=None):
    """
    Application entry point.

    Creates and runs the sinclp application.

    Returns
    -------
    int
        Application exit code
    """
    # Create and run the application
    app = SincLpApplication()
    return app.run(argv)


if __name__ == "__main__":
    sys.exit(main())
