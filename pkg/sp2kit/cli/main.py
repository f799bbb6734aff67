#!/usr/bin/env python3
"""
Command-line front end for sp2kit.

Usage:
    sp2kit decompose A,B,C,D
    sp2kit power A,B,C,D N [--oracle]
    sp2kit chain FILE [--csv]
    sp2kit sweep --theta START STOP --lambda START STOP --steps N [--workers W]
    sp2kit oscillator ETA KMAX [--oracle]

Common options (after the subcommand):
    --tolerance EPS   parabolic band width; falls back to SP2KIT_TOLERANCE
    --output PATH     write the result to PATH instead of standard output
    --log-level LVL   error, warn, info, debug or trace; falls back to SP2KIT_LOG

Matrices are row-major. Quote a matrix whose first entry is negative with a leading
space (" -1,0,0,-1") so it is not read as an option.

Exit codes: 0 success, 1 parse or usage error, 2 domain violation, 3 numeric overflow.
"""

import argparse
import logging
import sys

from sp2kit.cli import handlers
from sp2kit.cli.records import emit
from sp2kit.common.error import EXIT_OK, EXIT_USAGE, ParseError, Sp2Error
from sp2kit.common.log_setup import init_logging
from sp2kit.config import load_config

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting with status 2."""

    def error(self, message):
        raise ParseError(message, usage=self.format_usage().strip())


def _non_negative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _positive_int(text):
    value = _non_negative_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"expected a value in (0, 1), got {value}")
    return value


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--tolerance", type=_positive_float, default=None,
                        help="parabolic band width around |half-trace| = 1")
    common.add_argument("--output", default=None, help="write the result to this file")
    common.add_argument("--log-level", default=None, help="error, warn, info, debug or trace")

    parser = _Parser(prog="sp2kit", description="Decompose, classify and power Sp(2) matrices")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="Bargmann and Wigner data of one matrix")
    p.add_argument("matrix", help="row-major A,B,C,D")
    p.set_defaults(handler=handlers.cmd_decompose)

    p = sub.add_parser("power", parents=[common], help="closed-form n-th power")
    p.add_argument("matrix", help="row-major A,B,C,D")
    p.add_argument("n", type=_non_negative_int)
    p.add_argument("--oracle", action="store_true", help="compare with binary exponentiation")
    p.set_defaults(handler=handlers.cmd_power)

    p = sub.add_parser("chain", parents=[common], help="product of a chain file, repeated")
    p.add_argument("path", help="chain JSON file")
    p.add_argument("--csv", action="store_true", help="emit the per-repeat table as CSV")
    p.set_defaults(handler=handlers.cmd_chain)

    p = sub.add_parser("sweep", parents=[common], help="classify core matrices over a grid")
    p.add_argument("--theta", nargs=2, type=float, required=True, metavar=("START", "STOP"))
    p.add_argument("--lambda", dest="lam", nargs=2, type=float, required=True, metavar=("START", "STOP"))
    p.add_argument("--steps", type=int, required=True, help="grid points per axis")
    p.add_argument("--workers", type=_positive_int, default=None, help="worker processes")
    p.set_defaults(handler=handlers.cmd_sweep)

    p = sub.add_parser("oscillator", parents=[common], help="squeezed-state expansion coefficients")
    p.add_argument("eta", type=float)
    p.add_argument("kmax", type=_non_negative_int)
    p.add_argument("--oracle", action="store_true", help="add the quadrature overlap column")
    p.set_defaults(handler=handlers.cmd_oscillator)
    return parser


def main(argv=None):
    """
    Run one subcommand.

    Args:
        argv: Argument list; defaults to ``sys.argv[1:]``.

    Returns:
        The process exit code.
    """
    try:
        args = build_parser().parse_args(argv)
        settings = load_config()
        init_logging(args.log_level or settings.logging.level)
    except (Sp2Error, ValueError) as exc:
        print(f"sp2kit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    tolerance = args.tolerance if args.tolerance is not None else settings.numerics.parabolic_tolerance
    ctx = handlers.RunContext(settings=settings, parabolic_tolerance=tolerance)
    logger.info("running %s", args.command)
    try:
        emit(args.handler(args, ctx), args.output)
    except Sp2Error as exc:
        logger.error("%s failed: %s", args.command, exc)
        print(f"sp2kit: error: {exc}", file=sys.stderr)
        return exc.exit_code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
