"""
Entry point of the ``dl-cospectral`` command.

Exit codes: 0 on success, 1 when a verification failed, 2 on an input or
configuration error.
"""

import argparse
import logging
import sys
from typing import IO, List, Optional

from dl_cospectral import __version__
from dl_cospectral.checks import CHECK_ALIASES, CHECKS
from dl_cospectral.cli.config import CommandConfig
from dl_cospectral.cli.dispatcher import CommandDispatcher
from dl_cospectral.cli.handlers.base import EXIT_INPUT_ERROR
from dl_cospectral.constructions.families import FAMILIES, FAMILY_PARAMETER_NAMES
from dl_cospectral.core.exceptions import ImproperlyConfigured

logger = logging.getLogger(__name__)


def _add_graph_sources(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("graph sources")
    group.add_argument("--g6", action="append", metavar="TEXT", help="graph6 literal (repeatable)")
    group.add_argument("--edges", action="append", metavar="TEXT", help='edge list such as "4; 0 1; 1 2"')
    group.add_argument(
        "--file", action="append", metavar="PATH", help="graph6 file, one graph per line; - for stdin"
    )
    group.add_argument(
        "--family",
        metavar="NAME",
        help=f"graph family, either NAME with parameter flags or NAME:ARG:ARG ({', '.join(FAMILIES)})",
    )
    _add_family_parameters(parser)


def _add_family_parameters(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("family parameters")
    for name in FAMILY_PARAMETER_NAMES:
        group.add_argument(f"--{name}", dest=f"family_{name}", metavar="VALUE")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dl-cospectral",
        description="Distance Laplacian cospectrality toolkit.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", help="machine-readable JSON output")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="count", default=0, help="more logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="errors only")

    limits = parser.add_argument_group("tolerances and limits")
    limits.add_argument("--eigen-tolerance", type=_positive_float, metavar="TOL")
    limits.add_argument("--multiplicity-tolerance", type=_positive_float, metavar="TOL")
    limits.add_argument("--order-cap", type=_positive_int, metavar="N")
    limits.add_argument("--planarity-limit", type=_positive_int, metavar="N")
    limits.add_argument("--circulant-limit", type=_positive_int, metavar="N")

    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    spectrum = commands.add_parser("spectrum", help="exact polynomial and floating spectrum")
    _add_graph_sources(spectrum)
    spectrum.add_argument("--csv", action="store_true", help="print the coefficient sequence as CSV")

    construct = commands.add_parser("construct", help="build graphs of a family or construction")
    construct.add_argument(
        "name",
        metavar="NAME",
        help=f"one of {', '.join(FAMILIES)}, switch, co-transmission-host",
    )
    construct.add_argument("--g6", action="append", metavar="TEXT", help="host graph for switch")
    construct.add_argument("--edges", action="append", metavar="TEXT", help="host graph for switch")
    construct.add_argument("--file", action="append", metavar="PATH", help="host graphs for switch")
    construct.add_argument("--mode", choices=("inner", "cross", "both"), default="both")
    _add_family_parameters(construct)

    verify = commands.add_parser("verify", help="cospectrality verdict and parameter differences")
    _add_graph_sources(verify)
    verify.add_argument("--no-profile", action="store_true", help="skip the parameter comparison")

    census = commands.add_parser("census", help="find cospectral classes")
    census.add_argument("--enumerate", type=_positive_int, metavar="N", help="built-in enumeration order")
    census.add_argument("--corpus", action="append", metavar="PATH", help="graph6 corpus; - for stdin")
    census.add_argument("--shards", type=_positive_int, metavar="N", help="worker processes")
    census.add_argument("--spill-threshold", type=_positive_int, metavar="N")
    census.add_argument("--tmpdir", metavar="DIR", help="spill directory")
    census.add_argument("--out", metavar="PATH", help="JSONL class file")
    census.add_argument("--report", metavar="PATH", help="write the preservation report (markdown) here")
    census.add_argument("--no-report", action="store_true", help="skip the preservation report")
    census.add_argument("--progress", action="store_true", help="progress bar")

    check = commands.add_parser("check", help="run a named verification suite")
    check.add_argument(
        "check_id",
        choices=sorted([*CHECKS, *CHECK_ALIASES]),
        metavar="CHECK",
        help=", ".join([*CHECKS, *CHECK_ALIASES]),
    )
    check.add_argument("--max-n", type=_positive_int, metavar="N")
    check.add_argument("--enumerate", type=_positive_int, metavar="N")
    check.add_argument("--corpus", metavar="PATH")
    check.add_argument("--count", type=_positive_int, metavar="N")
    check.add_argument("--seed", type=int)
    check.add_argument("--progress", action="store_true", help="progress bar")
    return parser


def configure_logging(verbose: int, quiet: bool) -> None:
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger().setLevel(level)


def main(argv: Optional[List[str]] = None, stdout: Optional[IO[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    config = CommandConfig.from_args(args)
    try:
        config.validate()
        config.apply()
    except ImproperlyConfigured as e:
        logger.error(f"Invalid configuration: {e}")
        return EXIT_INPUT_ERROR
    return CommandDispatcher(config, args, stdout or sys.stdout).dispatch()


if __name__ == "__main__":
    sys.exit(main())
