"""
Command-line entry point.

One argparse sub-parser per command. The shared flags (--format, --threads,
--oracle, --cap, --seed, --cache-dir, --log-level) are accepted after any
command and override every other settings source.
"""

import argparse
from collections.abc import Sequence
from pathlib import Path

import structlog

from caystir.cli import commands
from caystir.cli.runtime import Runtime, configure_logging
from caystir.cli.verify import SUITES
from caystir.exceptions import CaystirError
from caystir.schemas import OutputFormat, SeedKind
from caystir.settings import settings

logger = structlog.get_logger(__name__)


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError as e:
        msg = f"{text!r} is not an integer"
        raise argparse.ArgumentTypeError(msg) from e
    if value < 0:
        msg = f"{value} is negative"
        raise argparse.ArgumentTypeError(msg)
    return value


def _positive(text: str) -> int:
    value = _nonnegative(text)
    if value == 0:
        msg = "must be positive"
        raise argparse.ArgumentTypeError(msg)
    return value


def _shared_flags() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--format", choices=[fmt.value for fmt in OutputFormat], help="output format"
    )
    shared.add_argument("--threads", type=_positive, help="worker threads")
    shared.add_argument("--oracle", action="store_true", help="force brute-force computation")
    shared.add_argument("--cap", type=_positive, help="largest group order for element BFS")
    shared.add_argument("--seed", type=int, help="seed for randomized suites")
    shared.add_argument("--cache-dir", type=Path, help="seed-row cache directory")
    shared.add_argument("--log-level", help="log level for stderr diagnostics")
    return shared


def _graph(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-k", type=_positive, required=True, help="generator size")
    parser.add_argument("-n", type=_positive, required=True, help="degree")


def _centre(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("g", nargs="?", help='centre permutation, e.g. "(1 2 3)"')
    parser.add_argument("--type", help='centre cycle type, e.g. "1^6 2^3"')


def build_parser() -> argparse.ArgumentParser:
    shared = _shared_flags()
    parser = argparse.ArgumentParser(
        prog="caystir",
        description="Exact metric structure of k-transposition Cayley graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: commands.Handler, text: str) -> argparse.ArgumentParser:
        child = sub.add_parser(name, parents=[shared], help=text, description=text)
        child.set_defaults(handler=handler)
        return child

    distance = command("distance", commands.cmd_distance, "distance from e to g")
    _graph(distance)
    distance.add_argument("g", help="permutation in cycle or one-line notation")

    spheres = command("spheres", commands.cmd_spheres, "sphere sizes by radius")
    _graph(spheres)
    spheres.add_argument("--by-class", action="store_true", help="list every class with its radius")

    ball = command("ball", commands.cmd_ball, "ball sizes")
    _graph(ball)
    ball.add_argument("-r", type=_nonnegative, help="radius (all radii if omitted)")

    _graph(command("diameter", commands.cmd_diameter, "graph diameter"))

    phi = command("phi", commands.cmd_phi, "metric intersection number")
    _graph(phi)
    phi.add_argument("-r", type=_nonnegative, required=True, help="radius")
    _centre(phi)

    phi_table = command("phi-table", commands.cmd_phi_table, "phi for every radius")
    _graph(phi_table)
    _centre(phi_table)

    reconstruction = command(
        "n-reconstruction", commands.cmd_n_reconstruction, "reconstruction number N"
    )
    _graph(reconstruction)
    reconstruction.add_argument("-r", type=_nonnegative, required=True, help="radius")

    factor = command("factor", commands.cmd_factor, "factor g into k-transpositions")
    _graph(factor)
    factor.add_argument("g", help="permutation in cycle or one-line notation")
    factor.add_argument("--pair", action="store_true", help="two-factor form x·y")

    stirling = command("stirling", commands.cmd_stirling, "evaluate a Stirling function")
    stirling.add_argument("-n", type=_nonnegative, required=True, help="row")
    position = stirling.add_mutually_exclusive_group()
    position.add_argument("-m", type=int, help="column")
    position.add_argument("-r", type=int, help="radius column n - m")
    stirling.add_argument("--threshold", type=_nonnegative, help="threshold t of a raw seed")
    stirling.add_argument("--seed-row", nargs="+", metavar="M=VALUE", help="raw seed entries")
    stirling.add_argument("--tail", type=int, default=0, help="raw seed tail")
    stirling.add_argument("--m-floor", type=int, help="smallest explicit m of a raw seed")
    stirling.add_argument("--type", help="class whose oracle seed row to use")
    stirling.add_argument(
        "--kind", default=SeedKind.I_ROW.value, choices=[kind.value for kind in SeedKind]
    )
    stirling.add_argument("--offset", type=int, default=0, help="cross-row offset")

    verify = command("verify", commands.cmd_verify, "run a verification suite")
    verify.add_argument("suite", choices=[*SUITES, "all"])

    cache = command("cache", commands.cmd_cache, "inspect the seed-row cache")
    cache.add_argument("action", choices=["list", "clear"])

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse, execute and return the exit code (2 for usage errors, via argparse)."""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level or settings.log_level)
    try:
        runtime = Runtime.from_args(args)
        return args.handler(args, runtime)
    except CaystirError as e:
        logger.error("command_failed", command=args.command, error=str(e))
        return 1
