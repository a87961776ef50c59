"""Command-line entry point for the duality verifier."""

import argparse
import logging
import sys
from typing import Callable, Sequence

from duality.commands.calculators import cmd_census, cmd_orbit_invariant, cmd_rsk
from duality.commands.verify import cmd_verify
from duality.core.config import settings
from duality.core.exceptions import MalformedInputError, exit_code_for
from duality.services.verifier import SUITES

logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as malformed input instead of exiting with status 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise MalformedInputError(f"{self.prog}: {message}")


def _add_budget_and_seed(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--budget", type=int, help=f"dimension budget (default {settings.budget})"
    )
    parser.add_argument(
        "--seed", type=int, help=f"random seed (default {settings.default_seed})"
    )


def _add_sizes(parser: argparse.ArgumentParser, names: Sequence[str]) -> None:
    for name in names:
        parser.add_argument(f"--{name}", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
        prog="duality",
        description=(
            "Exact desk-scale verification of (gl_n, gl_m)-duality "
            "and Schur-Weyl duality"
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {settings.app_version}"
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log at INFO level"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    verify = subparsers.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=[*SUITES, "all"])
    _add_sizes(verify, ("n", "m", "d", "k", "a", "b"))
    _add_budget_and_seed(verify)
    verify.add_argument(
        "--samples", type=int, help="random group elements per flag pair"
    )
    verify.add_argument(
        "--workers", type=int, help="process pool size for `verify all`"
    )
    verify.add_argument(
        "--timings", action="store_true", help="include wall times in JSON"
    )
    verify.add_argument("--json", action="store_true", help="JSON output (the default)")
    verify.set_defaults(handler=cmd_verify)

    census = subparsers.add_parser(
        "census", help="component table of the flag-pair variety"
    )
    _add_sizes(census, ("n", "m", "d", "k"))
    census.add_argument("--budget", type=int)
    output = census.add_mutually_exclusive_group()
    output.add_argument("--json", action="store_true", help="JSON output (the default)")
    output.add_argument("--csv", action="store_true", help="CSV output")
    census.set_defaults(handler=cmd_census)

    invariant = subparsers.add_parser(
        "orbit-invariant", help="orbit invariant of a flag pair"
    )
    invariant.add_argument("file", help='JSON document {"first": flag, "second": flag}')
    invariant.add_argument("--check-invariance", type=int, metavar="N", default=0)
    invariant.add_argument("--seed", type=int)
    invariant.set_defaults(handler=cmd_orbit_invariant)

    rsk = subparsers.add_parser("rsk", help="RSK correspondence")
    rsk.add_argument("--matrix", help="JSON rows, inline or a file")
    rsk.add_argument("--permutation", help='one-line notation, e.g. "2,1,3"')
    rsk.add_argument("--inverse", help='JSON {"P": ..., "Q": ...}, inline or a file')
    rsk.set_defaults(handler=cmd_rsk)
    return parser


def configure_logging(verbose: bool = False) -> None:
    level = logging.INFO if verbose else getattr(logging, settings.log_level.upper())
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run the subcommand and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
    except MalformedInputError as exc:
        print(exc.message, file=sys.stderr)
        return exit_code_for(exc)

    configure_logging(args.verbose)
    logger.info(f"Starting {settings.app_name} v{settings.app_version}: {args.command}")
    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except Exception as exc:
        code = exit_code_for(exc)
        print(f"error: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
