"""Handler for the ``verify`` subcommand."""

import argparse
import logging
import sys

from duality.core.config import settings
from duality.core.exceptions import EXIT_FAILED, EXIT_OK
from duality.services.verifier import DualityVerifier, verify_all

logger = logging.getLogger(__name__)

PARAMETER_FLAGS = ("n", "m", "d", "k", "a", "b")


def get_verifier(args: argparse.Namespace) -> DualityVerifier:
    """Verifier configured from command-line overrides and settings."""
    return DualityVerifier(
        budget=args.budget, seed=args.seed, group_samples=args.samples
    )


def cmd_verify(args: argparse.Namespace) -> int:
    """Run one suite (or all of them), print JSON on stdout and a summary on stderr."""
    verifier = get_verifier(args)
    timings = args.timings or settings.include_timings

    if args.suite == "all":
        workers = args.workers if args.workers is not None else settings.max_workers
        bundle = verify_all(verifier, workers=workers)
        print(bundle.to_json(include_timings=timings))
        for report in bundle.reports:
            print(report.summary(), file=sys.stderr)
        return EXIT_OK if bundle.status == "pass" else EXIT_FAILED

    params = {name: getattr(args, name) for name in PARAMETER_FLAGS}
    report = verifier.run(args.suite, **params)
    print(report.to_json(include_timings=timings))
    print(report.summary(), file=sys.stderr)
    for note in report.notes:
        print(f"  note: {note}", file=sys.stderr)
    for witness in report.failures:
        print(
            f"  FAILED {witness.claim}: {witness.left} != {witness.right}",
            file=sys.stderr,
        )
    return EXIT_OK if report.passed else EXIT_FAILED
