#!/usr/bin/env python3
"""
Example usage of the duality verifier as a library.

This script runs a few verification suites, computes the orbit invariant of a
random pair of flags, prints a small component census and a Schur algebra
multiplication, all with exact rational arithmetic.
"""

import sys
from typing import Any, Dict

import numpy as np

from duality.core.exceptions import DualityError
from duality.models.domain import FlagType
from duality.models.response import VerificationReport
from duality.services import flag_geometry as geo
from duality.services.rsk import rsk
from duality.services.schur_algebra import build_schur_algebra
from duality.services.verifier import DualityVerifier


def create_suite_requests() -> Dict[str, Dict[str, Any]]:
    """Suites to run and their parameters."""
    return {
        "howe": {"n": 2, "m": 3, "d": 3},
        "schur": {"n": 2, "d": 3},
        "springer": {"d": 4},
        "ginzburg": {"n": 2, "d": 2},
    }


def display_report(report: VerificationReport) -> None:
    """Print one report in a user-friendly format."""
    print("\n" + "=" * 80)
    print(report.summary())
    print("=" * 80)
    for witness in report.witnesses:
        status_icon = "✓" if witness.passed else "✗"
        print(f"  {status_icon} {witness.claim:<60} {witness.left} | {witness.right}")
    for note in report.notes:
        print(f"  note: {note}")


def show_orbit_invariant(seed: int = 7) -> None:
    """Two random flags in Q^3 and the matrix labelling their GL_3-orbit."""
    rng = np.random.default_rng(seed)
    first = geo.random_flag(FlagType.of(1, 2), rng)
    second = geo.random_flag(FlagType.of(1, 1, 1), rng)
    invariant = geo.orbit_invariant(first, second)
    print("\nOrbit invariant of a generic (1,2) flag and a generic complete flag:")
    for row in invariant.to_lists():
        print(f"  {row}")
    p, q = rsk(invariant)
    print(f"RSK: P = {[list(r) for r in p.rows]}, Q = {[list(r) for r in q.rows]}")


def show_census() -> None:
    """Components of the (flag, flag, nilpotent) variety for n = m = 2, d = 2."""
    table = geo.component_census(2, 2, 2, 2)
    print(f"\nCensus n=2 m=2 d=2: {table.total} components (expected {table.expected})")
    for component in table.components:
        print(f"  {component.matrix}  dim {component.dimension}")


def show_schur_algebra() -> None:
    """A product of two xi_A basis elements in S(2, 2)."""
    algebra = build_schur_algebra(2, 2)
    a, b = 1, algebra.transpose_index(1)
    product = algebra.multiply(a, b)
    left, right = algebra.labels[a].to_lists(), algebra.labels[b].to_lists()
    terms = " + ".join(
        f"{count} xi_{algebra.labels[c].to_lists()}"
        for c, count in sorted(product.items())
    )
    print(f"\nIn S(2,2): xi_{left} xi_{right} = {terms or '0'}")


def main():
    """Main function to demonstrate the duality verifier."""

    print("Duality Verifier - Example Usage")
    print("================================")

    verifier = DualityVerifier(group_samples=10)
    failed = False
    try:
        for suite, params in create_suite_requests().items():
            report = verifier.run(suite, **params)
            display_report(report)
            failed = failed or not report.passed
        show_orbit_invariant()
        show_census()
        show_schur_algebra()
    except DualityError as e:
        print(f"Error: {e.message}")
        sys.exit(1)

    print("\n" + "=" * 80)
    print("DEMO COMPLETE" if not failed else "DEMO FOUND FAILING WITNESSES")
    print("=" * 80)
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
