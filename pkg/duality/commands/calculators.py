"""Handlers for the ``census``, ``orbit-invariant`` and ``rsk`` calculators."""

import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import ValidationError

from duality.core.config import settings
from duality.core.exceptions import EXIT_FAILED, EXIT_OK, MalformedInputError
from duality.models.domain import CompositionMatrix, Permutation, Tableau
from duality.models.request import TableauPair
from duality.models.response import OrbitInvariantResult, RSKResult
from duality.services import combinatorics as comb
from duality.services.flag_geometry import (
    check_invariance,
    component_census,
    flag_pair_from_payload,
    orbit_invariant,
)
from duality.services.rsk import inverse_rsk, permutation_matrix, rsk
from duality.services.tensor_models import check_budget

logger = logging.getLogger(__name__)


def _load_json(source: str, what: str) -> Any:
    """Parse inline JSON or, when ``source`` names an existing file, its contents."""
    path = Path(source)
    try:
        is_file = path.is_file()
    except OSError:
        # names longer than the filesystem allows are inline documents
        is_file = False
    try:
        text = path.read_text(encoding="utf-8") if is_file else source
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInputError(f"cannot read {what}: {exc}") from exc


def parse_permutation(text: str) -> Permutation:
    """One-line notation, comma separated (``"2,1,3"``) or as digits (``"213"``)."""
    cleaned = text.replace(" ", "")
    values = cleaned.split(",") if "," in cleaned else list(cleaned)
    try:
        return Permutation(word=tuple(int(v) for v in values))
    except ValueError as exc:
        raise MalformedInputError(f"invalid permutation {text!r}", str(exc)) from exc


def parse_matrix(source: str) -> CompositionMatrix:
    rows = _load_json(source, "matrix")
    try:
        return CompositionMatrix.from_rows(rows)
    except (ValidationError, TypeError) as exc:
        raise MalformedInputError(f"invalid matrix {source!r}", str(exc)) from exc


def cmd_census(args: argparse.Namespace) -> int:
    """Component (or orbit-stratum) table of the Steinberg-type variety."""
    n, m, d = args.n, args.m, args.d
    if n is None or m is None or d is None:
        raise MalformedInputError("census needs --n, --m and --d")
    k = min(n, m) if args.k is None else args.k
    budget = settings.budget if args.budget is None else args.budget
    check_budget(
        comb.binomial(n * m + d - 1, d), f"census for n={n}, m={m}, d={d}", budget
    )

    table = component_census(n, m, d, k)
    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerows(table.to_csv_rows())
    else:
        print(table.to_json())
    print(
        f"census n={n} m={m} d={d} k={k}: "
        f"{table.total} rows, expected {table.expected}",
        file=sys.stderr,
    )
    return EXIT_OK if table.consistent else EXIT_FAILED


def cmd_orbit_invariant(args: argparse.Namespace) -> int:
    """Orbit invariant of the flag pair in FILE, optionally re-tested under random g."""
    payload = _load_json(args.file, "flag pair document")
    first, second = flag_pair_from_payload(payload)
    invariant = orbit_invariant(first, second)

    samples = args.check_invariance or 0
    invariant_under_group = None
    if samples:
        seed = settings.default_seed if args.seed is None else args.seed
        rng = np.random.default_rng(seed)
        witnesses = check_invariance(first, second, samples, rng)
        invariant_under_group = all(w.passed for w in witnesses)
        for w in witnesses:
            if not w.passed:
                logger.warning(f"{w.claim}: {w.left} != {w.right}")

    result = OrbitInvariantResult(
        matrix=invariant.to_lists(),
        row_type=list(first.flag_type.steps),
        col_type=list(second.flag_type.steps),
        invariance_checks=samples,
        invariant_under_group=invariant_under_group,
    )
    print(result.to_json())
    return EXIT_FAILED if invariant_under_group is False else EXIT_OK


def cmd_rsk(args: argparse.Namespace) -> int:
    """RSK of a matrix or a permutation, or the inverse map of a tableau pair."""
    chosen = [s for s in (args.matrix, args.permutation, args.inverse) if s is not None]
    if len(chosen) != 1:
        raise MalformedInputError(
            "give exactly one of --matrix, --permutation, --inverse"
        )

    if args.inverse is not None:
        try:
            pair = TableauPair.model_validate(_load_json(args.inverse, "tableau pair"))
            p, q = Tableau.from_lists(pair.p), Tableau.from_lists(pair.q)
        except ValidationError as exc:
            raise MalformedInputError("invalid tableau pair", str(exc)) from exc
        matrix = inverse_rsk(p, q, n=pair.n, m=pair.m)
    else:
        if args.permutation is not None:
            matrix = permutation_matrix(parse_permutation(args.permutation))
        else:
            matrix = parse_matrix(args.matrix)
        p, q = rsk(matrix)

    result = RSKResult(
        matrix=matrix.to_lists(),
        P=[list(r) for r in p.rows],
        Q=[list(r) for r in q.rows],
        shape=list(p.shape.parts),
    )
    print(result.to_json())
    return EXIT_OK
