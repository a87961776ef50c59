"""Partitions, tableaux, dimension formulas, Kostka numbers and S_d characters.

This is the numeric oracle layer: every other service checks its models
against the closed formulas and enumerations collected here. All counts are
Python integers (arbitrary precision).
"""

import logging
from collections import Counter
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

from scipy.special import comb, factorial

from duality.core.exceptions import ShapeMismatchError
from duality.models.domain import (
    CompositionMatrix,
    CycleType,
    FlagType,
    Partition,
    Permutation,
    Tableau,
)

logger = logging.getLogger(__name__)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient."""
    return int(comb(n, k, exact=True))


def factorial_of(n: int) -> int:
    """Exact n!."""
    return int(factorial(n, exact=True))


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


def _partition_parts(
    d: int, largest: int, max_parts: int | None
) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    if max_parts == 0:
        return
    rest = None if max_parts is None else max_parts - 1
    for first in range(min(d, largest), 0, -1):
        for tail in _partition_parts(d - first, first, rest):
            yield (first,) + tail


def enumerate_partitions(d: int, max_parts: int | None = None) -> list[Partition]:
    """Partitions of ``d`` with at most ``max_parts`` parts, reverse lexicographic.

    ``max_parts=None`` means unbounded. ``d = 0`` yields the empty partition.
    """
    if d < 0:
        raise ValueError(f"d must be non-negative, got {d}")
    return [Partition(parts=p) for p in _partition_parts(d, d, max_parts)]


def transpose(lam: Partition) -> Partition:
    """Column lengths of the Young diagram of ``lam``."""
    if not lam.parts:
        return lam
    return Partition(
        parts=tuple(sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0]))
    )


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True iff every partial sum of ``lam`` is at most that of ``mu``."""
    if lam.size != mu.size:
        raise ShapeMismatchError(f"dominance needs equal sizes: {lam} vs {mu}")
    width = max(lam.length, mu.length)
    left, right = 0, 0
    for a, b in zip(lam.padded(width), mu.padded(width)):
        left += a
        right += b
        if left > right:
            return False
    return True


def weak_compositions(d: int, n: int) -> list[FlagType]:
    """All flag types over ``n`` steps summing to ``d`` (zero steps allowed)."""
    if n < 0:
        raise ShapeMismatchError(f"number of steps must be non-negative, got {n}")
    if n == 0 or d < 0:
        # no flag type has zero steps or negative size
        return []

    def build(remaining: int, slots: int) -> Iterator[tuple[int, ...]]:
        if slots == 1:
            yield (remaining,)
            return
        for first in range(remaining, -1, -1):
            for tail in build(remaining - first, slots - 1):
                yield (first,) + tail

    return [FlagType(steps=steps) for steps in build(d, n)]


# ---------------------------------------------------------------------------
# Dimension formulas
# ---------------------------------------------------------------------------


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = transpose(lam)
    return [
        [lam.parts[i] - j + conj.parts[j] - i - 1 for j in range(lam.parts[i])]
        for i in range(lam.length)
    ]


def dim_sym_irrep(lam: Partition) -> int:
    """f^lambda by the hook length formula."""
    denominator = 1
    for row in hook_lengths(lam):
        for h in row:
            denominator *= h
    numerator = factorial_of(lam.size)
    assert numerator % denominator == 0
    return numerator // denominator


def dim_gl_irrep(n: int, lam: Partition) -> int:
    """Weyl dimension of the gl_n irreducible with highest weight ``lam``.

    Returns 0 when ``lam`` has more than ``n`` parts.
    """
    if lam.length > n:
        return 0
    parts = lam.padded(n)
    numerator, denominator = 1, 1
    for i in range(n):
        for j in range(i + 1, n):
            numerator *= parts[i] - parts[j] + j - i
            denominator *= j - i
    return numerator // denominator


# ---------------------------------------------------------------------------
# Tableaux and Kostka numbers
# ---------------------------------------------------------------------------


def _horizontal_strips(
    inner: tuple[int, ...], size: int, bound: tuple[int, ...]
) -> Iterator[tuple[int, ...]]:
    """Shapes ``outer`` in ``bound`` with ``outer / inner`` a horizontal ``size``-strip.

    Shapes are given zero-padded to ``len(bound)``.
    """
    rows = len(bound)

    def extend(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if left == 0:
                yield ()
            return
        ceiling = bound[i] if i == 0 else min(bound[i], inner[i - 1])
        for grow in range(min(left, ceiling - inner[i]), -1, -1):
            for tail in extend(i + 1, left - grow):
                yield (inner[i] + grow,) + tail

    yield from extend(0, size)


def semistandard_tableaux(lam: Partition, content: Sequence[int]) -> Iterator[Tableau]:
    """Every semistandard tableau of shape ``lam`` and content ``content``.

    ``content[v-1]`` is the number of entries equal to ``v``; zeros allowed.
    """
    if sum(content) != lam.size:
        return
    bound = lam.parts

    def fill(
        value: int, shape: tuple[int, ...], rows: tuple[tuple[int, ...], ...]
    ) -> Iterator[tuple[tuple[int, ...], ...]]:
        if value > len(content):
            if shape == bound:
                yield rows
            return
        for outer in _horizontal_strips(shape, content[value - 1], bound):
            grown = tuple(
                (rows[i] if i < len(rows) else ()) + (value,) * (outer[i] - shape[i])
                for i in range(len(bound))
            )
            yield from fill(value + 1, outer, grown)

    for rows in fill(1, (0,) * lam.length, ()):
        yield Tableau(rows=tuple(r for r in rows if r))


def kostka(lam: Partition, mu: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    if sum(mu) != lam.size:
        raise ShapeMismatchError(f"content {tuple(mu)} does not sum to |{lam}|")
    return _kostka_cached(lam.parts, tuple(mu))


@lru_cache(maxsize=None)
def _kostka_cached(parts: tuple[int, ...], mu: tuple[int, ...]) -> int:
    shapes: Counter[tuple[int, ...]] = Counter({(0,) * len(parts): 1})
    for size in mu:
        step: Counter[tuple[int, ...]] = Counter()
        for shape, count in shapes.items():
            for outer in _horizontal_strips(shape, size, parts):
                step[outer] += count
        shapes = step
    return shapes.get(parts, 0)


def count_ssyt(lam: Partition, max_entry: int) -> int:
    """Count semistandard tableaux of shape ``lam`` with entries <= ``max_entry``."""
    if lam.length > max_entry:
        return 0
    shapes: Counter[tuple[int, ...]] = Counter({(0,) * lam.length: 1})
    for _ in range(max_entry):
        step: Counter[tuple[int, ...]] = Counter()
        for shape, count in shapes.items():
            for size in range(lam.size - sum(shape) + 1):
                for outer in _horizontal_strips(shape, size, lam.parts):
                    step[outer] += count
        shapes = step
    return shapes.get(lam.parts, 0)


# ---------------------------------------------------------------------------
# Characters of S_d
# ---------------------------------------------------------------------------


def class_size(rho: CycleType) -> int:
    """Number of permutations of cycle type ``rho``."""
    centralizer = 1
    for length, mult in Counter(rho.parts).items():
        centralizer *= length**mult * factorial_of(mult)
    return factorial_of(rho.size) // centralizer


def sym_character(lam: Partition, rho: CycleType) -> int:
    """chi^lambda(rho) by the Murnaghan-Nakayama rule on beta-sets."""
    if lam.size != rho.size:
        raise ShapeMismatchError(f"character needs equal sizes: {lam} vs {rho}")
    length = lam.length
    beta = frozenset(p + length - 1 - i for i, p in enumerate(lam.parts))
    return _character_on_beta(beta, rho.parts)


@lru_cache(maxsize=None)
def _character_on_beta(beta: frozenset[int], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    value = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beta:
            continue
        # leg length of the removed rim hook
        height = sum(1 for c in beta if target < c < b)
        sign = -1 if height % 2 else 1
        value += sign * _character_on_beta((beta - {b}) | {target}, rest)
    return value


def character_table(d: int) -> dict[Partition, dict[CycleType, int]]:
    """chi^lambda(rho) for all lambda, rho partitions of ``d``."""
    classes = enumerate_partitions(d)
    return {lam: {rho: sym_character(lam, rho) for rho in classes} for lam in classes}


def all_permutations(d: int) -> Iterator[Permutation]:
    """Every permutation of S_d in lexicographic one-line order."""
    for word in permutations(range(1, d + 1)):
        yield Permutation(word=word)


def sign_of(rho: CycleType) -> int:
    """Sign of any permutation with cycle type ``rho``."""
    return -1 if (rho.size - rho.length) % 2 else 1


def composition_matrices(n: int, m: int, d: int) -> list[CompositionMatrix]:
    """All n x m non-negative integer matrices with entry sum ``d``.

    Ordered by the reverse lexicographic order of their row-major entries.
    """
    return [
        CompositionMatrix(
            entries=tuple(flat.steps[i * m : (i + 1) * m] for i in range(n))
        )
        for flat in weak_compositions(d, n * m)
    ]
