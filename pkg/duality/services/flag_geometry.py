"""Flags over Q^d, the GL_d-orbit invariant of flag pairs, and dimension calculus.

Conventions:

* a flag of type t = (d_1, ..., d_n) is a chain 0 = F_0 <= F_1 <= ... <= F_n = Q^d
  with dim F_i - dim F_{i-1} = d_i; zero steps are allowed;
* a group element g acts on column vectors, so a basis stored as rows B is sent
  to B g^T;
* the nilpotent x_lambda has Jordan blocks of sizes transpose(lambda), so
  lambda = (d) is the zero matrix and lambda = (1^d) is regular;
* ``closure_order(lam, mu)`` is True iff the orbit of x_lam lies in the closure
  of the orbit of x_mu, which happens iff mu is dominated by lam.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np
from pydantic import ValidationError

from duality.core.exceptions import (
    AmbientMismatchError,
    MalformedInputError,
    ShapeMismatchError,
)
from duality.models.domain import CompositionMatrix, FlagType, Partition
from duality.models.request import FlagPairFile, FlagSpec
from duality.models.response import (
    CensusTable,
    ComponentRecord,
    StratumRecord,
    VerificationReport,
    Witness,
)
from duality.services import combinatorics as comb
from duality.services.exact_linalg import (
    DomainMatrix,
    Subspace,
    commutant_dimension,
    format_rational,
    intersect,
    intersection_dim,
    inverse,
    random_invertible,
    sparse_matrix,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Flag:
    """Validated chain of subspaces F_1 <= ... <= F_n = Q^d (F_0 = 0 is implicit)."""

    d: int
    spaces: tuple[Subspace, ...]

    @classmethod
    def from_spaces(cls, spaces: Sequence[Subspace], d: int) -> "Flag":
        if not spaces:
            raise MalformedInputError("a flag needs at least one step")
        previous = Subspace.zero(d)
        for index, space in enumerate(spaces, start=1):
            if space.ambient != d:
                raise AmbientMismatchError(d, space.ambient)
            if intersect(previous, space) != previous:
                raise MalformedInputError(
                    f"F_{index - 1} is not contained in F_{index}", chain_index=index
                )
            previous = space
        if previous.dim != d:
            raise MalformedInputError(
                f"last step has dimension {previous.dim}, expected {d}",
                chain_index=len(spaces),
            )
        return cls(d=d, spaces=tuple(spaces))

    @property
    def n(self) -> int:
        return len(self.spaces)

    @property
    def flag_type(self) -> FlagType:
        dims = [0] + [s.dim for s in self.spaces]
        return FlagType(steps=tuple(dims[i + 1] - dims[i] for i in range(self.n)))

    def step(self, i: int) -> Subspace:
        """F_i for 0 <= i <= n."""
        return Subspace.zero(self.d) if i == 0 else self.spaces[i - 1]

    def act(self, g: DomainMatrix) -> "Flag":
        """g . F = (g F_1, ..., g F_n) for an invertible g."""
        if g.shape != (self.d, self.d):
            raise AmbientMismatchError(self.d, g.shape[0])
        # zero and full steps are fixed by GL_d
        moved = tuple(s if s.dim in (0, self.d) else s.image(g) for s in self.spaces)
        return Flag(d=self.d, spaces=moved)


# ---------------------------------------------------------------------------
# Flag construction and JSON
# ---------------------------------------------------------------------------


def flag_from_basis(basis: DomainMatrix, flag_type: FlagType) -> Flag:
    """F_i = span of the first d_1 + ... + d_i rows of an invertible ``basis``."""
    d = flag_type.size
    if basis.shape != (d, d):
        raise ShapeMismatchError(
            f"basis of shape {basis.shape} for flag type {flag_type.steps}"
        )
    spaces = [
        Subspace.from_matrix(basis.extract(list(range(end)), list(range(d))))
        if end
        else Subspace.zero(d)
        for end in flag_type.partial_sums()[1:]
    ]
    return Flag.from_spaces(spaces, d)


def random_flag(flag_type: FlagType, rng: np.random.Generator) -> Flag:
    """Flag of the given type spanned by the rows of a random invertible matrix."""
    return flag_from_basis(random_invertible(flag_type.size, rng), flag_type)


def coordinate_flag(word: Sequence[int], n: int) -> Flag:
    """F_i = span{e_p : word[p] <= i}; its type is the content of ``word``."""
    d = len(word)
    if any(not 1 <= letter <= n for letter in word):
        raise ShapeMismatchError(f"word {tuple(word)} has letters outside 1..{n}")
    spaces = []
    for i in range(1, n + 1):
        support = [p for p in range(d) if word[p] <= i]
        spaces.append(_coordinate_subspace(support, d))
    return Flag.from_spaces(spaces, d)


def _coordinate_subspace(support: Sequence[int], d: int) -> Subspace:
    values = {(r, p): 1 for r, p in enumerate(support)}
    return Subspace.from_matrix(sparse_matrix(values, (d, d)))


def biword_of(matrix: CompositionMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Pair of words (u, v) listing (i, j) a_ij times in lexicographic order."""
    pairs = [
        (i, j)
        for i, row in enumerate(matrix.entries, start=1)
        for j, count in enumerate(row, start=1)
        for _ in range(count)
    ]
    return tuple(p[0] for p in pairs), tuple(p[1] for p in pairs)


def realize_orbit(matrix: CompositionMatrix) -> tuple[Flag, Flag]:
    """A pair of coordinate flags whose orbit invariant is ``matrix``."""
    u, v = biword_of(matrix)
    if not u:
        raise ShapeMismatchError("cannot realize an orbit in Q^0")
    return coordinate_flag(u, matrix.rows), coordinate_flag(v, matrix.cols)


def _flag_error(
    message: str,
    side: str | None = None,
    chain_index: int | None = None,
    details: str | None = None,
) -> MalformedInputError:
    where = f"{side} flag" if side else "flag"
    if chain_index is not None:
        where += f", step {chain_index}"
    return MalformedInputError(f"{where}: {message}", details, chain_index=chain_index)


def _validation_error(exc: ValidationError) -> MalformedInputError:
    """Locate the first pydantic error of a flag document on its flag and step."""
    error = exc.errors()[0]
    loc = list(error["loc"])
    side = None
    if loc and loc[0] in ("first", "second"):
        side = str(loc.pop(0))
    chain_index = None
    if len(loc) >= 2 and loc[0] == "steps" and isinstance(loc[1], int):
        chain_index = loc[1] + 1
    elif "step" in error.get("ctx", {}):
        chain_index = int(error["ctx"]["step"])
    message = error["msg"]
    if loc and chain_index is None:
        message = f"{loc[0]}: {message}"
    if exc.error_count() > 1:
        message += f" (and {exc.error_count() - 1} more error(s))"
    return _flag_error(message, side, chain_index, str(exc))


def flag_from_spec(spec: FlagSpec, side: str | None = None) -> Flag:
    """Build and validate a flag from its JSON form; errors carry the chain index."""
    spaces = []
    for index, vectors in enumerate(spec.steps, start=1):
        try:
            spaces.append(Subspace.from_vectors(vectors, spec.d))
        except (ValueError, TypeError, MalformedInputError) as exc:
            raise _flag_error(str(exc), side, index) from exc
    try:
        flag = Flag.from_spaces(spaces, spec.d)
    except MalformedInputError as exc:
        raise _flag_error(exc.message, side, exc.chain_index, exc.details) from exc
    actual = list(flag.flag_type.steps)
    if spec.type is not None and actual != spec.type:
        differing = next(
            (i for i, (a, b) in enumerate(zip(spec.type, actual), start=1) if a != b),
            min(len(spec.type) + 1, len(actual)),
        )
        raise _flag_error(
            f"declared type {spec.type} differs from step dimensions {actual}",
            side,
            differing,
        )
    return flag


def flag_to_spec(flag: Flag) -> FlagSpec:
    steps = [
        [[format_rational(v) for v in row] for row in s.vectors()] for s in flag.spaces
    ]
    return FlagSpec(d=flag.d, steps=steps, type=list(flag.flag_type.steps))


def parse_flag(payload: dict) -> Flag:
    try:
        spec = FlagSpec.model_validate(payload)
    except ValidationError as exc:
        raise _validation_error(exc) from exc
    return flag_from_spec(spec)


def flag_pair_from_payload(payload: dict) -> tuple[Flag, Flag]:
    """Parse an ``{"first": ..., "second": ...}`` document into two flags."""
    try:
        document = FlagPairFile.model_validate(payload)
    except ValidationError as exc:
        raise _validation_error(exc) from exc
    first = flag_from_spec(document.first, "first")
    second = flag_from_spec(document.second, "second")
    if first.d != second.d:
        raise AmbientMismatchError(first.d, second.d)
    return first, second


# ---------------------------------------------------------------------------
# Orbits of flag pairs
# ---------------------------------------------------------------------------


def orbit_invariant(first: Flag, second: Flag) -> CompositionMatrix:
    """The n x m matrix of relative positions labelling the GL_d-orbit of (F, F')."""
    if first.d != second.d:
        raise AmbientMismatchError(first.d, second.d)
    n, m = first.n, second.n
    dims = [
        [intersection_dim(first.step(i), second.step(j)) for j in range(m + 1)]
        for i in range(n + 1)
    ]
    entries = [
        [
            dims[i][j] - dims[i - 1][j] - dims[i][j - 1] + dims[i - 1][j - 1]
            for j in range(1, m + 1)
        ]
        for i in range(1, n + 1)
    ]
    result = CompositionMatrix.from_rows(entries)
    assert result.row_sums == first.flag_type.steps
    assert result.col_sums == second.flag_type.steps
    return result


def count_orbits(n: int, m: int, d: int) -> tuple[int, list[CompositionMatrix]]:
    """binomial(nm + d - 1, d) together with the explicit list of orbit labels."""
    matrices = comb.composition_matrices(n, m, d)
    return comb.binomial(n * m + d - 1, d), matrices


def check_invariance(
    first: Flag, second: Flag, samples: int, rng: np.random.Generator
) -> list[Witness]:
    """Re-compute the invariant after moving both flags by ``samples`` random g."""
    expected = orbit_invariant(first, second)
    label = str(expected.to_lists())
    witnesses = []
    for s in range(samples):
        g = random_invertible(first.d, rng)
        moved = orbit_invariant(first.act(g), second.act(g))
        witnesses.append(
            Witness(
                claim=f"invariant of g{s:03d}.(F, F')",
                left=str(moved.to_lists()),
                right=label,
            )
        )
    return witnesses


def invariance_counts(
    firsts: Sequence[Flag],
    seconds: Sequence[Flag],
    samples: int,
    rng: np.random.Generator,
) -> dict[tuple[int, int], int]:
    """Per pair (firsts[i], seconds[j]), how many sampled g fix its invariant.

    Each g moves every flag once and the moved flags are shared by all pairs.
    """
    if not firsts or not seconds:
        return {}
    d = firsts[0].d
    for flag in (*firsts, *seconds):
        if flag.d != d:
            raise AmbientMismatchError(d, flag.d)
    expected = {
        (i, j): orbit_invariant(f, s)
        for i, f in enumerate(firsts)
        for j, s in enumerate(seconds)
    }
    counts = dict.fromkeys(expected, 0)
    for _ in range(samples):
        g = random_invertible(d, rng)
        moved_firsts = [f.act(g) for f in firsts]
        moved_seconds = [s.act(g) for s in seconds]
        for (i, j), invariant in expected.items():
            moved = orbit_invariant(moved_firsts[i], moved_seconds[j])
            counts[(i, j)] += moved == invariant
    return counts


# ---------------------------------------------------------------------------
# Dimension calculus
# ---------------------------------------------------------------------------


def flag_variety_dim(flag_type: FlagType) -> int:
    """sum_{i<j} d_i d_j."""
    steps = flag_type.steps
    n = len(steps)
    return sum(steps[i] * steps[j] for i in range(n) for j in range(i + 1, n))


def nilpotent_orbit_dim(lam: Partition) -> int:
    """d^2 - sum lambda_i^2 for the orbit of x_lambda."""
    return lam.size**2 - sum(p * p for p in lam.parts)


def jordan_nilpotent(lam: Partition) -> DomainMatrix:
    """x_lambda: Jordan blocks of sizes transpose(lambda), x e_{s+1} = e_s in-block."""
    d = lam.size
    values = {}
    start = 0
    for block in comb.transpose(lam).parts:
        for k in range(block - 1):
            values[(start + k, start + k + 1)] = 1
        start += block
    return sparse_matrix(values, (d, d))


def centralizer_dim(lam: Partition) -> int:
    """dim {X : x_lambda X = X x_lambda}, from the kernel of the commuting equation."""
    return commutant_dimension([jordan_nilpotent(lam)], lam.size)


def spaltenstein_dim(lam: Partition, flag_type: FlagType) -> int | None:
    """Dimension of the variety of x_lambda-stable flags of the given type.

    Returns None when the variety is empty, which happens exactly when the
    Kostka number K_{lambda, t} vanishes.
    """
    if lam.size != flag_type.size:
        raise ShapeMismatchError(
            f"{lam} and type {flag_type.steps} have different sizes"
        )
    if comb.kostka(lam, flag_type.steps) == 0:
        return None
    value, rem = divmod(2 * flag_variety_dim(flag_type) - nilpotent_orbit_dim(lam), 2)
    assert (
        rem == 0 and value >= 0
    ), f"negative fiber dimension for {lam}, {flag_type.steps}"
    return value


def is_stable(x: DomainMatrix, flag: Flag) -> bool:
    """x F_i <= F_{i-1} for every step."""
    return all(
        flag.step(i - 1).contains_subspace(flag.step(i).image(x))
        for i in range(1, flag.n + 1)
    )


def _chain_fillings(
    capacity: list[int], steps: tuple[int, ...], index: int
) -> Iterator[list[tuple[int, ...]]]:
    """Choices of growing blocks per step; a block grows at most once per step."""
    if index == len(steps):
        if not any(capacity):
            yield []
        return
    open_blocks = sorted(
        (b for b, c in enumerate(capacity) if c), key=lambda b: (-capacity[b], b)
    )
    for chosen in combinations(open_blocks, steps[index]):
        for b in chosen:
            capacity[b] -= 1
        for rest in _chain_fillings(capacity, steps, index + 1):
            yield [chosen] + rest
        for b in chosen:
            capacity[b] += 1


def find_stable_flag(lam: Partition, flag_type: FlagType) -> Flag | None:
    """A coordinate x_lambda-stable flag of the given type, or None if none exists.

    Each F_i is spanned by initial segments of the Jordan chains of x_lambda;
    such a flag exists iff a 0/1 matrix with row sums transpose(lambda) and
    column sums t exists.
    """
    if lam.size != flag_type.size:
        raise ShapeMismatchError(
            f"{lam} and type {flag_type.steps} have different sizes"
        )
    blocks = list(comb.transpose(lam).parts)
    filling = next(_chain_fillings(list(blocks), flag_type.steps, 0), None)
    if filling is None:
        return None
    d = lam.size
    starts = [sum(blocks[:b]) for b in range(len(blocks))]
    grown = [0] * len(blocks)
    spaces = []
    for chosen in filling:
        for b in chosen:
            grown[b] += 1
        support = [starts[b] + k for b in range(len(blocks)) for k in range(grown[b])]
        spaces.append(_coordinate_subspace(support, d))
    return Flag.from_spaces(spaces, d)


def conjugated_stable_flag(
    lam: Partition, flag_type: FlagType, rng: np.random.Generator
) -> tuple[DomainMatrix, Flag] | None:
    """(g x_lambda g^-1, g F) for a found stable flag F and a random invertible g."""
    flag = find_stable_flag(lam, flag_type)
    if flag is None:
        return None
    g = random_invertible(lam.size, rng)
    x = g.matmul(jordan_nilpotent(lam)).matmul(inverse(g))
    return x, flag.act(g)


def closure_order(lam: Partition, mu: Partition) -> bool:
    """True iff the orbit of x_lam lies in the closure of the orbit of x_mu."""
    return comb.dominance_leq(mu, lam)


# ---------------------------------------------------------------------------
# Components and the dimension identity
# ---------------------------------------------------------------------------


def _half_ambient_dim(t1: FlagType, t2: FlagType) -> int:
    return flag_variety_dim(t1) + flag_variety_dim(t2)


def component_census(n: int, m: int, d: int, k: int) -> CensusTable:
    """Components of the variety of triples (x, F, F') with x^k = 0.

    For k >= min(n, m) there is one component per orbit label A, of dimension
    half of dim(M_rows x M_cols). For smaller k only the orbit-stratum table
    over partitions with at most k parts is produced.
    """
    if n < 1 or m < 1:
        raise ShapeMismatchError(f"census needs n, m >= 1, got {n}, {m}")
    types_n = comb.weak_compositions(d, n)
    types_m = comb.weak_compositions(d, m)
    table = CensusTable(n=n, m=m, d=d, k=k, total=0, expected=0)
    if k >= min(n, m):
        expected, matrices = count_orbits(n, m, d)
        records = [
            ComponentRecord(
                matrix=a.to_lists(),
                row_weight=list(a.row_sums),
                col_weight=list(a.col_sums),
                dimension=_half_ambient_dim(
                    FlagType(steps=a.row_sums), FlagType(steps=a.col_sums)
                ),
            )
            for a in matrices
        ]
        by_types = Counter((tuple(r.row_weight), tuple(r.col_weight)) for r in records)
        for t1 in types_n:
            for t2 in types_m:
                predicted = sum(
                    comb.kostka(lam, t1.steps) * comb.kostka(lam, t2.steps)
                    for lam in comb.enumerate_partitions(d, min(n, m))
                )
                assert by_types[(t1.steps, t2.steps)] == predicted
        table = table.model_copy(
            update={"components": records, "total": len(records), "expected": expected}
        )
    else:
        strata = []
        for lam in comb.enumerate_partitions(d, k):
            for t1 in types_n:
                for t2 in types_m:
                    s1, s2 = spaltenstein_dim(lam, t1), spaltenstein_dim(lam, t2)
                    if s1 is None or s2 is None:
                        continue
                    strata.append(
                        StratumRecord(
                            partition=list(lam.parts),
                            row_type=list(t1.steps),
                            col_type=list(t2.steps),
                            dimension=nilpotent_orbit_dim(lam) + s1 + s2,
                            components=comb.kostka(lam, t1.steps)
                            * comb.kostka(lam, t2.steps),
                        )
                    )
        expected = sum(
            comb.dim_gl_irrep(n, lam) * comb.dim_gl_irrep(m, lam)
            for lam in comb.enumerate_partitions(d, k)
        )
        table = table.model_copy(
            update={
                "strata": strata,
                "total": sum(s.components for s in strata),
                "expected": expected,
            }
        )
    logger.info(
        f"census n={n} m={m} d={d} k={k}: "
        f"{table.total} rows (expected {table.expected})"
    )
    return table


def dimension_identity_check(n: int, m: int, d: int) -> VerificationReport:
    """orbit dim + fiber dims = half of dim(M_t1 x M_t2) for each non-empty triple."""
    witnesses = []
    for lam in comb.enumerate_partitions(d, min(n, m)):
        for t1 in comb.weak_compositions(d, n):
            s1 = spaltenstein_dim(lam, t1)
            if s1 is None:
                continue
            for t2 in comb.weak_compositions(d, m):
                s2 = spaltenstein_dim(lam, t2)
                if s2 is None:
                    continue
                witnesses.append(
                    Witness(
                        claim=f"lambda={lam} t1={t1.steps} t2={t2.steps}",
                        left=nilpotent_orbit_dim(lam) + s1 + s2,
                        right=_half_ambient_dim(t1, t2),
                    )
                )
    report = VerificationReport(
        check="dimensions", parameters={"n": n, "m": m, "d": d}, witnesses=witnesses
    )
    logger.info(report.summary())
    return report
