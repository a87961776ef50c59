"""Explicit based models: the tensor space (C^n)^(x)d and S^d(C^n (x) C^m).

Operators act on column vectors: ``op[target, source]`` is the coefficient of
the target basis element in the image of the source basis element.

Two symmetric-group actions appear here and are kept apart on purpose:

* place permutation permutes tensor slots, (sigma . w)_p = w_{sigma^-1(p)};
* value permutation permutes letters, (pi . w)_p = pi(w_p); it is the action of
  permutation matrices in GL_d and is the Weyl group action on zero weight spaces.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Hashable, Mapping, Sequence

from duality.core.config import settings
from duality.core.exceptions import BudgetExceededError, ShapeMismatchError
from duality.models.domain import CompositionMatrix, CycleType, Partition, Permutation
from duality.services import combinatorics as comb
from duality.services.exact_linalg import (
    DomainMatrix,
    Subspace,
    as_integer,
    commutator,
    entries,
    identity,
    is_zero,
    kernel_basis,
    matrices_equal,
    sparse_matrix,
    stack,
)

logger = logging.getLogger(__name__)

Word = tuple[int, ...]
Generator = tuple[int, int]


def check_budget(requested: int, what: str, budget: int | None = None) -> None:
    """Raise ``BudgetExceededError`` when ``requested`` exceeds the budget."""
    limit = settings.budget if budget is None else budget
    if requested > limit:
        raise BudgetExceededError(requested, limit, what)


@dataclass(frozen=True)
class BasedModule:
    """A finite-dimensional module given by basis labels and exact generator matrices.

    ``left`` holds E_ab of gl_n, ``right`` holds E_ab of gl_m (symmetric model
    only) and ``transpositions`` holds the place permutations s_1, ..., s_{d-1}
    (tensor space only). ``weights`` lists (gl_n weight, gl_m weight) per label.
    """

    name: str
    n: int
    m: int
    d: int
    labels: tuple[Hashable, ...] = field(repr=False)
    weights: tuple[tuple[Word, Word], ...] = field(repr=False)
    left: Mapping[Generator, DomainMatrix] = field(repr=False)
    right: Mapping[Generator, DomainMatrix] = field(default_factory=dict, repr=False)
    transpositions: tuple[DomainMatrix, ...] = field(default=(), repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self) -> dict[Hashable, int]:
        return {label: i for i, label in enumerate(self.labels)}


@dataclass(frozen=True)
class WeightVector:
    """Vector of a based module together with its (gl_n, gl_m) weight."""

    left_weight: Word
    right_weight: Word
    coefficients: dict[Hashable, Any] = field(compare=False)

    @property
    def weight_pair(self) -> tuple[Word, Word]:
        return self.left_weight, self.right_weight


def _operator(
    labels: Sequence[Hashable],
    index: Mapping[Hashable, int],
    images: Callable[[Any], Mapping[Hashable, int]],
) -> DomainMatrix:
    values: dict[tuple[int, int], int] = {}
    for source in labels:
        for target, coeff in images(source).items():
            key = (index[target], index[source])
            values[key] = values.get(key, 0) + coeff
    size = len(labels)
    return sparse_matrix(values, (size, size))


def _content(word: Word, n: int) -> Word:
    counts = [0] * n
    for letter in word:
        counts[letter - 1] += 1
    return tuple(counts)


def _word_polarization(word: Word, a: int, b: int) -> dict[Word, int]:
    """E_ab on a word by the Leibniz rule: replace one letter b by a, in every slot."""
    image: dict[Word, int] = {}
    for p, letter in enumerate(word):
        if letter == b:
            target = word[:p] + (a,) + word[p + 1 :]
            image[target] = image.get(target, 0) + 1
    return image


def place_permutation(word: Word, sigma: Permutation) -> Word:
    """(sigma . w)_p = w_{sigma^-1(p)}: the letter in slot p moves to slot sigma(p)."""
    moved = [0] * len(word)
    for p, letter in enumerate(word):
        moved[sigma.word[p] - 1] = letter
    return tuple(moved)


def value_permutation(word: Word, pi: Permutation) -> Word:
    """(pi . w)_p = pi(w_p)."""
    return tuple(pi.word[letter - 1] for letter in word)


def adjacent_transposition(d: int, i: int) -> Permutation:
    """s_i swapping i and i + 1 (1-based)."""
    word = list(range(1, d + 1))
    word[i - 1], word[i] = word[i], word[i - 1]
    return Permutation(word=tuple(word))


def build_tensor_space(n: int, d: int, budget: int | None = None) -> BasedModule:
    """(C^n)^(x)d with gl_n acting by the Leibniz rule and S_d by place permutation."""
    if n < 1 or d < 1:
        raise ShapeMismatchError(f"tensor space needs n, d >= 1, got n={n}, d={d}")
    check_budget(n**d, f"tensor space (C^{n})^{d}", budget)
    labels = tuple(product(range(1, n + 1), repeat=d))
    index = {w: i for i, w in enumerate(labels)}
    left = {
        (a, b): _operator(
            labels, index, lambda w, a=a, b=b: _word_polarization(w, a, b)
        )
        for a in range(1, n + 1)
        for b in range(1, n + 1)
    }
    transpositions = tuple(
        _operator(
            labels,
            index,
            lambda w, s=adjacent_transposition(d, i): {place_permutation(w, s): 1},
        )
        for i in range(1, d)
    )
    weights = tuple((_content(w, n), ()) for w in labels)
    module = BasedModule(
        name=f"(C^{n})^{d}",
        n=n,
        m=0,
        d=d,
        labels=labels,
        weights=weights,
        left=left,
        transpositions=transpositions,
    )
    logger.info(f"built tensor space {module.name} of dimension {module.dim}")
    return module


def _row_polarization(
    a: CompositionMatrix, i: int, k: int
) -> dict[CompositionMatrix, int]:
    """E_ik z^A = sum_j a_kj z^{A + E_ij - E_kj} (0-based row indices)."""
    image: dict[CompositionMatrix, int] = {}
    for j, count in enumerate(a.entries[k]):
        if count:
            target = a.shifted((i, j), (k, j)) if i != k else a
            image[target] = image.get(target, 0) + count
    return image


def _column_polarization(
    a: CompositionMatrix, j: int, k: int
) -> dict[CompositionMatrix, int]:
    """E_jk z^A = sum_i a_ik z^{A + E_ij - E_ik} (0-based column indices)."""
    image: dict[CompositionMatrix, int] = {}
    for i in range(a.rows):
        count = a.entries[i][k]
        if count:
            target = a.shifted((i, j), (i, k)) if j != k else a
            image[target] = image.get(target, 0) + count
    return image


def build_symmetric_model(
    n: int, m: int, d: int, budget: int | None = None
) -> BasedModule:
    """S^d(C^n (x) C^m) on the monomials z^A with commuting gl_n, gl_m polarizations."""
    if n < 1 or m < 1 or d < 0:
        raise ShapeMismatchError(
            f"symmetric model needs n, m >= 1 and d >= 0, got {n}, {m}, {d}"
        )
    check_budget(
        comb.binomial(n * m + d - 1, d), f"symmetric model S^{d}(C^{n}xC^{m})", budget
    )
    labels = tuple(comb.composition_matrices(n, m, d))
    index = {a: i for i, a in enumerate(labels)}
    left = {
        (a + 1, b + 1): _operator(
            labels, index, lambda z, a=a, b=b: _row_polarization(z, a, b)
        )
        for a in range(n)
        for b in range(n)
    }
    right = {
        (a + 1, b + 1): _operator(
            labels, index, lambda z, a=a, b=b: _column_polarization(z, a, b)
        )
        for a in range(m)
        for b in range(m)
    }
    weights = tuple((z.row_sums, z.col_sums) for z in labels)
    module = BasedModule(
        name=f"S^{d}(C^{n}xC^{m})",
        n=n,
        m=m,
        d=d,
        labels=labels,
        weights=weights,
        left=left,
        right=right,
    )
    logger.info(f"built symmetric model {module.name} of dimension {module.dim}")
    return module


# ---------------------------------------------------------------------------
# Relation checks
# ---------------------------------------------------------------------------


def gl_relation_failures(
    generators: Mapping[Generator, DomainMatrix], size: int
) -> list[str]:
    """Pairs violating [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb."""
    failures = []
    zero = sparse_matrix({}, (size, size))
    for (a, b), x in generators.items():
        for (c, e), y in generators.items():
            expected = zero
            if b == c:
                expected = expected.add(generators[(a, e)])
            if e == a:
                expected = expected.sub(generators[(c, b)])
            if not matrices_equal(commutator(x, y), expected):
                failures.append(f"[E{a}{b},E{c}{e}]")
    return failures


def symmetric_group_relation_failures(
    transpositions: Sequence[DomainMatrix], size: int
) -> list[str]:
    """Violations of s_i^2 = 1, braid relations and far commutation."""
    failures = []
    one = identity(size)
    for i, s in enumerate(transpositions, start=1):
        if not matrices_equal(s.matmul(s), one):
            failures.append(f"s{i}^2")
        for j, t in enumerate(transpositions, start=1):
            if j == i + 1:
                if not matrices_equal(s.matmul(t).matmul(s), t.matmul(s).matmul(t)):
                    failures.append(f"braid s{i}s{j}")
            elif j > i + 1 and not is_zero(commutator(s, t)):
                failures.append(f"s{i}s{j}=s{j}s{i}")
    return failures


def commutation_failures(module: BasedModule) -> list[str]:
    """Generators of one action that fail to commute with generators of the other."""
    others = dict(module.right)
    others.update({(0, i): s for i, s in enumerate(module.transpositions, start=1)})
    failures = []
    for (a, b), x in module.left.items():
        for (c, e), y in others.items():
            if not is_zero(commutator(x, y)):
                label = f"s{e}" if c == 0 else f"F{c}{e}"
                failures.append(f"[E{a}{b},{label}]")
    return failures


def weight_failures(module: BasedModule) -> list[int]:
    """Basis indices where some E_aa does not act by the recorded weight."""
    failures = []
    for side, gens in ((0, module.left), (1, module.right)):
        for (a, b), op in gens.items():
            if a != b:
                continue
            values = entries(op)
            for i, w in enumerate(module.weights):
                if values.get((i, i), 0) != w[side][a - 1]:
                    failures.append(i)
            if any(r != c for (r, c) in values):
                failures.append(-1)
    return sorted(set(failures))


# ---------------------------------------------------------------------------
# Highest weight vectors
# ---------------------------------------------------------------------------


def _highest_weight_vectors(
    module: BasedModule, raising: list[DomainMatrix]
) -> list[WeightVector]:
    blocks: dict[tuple[Word, Word], list[int]] = {}
    for i, weight in enumerate(module.weights):
        blocks.setdefault(weight, []).append(i)
    rows = list(range(module.dim))
    vectors = []
    for weight in sorted(blocks, reverse=True):
        columns = blocks[weight]
        if raising:
            restricted = stack(
                [op.extract(rows, columns) for op in raising], len(columns)
            )
            kernel = kernel_basis(restricted)
        else:
            kernel = Subspace.full(len(columns))
        for vector in kernel.vectors():
            coefficients = {
                module.labels[columns[c]]: v for c, v in enumerate(vector) if v
            }
            vectors.append(
                WeightVector(
                    left_weight=weight[0],
                    right_weight=weight[1],
                    coefficients=coefficients,
                )
            )
    return vectors


def joint_highest_weight_vectors(module: BasedModule) -> list[WeightVector]:
    """Basis of the joint kernel of all raising operators E_{a,a+1} on both sides."""
    raising = [module.left[(a, a + 1)] for a in range(1, module.n)]
    raising += [module.right[(a, a + 1)] for a in range(1, module.m) if module.right]
    vectors = _highest_weight_vectors(module, raising)
    logger.info(f"{module.name}: {len(vectors)} joint highest weight vectors")
    return vectors


def gl_highest_weight_vectors(module: BasedModule) -> list[WeightVector]:
    """Highest weight vectors for the gl_n action alone."""
    raising = [module.left[(a, a + 1)] for a in range(1, module.n)]
    return _highest_weight_vectors(module, raising)


def expected_joint_weights(n: int, m: int, d: int) -> list[tuple[Word, Word]]:
    """{(lambda, lambda) : lambda with at most min(n, m) parts}, as padded weights."""
    return sorted(
        (
            (lam.padded(n), lam.padded(m))
            for lam in comb.enumerate_partitions(d, min(n, m))
        ),
        reverse=True,
    )


# ---------------------------------------------------------------------------
# Schur duality on the tensor space
# ---------------------------------------------------------------------------


def cycle_representative(rho: CycleType) -> Permutation:
    """Permutation made of consecutive cycles of the given lengths."""
    word: list[int] = []
    start = 1
    for length in rho.parts:
        word.extend(range(start + 1, start + length))
        word.append(start)
        start += length
    return Permutation(word=tuple(word))


def character_classes(d: int) -> list[CycleType]:
    """Cycle types in increasing lexicographic order, identity class first."""
    return list(reversed(comb.enumerate_partitions(d)))


def place_permutation_trace(module: BasedModule, sigma: Permutation) -> int:
    """Trace of a place permutation on the tensor space: its fixed words."""
    words: Sequence[Word] = module.labels  # type: ignore[assignment]
    return sum(1 for w in words if place_permutation(w, sigma) == w)


def schur_duality_multiplicities(
    n: int, d: int, module: BasedModule | None = None
) -> dict[Partition, tuple[int, int]]:
    """For lambda with at most n parts: multiplicities of S_lambda and of V_lambda.

    The first entry is the character inner product of the tensor-space trace
    with chi^lambda; the second is the number of gl_n highest weight vectors of
    weight lambda in the model.
    """
    module = module or build_tensor_space(n, d)
    classes = comb.enumerate_partitions(d)
    traces = {
        rho: place_permutation_trace(module, cycle_representative(rho))
        for rho in classes
    }
    hw_counts: dict[Word, int] = {}
    for vector in gl_highest_weight_vectors(module):
        hw_counts[vector.left_weight] = hw_counts.get(vector.left_weight, 0) + 1
    order = comb.factorial_of(d)
    result = {}
    for lam in comb.enumerate_partitions(d, n):
        inner = sum(
            comb.class_size(rho) * traces[rho] * comb.sym_character(lam, rho)
            for rho in classes
        )
        assert inner % order == 0
        result[lam] = (inner // order, hw_counts.get(lam.padded(n), 0))
    return result


# ---------------------------------------------------------------------------
# Zero weight spaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroWeightBridge:
    """Monomials with unit column sums matched to words, with intertwining checks."""

    n: int
    d: int
    pairs: list[tuple[CompositionMatrix, Word]]
    gl_checks: dict[Generator, bool]
    permutation_checks: dict[int, bool]


def matrix_to_word(a: CompositionMatrix) -> Word:
    """Column j maps to the row of its unique 1."""
    return tuple(
        next(i + 1 for i in range(a.rows) if a.entries[i][j]) for j in range(a.cols)
    )


def _column_swap(a: CompositionMatrix, sigma: Permutation) -> CompositionMatrix:
    """Column j of A moves to position sigma(j)."""
    columns = [None] * a.cols
    for j in range(a.cols):
        columns[sigma.word[j] - 1] = [a.entries[i][j] for i in range(a.rows)]
    return CompositionMatrix.from_rows(
        [[columns[j][i] for j in range(a.cols)] for i in range(a.rows)]
    )


def zero_weight_bridge(n: int, d: int, budget: int | None = None) -> ZeroWeightBridge:
    """Identify the unit-column-sum part of S^d(C^n (x) C^d) with (C^n)^(x)d."""
    symmetric = build_symmetric_model(n, d, d, budget)
    tensor = build_tensor_space(n, d, budget)
    zero = [
        a
        for a in symmetric.labels
        if all(s == 1 for s in a.col_sums)  # type: ignore[attr-defined]
    ]
    pairs = sorted(((a, matrix_to_word(a)) for a in zero), key=lambda p: p[1])
    words = [w for _, w in pairs]
    if sorted(words) != list(tensor.labels):
        raise AssertionError("unit column sum monomials do not match the words")

    sym_index = symmetric.index()
    sym_positions = [sym_index[a] for a, _ in pairs]

    gl_checks = {}
    for generator, op in symmetric.left.items():
        restricted = op.extract(sym_positions, sym_positions)
        gl_checks[generator] = matrices_equal(restricted, tensor.left[generator])

    labels = [a for a, _ in pairs]
    label_index = {a: i for i, a in enumerate(labels)}
    permutation_checks = {}
    for i, s in enumerate(tensor.transpositions, start=1):
        swap = adjacent_transposition(d, i)
        column_op = _operator(
            labels, label_index, lambda a, s=swap: {_column_swap(a, s): 1}
        )
        permutation_checks[i] = matrices_equal(column_op, s)
    return ZeroWeightBridge(
        n=n,
        d=d,
        pairs=pairs,
        gl_checks=gl_checks,
        permutation_checks=permutation_checks,
    )


def double_zero_weight_basis(
    d: int, budget: int | None = None
) -> list[CompositionMatrix]:
    """Monomials of S^d(C^d (x) C^d) with unit row and column sums: permutations."""
    check_budget(
        comb.binomial(d * d + d - 1, d), f"symmetric model S^{d}(C^{d}xC^{d})", budget
    )
    return [
        a
        for a in comb.composition_matrices(d, d, d)
        if all(s == 1 for s in a.row_sums) and all(s == 1 for s in a.col_sums)
    ]


@dataclass(frozen=True)
class ZeroWeightCharacter:
    """Character of the Weyl group on the zero weight space of V_lambda."""

    partition: Partition
    classes: list[CycleType]
    values: list[int]

    @property
    def dimension(self) -> int:
        return self.values[0]


def _young_symmetrize(
    word: Word, rows: list[list[int]], columns: list[list[int]]
) -> dict[Word, int]:
    """c_T . w with c_T = (column antisymmetrizer)(row symmetrizer) on tensor slots."""
    d = len(word)

    def group(blocks: list[list[int]]) -> list[Permutation]:
        perms = [list(range(1, d + 1))]
        for block in blocks:
            expanded = []
            for base in perms:
                for arrangement in comb.all_permutations(len(block)):
                    image = list(base)
                    for src, dst in zip(block, arrangement.word):
                        image[src - 1] = block[dst - 1]
                    expanded.append(image)
            perms = expanded
        return [Permutation(word=tuple(p)) for p in perms]

    symmetrized: dict[Word, int] = {}
    for p in group(rows):
        target = place_permutation(word, p)
        symmetrized[target] = symmetrized.get(target, 0) + 1
    result: dict[Word, int] = {}
    for q in group(columns):
        sign = comb.sign_of(q.cycle_type())
        for source, coeff in symmetrized.items():
            target = place_permutation(source, q)
            result[target] = result.get(target, 0) + sign * coeff
    return {w: c for w, c in result.items() if c}


def weyl_group_action_on_zero_weight(
    lam: Partition, d: int, budget: int | None = None
) -> ZeroWeightCharacter:
    """Character of value permutation on the zero weight space of c_T (C^d)^(x)d.

    V_lambda is realized in (C^d)^(x)d as c_T (C^d)^(x)d for the row-reading
    tableau T of shape lambda. The zero weight space of the image is spanned by
    c_T applied to the words using every letter once.
    """
    if lam.size != d:
        raise ShapeMismatchError(f"{lam} is not a partition of {d}")
    check_budget(d**d, f"tensor space (C^{d})^{d}", budget)
    rows, start = [], 1
    for part in lam.parts:
        rows.append(list(range(start, start + part)))
        start += part
    columns = [[row[j] for row in rows if len(row) > j] for j in range(lam.parts[0])]

    words = [p.word for p in comb.all_permutations(d)]
    index = {w: i for i, w in enumerate(words)}
    images = [_young_symmetrize(w, rows, columns) for w in words]
    image_space = Subspace.from_matrix(
        sparse_matrix(
            {
                (r, index[w]): c
                for r, image in enumerate(images)
                for w, c in image.items()
            },
            (len(words), len(words)),
        )
    )

    classes = character_classes(d)
    basis = image_space.vectors()
    values = []
    for rho in classes:
        pi = cycle_representative(rho)
        trace = 0
        for row, pivot in zip(basis, image_space.pivots):
            # coordinate of pi . row along the basis vector with this pivot
            moved_from = index[value_permutation(words[pivot], pi.inverse())]
            trace += row[moved_from]
        values.append(as_integer(trace))
    return ZeroWeightCharacter(partition=lam, classes=classes, values=values)
