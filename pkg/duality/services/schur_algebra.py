"""Schur algebras, S_d-equivariant maps between tensor spaces, and their truncations.

An S_d-equivariant map X : (C^m)^(x)d -> (C^n)^(x)d is constant on the S_d-orbits
of word pairs (w, w'), and those orbits are labelled by ``pair_invariant``. The
map xi_A is the 0/1 matrix supported on the orbit labelled A, so an equivariant
map is stored by its coordinates: its value at one representative pair per
orbit, listed in the order of ``composition_matrices(n, m, d)``.

Composition, central idempotents and isotypic supports are all computed in
these coordinates; the dense endomorphism matrices are only built to check the
coordinate calculus against honest matrix products.
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Any, Sequence

from sympy import QQ

from duality.core.exceptions import RankMismatchError, ShapeMismatchError
from duality.models.domain import CompositionMatrix, Partition
from duality.services import combinatorics as comb
from duality.services.exact_linalg import (
    ClosureResult,
    DomainMatrix,
    Subspace,
    commutant_dimension,
    entries,
    flatten,
    identity,
    matrices_equal,
    rank,
    scale,
    sparse_matrix,
    span_closure,
    stack,
)
from duality.services.flag_geometry import biword_of
from duality.services.rsk import lds
from duality.services.tensor_models import (
    build_symmetric_model,
    build_tensor_space,
    check_budget,
    commutation_failures,
    place_permutation,
    zero_weight_bridge,
)

logger = logging.getLogger(__name__)

Coordinates = tuple[Any, ...]
Word = tuple[int, ...]


def pair_invariant(
    u: Sequence[int], v: Sequence[int], n: int, m: int
) -> CompositionMatrix:
    """a_ij = #{p : u_p = i, v_p = j}; labels the S_d-orbit of the pair (u, v)."""
    if len(u) != len(v):
        raise ShapeMismatchError(f"words of lengths {len(u)} and {len(v)}")
    counts = [[0] * m for _ in range(n)]
    for i, j in zip(u, v):
        if not (1 <= i <= n and 1 <= j <= m):
            raise ShapeMismatchError(f"letter pair ({i}, {j}) outside {n}x{m}")
        counts[i - 1][j - 1] += 1
    return CompositionMatrix.from_rows(counts)


@lru_cache(maxsize=None)
def _labels(n: int, m: int, d: int) -> tuple[CompositionMatrix, ...]:
    return tuple(comb.composition_matrices(n, m, d))


@lru_cache(maxsize=None)
def _label_index(n: int, m: int, d: int) -> dict[CompositionMatrix, int]:
    return {a: i for i, a in enumerate(_labels(n, m, d))}


@lru_cache(maxsize=None)
def _composition_table(
    n: int, k: int, m: int, d: int
) -> tuple[tuple[tuple[int, int, int], ...], ...]:
    """For each C (n x m): triples (A, B, count) with count = c^C_{AB} as label indices.

    c^C_{AB} = #{u in [k]^d : inv(w_C, u) = A, inv(u, w'_C) = B} for the
    representative pair (w_C, w'_C) of C.
    """
    left_index, right_index = _label_index(n, k, d), _label_index(k, m, d)
    table = []
    for c in _labels(n, m, d):
        w, w2 = biword_of(c)
        counts: Counter[tuple[int, int]] = Counter()
        for u in product(range(1, k + 1), repeat=d):
            left = left_index[pair_invariant(w, u, n, k)]
            counts[(left, right_index[pair_invariant(u, w2, k, m)])] += 1
        table.append(tuple((a, b, cnt) for (a, b), cnt in sorted(counts.items())))
    return tuple(table)


def compose(
    x: Coordinates, y: Coordinates, n: int, k: int, m: int, d: int
) -> Coordinates:
    """Coordinates of X o Y for X : (C^k)^d -> (C^n)^d and Y : (C^m)^d -> (C^k)^d."""
    if len(x) != len(_labels(n, k, d)) or len(y) != len(_labels(k, m, d)):
        raise ShapeMismatchError(
            f"coordinates of lengths {len(x)}, {len(y)} do not fit ranks {n}, {k}, {m}"
        )
    result = []
    for row in _composition_table(n, k, m, d):
        total = QQ(0)
        for a, b, count in row:
            if x[a] and y[b]:
                total += count * x[a] * y[b]
        result.append(total)
    return tuple(result)


def basis_coordinates(n: int, m: int, d: int) -> list[Coordinates]:
    """Coordinates of every xi_A (unit vectors)."""
    size = len(_labels(n, m, d))
    return [tuple(QQ(1) if i == j else QQ(0) for j in range(size)) for i in range(size)]


def as_vector(x: Coordinates) -> DomainMatrix:
    return sparse_matrix({(0, i): v for i, v in enumerate(x) if v}, (1, len(x)))


# ---------------------------------------------------------------------------
# Central idempotents and isotypic support
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _projection_table(
    n: int, m: int, d: int
) -> tuple[tuple[tuple[int, Partition, int], ...], ...]:
    """For each C: (A, cycle type of sigma, count) over sigma.

    Counted are sigma with inv(sigma^-1 w_C, w'_C) = A.
    """
    index = _label_index(n, m, d)
    table = []
    perms = list(comb.all_permutations(d))
    for c in _labels(n, m, d):
        w, w2 = biword_of(c)
        counts: Counter[tuple[int, Partition]] = Counter()
        for sigma in perms:
            moved = place_permutation(w, sigma.inverse())
            counts[(index[pair_invariant(moved, w2, n, m)], sigma.cycle_type())] += 1
        table.append(
            tuple(
                (a, rho, cnt)
                for (a, rho), cnt in sorted(
                    counts.items(), key=lambda t: (t[0][0], t[0][1].parts)
                )
            )
        )
    return tuple(table)


def project(
    x: Coordinates, lams: Sequence[Partition], n: int, m: int, d: int
) -> Coordinates:
    """e X for the central idempotent e = sum of e_lambda over ``lams``.

    e_lambda = (f^lambda / d!) sum_sigma chi^lambda(sigma) sigma acts on the
    target tensor space by place permutation.
    """
    order = comb.factorial_of(d)
    weights: dict[Partition, Any] = {}
    for rho in comb.enumerate_partitions(d):
        weights[rho] = sum(
            (
                QQ(comb.dim_sym_irrep(lam) * comb.sym_character(lam, rho), order)
                for lam in lams
            ),
            QQ(0),
        )
    result = []
    for row in _projection_table(n, m, d):
        total = QQ(0)
        for a, rho, count in row:
            if x[a] and weights[rho]:
                total += count * weights[rho] * x[a]
        result.append(total)
    return tuple(result)


def isotypic_support(x: Coordinates, n: int, m: int, d: int) -> list[Partition]:
    """Partitions lambda with e_lambda X != 0."""
    return [
        lam for lam in comb.enumerate_partitions(d) if any(project(x, [lam], n, m, d))
    ]


def truncation_partitions(d: int, r: int) -> list[Partition]:
    return comb.enumerate_partitions(d, r)


# ---------------------------------------------------------------------------
# Intertwiner spaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntertwinerSpace:
    """S_d-equivariant maps (C^m)^d -> (C^n)^d with isotypic support of length <= r."""

    n: int
    m: int
    d: int
    r: int
    span: Subspace = field(repr=False)

    @property
    def labels(self) -> tuple[CompositionMatrix, ...]:
        return _labels(self.n, self.m, self.d)

    @property
    def dim(self) -> int:
        return self.span.dim

    def basis(self) -> list[Coordinates]:
        return [tuple(row) for row in self.span.vectors()]

    def contains(self, x: Coordinates) -> bool:
        return self.span.contains(as_vector(x))

    def expected_dim(self) -> int:
        return sum(
            comb.dim_gl_irrep(self.n, lam) * comb.dim_gl_irrep(self.m, lam)
            for lam in comb.enumerate_partitions(self.d, min(self.n, self.m, self.r))
        )


def build_intertwiner_space(
    n: int, m: int, d: int, r: int, budget: int | None = None
) -> IntertwinerSpace:
    """Image of the truncation idempotent e_{<=r} on all equivariant maps.

    With r >= min(n, m) nothing is cut and the space has one basis element per
    n x m matrix summing to d.
    """
    if n < 1 or m < 1 or d < 1 or r < 0:
        raise ShapeMismatchError(
            "intertwiner space needs n, m, d >= 1 and r >= 0, "
            f"got {n}, {m}, {d}, {r}"
        )
    size = comb.binomial(n * m + d - 1, d)
    check_budget(size, f"intertwiner space Hom((C^{m})^{d}, (C^{n})^{d})", budget)
    check_budget(comb.factorial_of(d) * size, "idempotent projection table", budget)
    if r >= min(n, m):
        span = Subspace.full(size)
    else:
        lams = truncation_partitions(d, r)
        images = (
            [project(x, lams, n, m, d) for x in basis_coordinates(n, m, d)]
            if lams
            else []
        )
        span = (
            Subspace.from_matrix(stack([as_vector(v) for v in images], size))
            if images
            else Subspace.zero(size)
        )
    space = IntertwinerSpace(n=n, m=m, d=d, r=r, span=span)
    logger.info(f"intertwiner space n={n} m={m} d={d} r={r}: dimension {space.dim}")
    return space


@dataclass(frozen=True)
class CompositionResult:
    """Pairwise products of two intertwiner bases and the checks made on them."""

    n: int
    k: int
    m: int
    d: int
    truncation: int
    products: list[Coordinates] = field(repr=False)
    contained: int
    support_ok: int
    product_dim: int
    supports: list[Partition]

    @property
    def pairs(self) -> int:
        return len(self.products)


def compose_intertwiners(x: IntertwinerSpace, y: IntertwinerSpace) -> CompositionResult:
    """Compose every basis map of ``x`` with every basis map of ``y``.

    Products must lie in the space truncated at min(a, k, b) and be supported
    on partitions of length at most min(n, a, k, b, m).
    """
    if x.m != y.n or x.d != y.d:
        raise RankMismatchError(x.m, y.n)
    n, k, m, d = x.n, x.m, y.m, x.d
    truncation = min(x.r, k, y.r)
    target = build_intertwiner_space(n, m, d, truncation)
    bound = min(n, x.r, k, y.r, m)
    products, contained, support_ok = [], 0, 0
    supports: set[Partition] = set()
    for left in x.basis():
        for right in y.basis():
            z = compose(left, right, n, k, m, d)
            products.append(z)
            if target.contains(z):
                contained += 1
            support = isotypic_support(z, n, m, d)
            supports.update(support)
            if all(lam.length <= bound for lam in support):
                support_ok += 1
    product_dim = (
        Subspace.from_matrix(
            stack([as_vector(z) for z in products], len(target.labels))
        ).dim
        if products
        else 0
    )
    return CompositionResult(
        n=n,
        k=k,
        m=m,
        d=d,
        truncation=truncation,
        products=products,
        contained=contained,
        support_ok=support_ok,
        product_dim=product_dim,
        supports=sorted(supports, key=lambda lam: lam.parts, reverse=True),
    )


def associativity_failures(
    xs: Sequence[Coordinates],
    ys: Sequence[Coordinates],
    zs: Sequence[Coordinates],
    ranks: tuple[int, int, int, int],
    d: int,
) -> int:
    """Number of triples with (X Y) Z != X (Y Z).

    The maps go through ranks n <- k <- l <- m.
    """
    n, k, l, m = ranks
    failures = 0
    for x in xs:
        for y in ys:
            xy = compose(x, y, n, k, l, d)
            for z in zs:
                left = compose(xy, z, n, l, m, d)
                if left != compose(x, compose(y, z, k, l, m, d), n, k, m, d):
                    failures += 1
    return failures


@dataclass(frozen=True)
class BimoduleCheck:
    left_closed: int
    right_closed: int
    commuting: int
    left_total: int
    right_total: int
    commuting_total: int


def verify_bimodule(n: int, m: int, d: int, r: int) -> BimoduleCheck:
    """S(n, d) acts on the left and S(m, d) on the right of the truncated space.

    The two actions commute.
    """
    space = build_intertwiner_space(n, m, d, r)
    left_algebra = basis_coordinates(n, n, d)
    right_algebra = basis_coordinates(m, m, d)
    basis = space.basis()
    left_closed = sum(
        space.contains(compose(a, h, n, n, m, d)) for a in left_algebra for h in basis
    )
    right_closed = sum(
        space.contains(compose(h, b, n, m, m, d)) for h in basis for b in right_algebra
    )
    failures = associativity_failures(
        left_algebra, basis, right_algebra, (n, n, m, m), d
    )
    total = len(left_algebra) * len(basis) * len(right_algebra)
    return BimoduleCheck(
        left_closed=left_closed,
        right_closed=right_closed,
        commuting=total - failures,
        left_total=len(left_algebra) * len(basis),
        right_total=len(basis) * len(right_algebra),
        commuting_total=total,
    )


# ---------------------------------------------------------------------------
# The Schur algebra S(n, d)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SchurAlgebra:
    """S(n, d) = End_{S_d}((C^n)^d) with its xi_A basis and structure constants."""

    n: int
    d: int
    labels: tuple[CompositionMatrix, ...] = field(repr=False)
    products: dict[tuple[int, int], dict[int, int]] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def multiply(self, a: int, b: int) -> dict[int, int]:
        """xi_A xi_B = sum_C c^C_{AB} xi_C, keyed by label index."""
        return self.products.get((a, b), {})

    def endomorphism(self, a: int) -> DomainMatrix:
        """xi_A as an explicit n^d x n^d matrix on the tensor space."""
        return _endomorphisms(self.n, self.d)[a]

    def unit(self) -> DomainMatrix:
        diagonal = [i for i, a in enumerate(self.labels) if _is_diagonal(a)]
        total = sparse_matrix({}, (self.n**self.d, self.n**self.d))
        for i in diagonal:
            total = total.add(self.endomorphism(i))
        return total

    def transpose_index(self, a: int) -> int:
        return _label_index(self.n, self.n, self.d)[self.labels[a].transpose()]

    def to_json(self) -> str:
        triples = sorted(
            [a, b, c, count]
            for (a, b), row in self.products.items()
            for c, count in row.items()
        )
        payload = {
            "n": self.n,
            "d": self.d,
            "basis": [a.to_lists() for a in self.labels],
            "products": triples,
        }
        return json.dumps(payload, sort_keys=True)


def _is_diagonal(a: CompositionMatrix) -> bool:
    return all(
        v == 0 for i, row in enumerate(a.entries) for j, v in enumerate(row) if i != j
    )


@lru_cache(maxsize=None)
def _endomorphisms(n: int, d: int) -> tuple[DomainMatrix, ...]:
    words = list(product(range(1, n + 1), repeat=d))
    position = {w: i for i, w in enumerate(words)}
    index = _label_index(n, n, d)
    supports: list[dict[tuple[int, int], int]] = [{} for _ in index]
    for w in words:
        for w2 in words:
            pair = (position[w], position[w2])
            supports[index[pair_invariant(w, w2, n, n)]][pair] = 1
    size = len(words)
    return tuple(sparse_matrix(s, (size, size)) for s in supports)


def build_schur_algebra(n: int, d: int, budget: int | None = None) -> SchurAlgebra:
    """The xi_A basis of S(n, d) and its multiplication table."""
    if n < 1 or d < 1:
        raise ShapeMismatchError(f"Schur algebra needs n, d >= 1, got n={n}, d={d}")
    check_budget(n**d, f"tensor space (C^{n})^{d}", budget)
    check_budget(comb.binomial(n * n + d - 1, d), f"Schur algebra S({n},{d})", budget)
    table = _composition_table(n, n, n, d)
    products: dict[tuple[int, int], dict[int, int]] = {}
    for c, row in enumerate(table):
        for a, b, count in row:
            products.setdefault((a, b), {})[c] = count
    algebra = SchurAlgebra(n=n, d=d, labels=_labels(n, n, d), products=products)
    logger.info(f"built Schur algebra S({n},{d}) of dimension {algebra.dim}")
    return algebra


def structure_constant_failures(algebra: SchurAlgebra, limit: int | None = None) -> int:
    """Pairs (A, B) where the product xi_A xi_B differs from the table expansion."""
    size = algebra.n**algebra.d
    failures, checked = 0, 0
    for a in range(algebra.dim):
        for b in range(algebra.dim):
            if limit is not None and checked >= limit:
                return failures
            expected = sparse_matrix({}, (size, size))
            for c, count in algebra.multiply(a, b).items():
                expected = expected.add(scale(algebra.endomorphism(c), count))
            product_ab = algebra.endomorphism(a).matmul(algebra.endomorphism(b))
            if not matrices_equal(product_ab, expected):
                failures += 1
            checked += 1
    return failures


def _times_right(
    terms: dict[int, Any], algebra: SchurAlgebra, c: int
) -> dict[int, Any]:
    out: dict[int, Any] = {}
    for e, coeff in terms.items():
        for f, count in algebra.multiply(e, c).items():
            out[f] = out.get(f, 0) + coeff * count
    return {f: v for f, v in out.items() if v}


def _times_left(algebra: SchurAlgebra, a: int, terms: dict[int, Any]) -> dict[int, Any]:
    out: dict[int, Any] = {}
    for e, coeff in terms.items():
        for f, count in algebra.multiply(a, e).items():
            out[f] = out.get(f, 0) + coeff * count
    return {f: v for f, v in out.items() if v}


def algebra_associativity_failures(algebra: SchurAlgebra) -> int:
    """Triples (A, B, C) where the multiplication table is not associative."""
    failures = 0
    for a in range(algebra.dim):
        for b in range(algebra.dim):
            ab = algebra.multiply(a, b)
            for c in range(algebra.dim):
                left = _times_right(ab, algebra, c)
                if left != _times_left(algebra, a, algebra.multiply(b, c)):
                    failures += 1
    return failures


def anti_involution_failures(algebra: SchurAlgebra) -> int:
    """Pairs where A -> A^T does not turn xi_A xi_B into xi_{B^T} xi_{A^T}."""
    failures = 0
    for a in range(algebra.dim):
        for b in range(algebra.dim):
            forward = {
                algebra.transpose_index(c): v
                for c, v in algebra.multiply(a, b).items()
            }
            backward = algebra.multiply(
                algebra.transpose_index(b), algebra.transpose_index(a)
            )
            if forward != backward:
                failures += 1
    return failures


def equivariance_failures(algebra: SchurAlgebra, budget: int | None = None) -> int:
    """Basis endomorphisms that fail to commute with some place permutation."""
    tensor = build_tensor_space(algebra.n, algebra.d, budget)
    failures = 0
    for a in range(algebra.dim):
        xi = algebra.endomorphism(a)
        if any(
            not matrices_equal(s.matmul(xi), xi.matmul(s))
            for s in tensor.transpositions
        ):
            failures += 1
    return failures


def xi_span_dim(algebra: SchurAlgebra) -> int:
    """Rank of the xi_A endomorphisms as vectors."""
    size = algebra.n**algebra.d
    vectors = [flatten(algebra.endomorphism(a)) for a in range(algebra.dim)]
    return rank(stack(vectors, size * size))


def tensor_commutant_dim(n: int, d: int, budget: int | None = None) -> int:
    """dim End_{S_d}((C^n)^d) from the commuting equations with s_1..s_{d-1}."""
    size = n**d
    check_budget(size * size, "commutant system", budget)
    tensor = build_tensor_space(n, d, budget)
    if not tensor.transpositions:
        return size * size
    return commutant_dimension(tensor.transpositions, size)


def simple_module_dims(n: int, d: int) -> dict[Partition, int]:
    """dim V_lambda for lambda with at most n parts.

    Their squares sum to dim S(n, d).
    """
    return {lam: comb.dim_gl_irrep(n, lam) for lam in comb.enumerate_partitions(d, n)}


def verify_ginzburg_surjection(
    n: int, d: int, budget: int | None = None
) -> ClosureResult:
    """Subalgebra generated by the E_ab on (C^n)^d together with the identity."""
    check_budget((n**d) ** 2, f"closure in End((C^{n})^{d})", budget)
    tensor = build_tensor_space(n, d, budget)
    generators = [tensor.left[key] for key in sorted(tensor.left)]
    result = span_closure(generators)
    logger.info(f"closure of gl_{n} on (C^{n})^{d}: trajectory {result.trajectory}")
    return result


def polarization_coordinates(n: int, d: int, a: int, b: int) -> Coordinates:
    """Coordinates of E_ab on (C^n)^d: c_A = a_ab when A - E_ab is diagonal, else 0."""
    coords = []
    for label in _labels(n, n, d):
        rest = [list(row) for row in label.entries]
        rest[a - 1][b - 1] -= 1
        diagonal = all(
            v == 0 for i, row in enumerate(rest) for j, v in enumerate(row) if i != j
        )
        entry = label.entries[a - 1][b - 1]
        coords.append(
            QQ(entry) if diagonal and rest[a - 1][b - 1] >= 0 else QQ(0)
        )
    return tuple(coords)


def _xi_combination(
    xis: Sequence[DomainMatrix], coords: Coordinates, size: int
) -> DomainMatrix:
    values: dict[tuple[int, int], Any] = {}
    for xi, c in zip(xis, coords):
        if not c:
            continue
        for key, v in entries(xi).items():
            values[key] = values.get(key, QQ(0)) + c * v
    return sparse_matrix({k: v for k, v in values.items() if v}, (size, size))


@dataclass(frozen=True)
class PolarizationCheck:
    """gl_n acting on S^d(C^n x C^m), compared with the xi_A basis of S(n, d)."""

    n: int
    m: int
    d: int
    generators: int
    expanded: int
    restricted: int
    commuting: int
    commuting_total: int


def verify_polarization_in_schur_algebra(
    n: int, m: int, d: int, budget: int | None = None
) -> PolarizationCheck:
    """Check that every E_ab factors through S(n, d) and commutes with gl_m.

    ``expanded`` counts E_ab on (C^n)^d equal to their xi_A expansion,
    ``restricted`` counts E_ab on S^d(C^n x C^d) whose restriction to the unit
    column sum monomials is E_ab on (C^n)^d, and ``commuting`` counts pairs
    (E_ab, F_ce) commuting on S^d(C^n x C^m).
    """
    if n < 1 or m < 1 or d < 1:
        raise ShapeMismatchError(
            f"polarization check needs n, m, d >= 1, got {n}, {m}, {d}"
        )
    size = n**d
    check_budget(size * size, f"xi_A operators on (C^{n})^{d}", budget)
    tensor = build_tensor_space(n, d, budget)
    xis = _endomorphisms(n, d)
    expanded = sum(
        matrices_equal(
            _xi_combination(xis, polarization_coordinates(n, d, a, b), size), op
        )
        for (a, b), op in sorted(tensor.left.items())
    )
    bridge = zero_weight_bridge(n, d, budget)
    symmetric = build_symmetric_model(n, m, d, budget)
    total = len(symmetric.left) * len(symmetric.right)
    check = PolarizationCheck(
        n=n,
        m=m,
        d=d,
        generators=len(tensor.left),
        expanded=expanded,
        restricted=sum(bridge.gl_checks.values()),
        commuting=total - len(commutation_failures(symmetric)),
        commuting_total=total,
    )
    logger.info(f"polarization on S^{d}(C^{n}xC^{m}): {check}")
    return check



# ---------------------------------------------------------------------------
# Group algebra Q[S_d] and its truncation idempotents
# ---------------------------------------------------------------------------

GroupElement = dict[Word, Any]


def _compose_perms(s: Word, t: Word) -> Word:
    """(s o t)(i) = s(t(i))."""
    return tuple(s[t[i] - 1] for i in range(len(t)))


def group_multiply(x: GroupElement, y: GroupElement) -> GroupElement:
    out: GroupElement = {}
    for s, a in x.items():
        for t, b in y.items():
            st = _compose_perms(s, t)
            out[st] = out.get(st, QQ(0)) + a * b
    return {w: v for w, v in out.items() if v}


def truncation_idempotent(d: int, k: int) -> GroupElement:
    """e_{<=k} = sum of (f^lambda / d!) sum_w chi^lambda(w) w.

    The outer sum runs over lambda with at most k parts.
    """
    order = comb.factorial_of(d)
    lams = comb.enumerate_partitions(d, k)
    element: GroupElement = {}
    for w in comb.all_permutations(d):
        rho = w.cycle_type()
        value = sum(
            (
                QQ(comb.dim_sym_irrep(lam) * comb.sym_character(lam, rho), order)
                for lam in lams
            ),
            QQ(0),
        )
        if value:
            element[w.word] = value
    return element


@dataclass(frozen=True)
class TruncatedGroupAlgebra:
    d: int
    k: int
    ideal_dim: int
    expected: int
    rsk_count: int


def truncated_group_algebra(
    d: int, k: int, budget: int | None = None
) -> TruncatedGroupAlgebra:
    """Dimension of e_{<=k} Q[S_d] from the rank of left multiplication by e_{<=k}."""
    order = comb.factorial_of(d)
    check_budget(order, f"group algebra Q[S_{d}]", budget)
    perms = [w.word for w in comb.all_permutations(d)]
    index = {w: i for i, w in enumerate(perms)}
    e = truncation_idempotent(d, k)
    values = {}
    for j, t in enumerate(perms):
        for s, coeff in e.items():
            values[(index[_compose_perms(s, t)], j)] = coeff
    ideal_dim = rank(sparse_matrix(values, (order, order)))
    expected = sum(
        comb.dim_sym_irrep(lam) ** 2 for lam in comb.enumerate_partitions(d, k)
    )
    rsk_count = sum(1 for w in comb.all_permutations(d) if lds(w) <= k)
    return TruncatedGroupAlgebra(
        d=d, k=k, ideal_dim=ideal_dim, expected=expected, rsk_count=rsk_count
    )


@dataclass(frozen=True)
class IdempotentRule:
    d: int
    k: int
    l: int
    product_rule: bool
    idempotent: bool
    central: bool


def idempotent_product_rule(d: int, k: int, l: int) -> IdempotentRule:
    """e_{<=k} e_{<=l} = e_{<=min(k, l)}, e_{<=k} idempotent and central."""
    ek, el = truncation_idempotent(d, k), truncation_idempotent(d, l)
    emin = truncation_idempotent(d, min(k, l))
    central = True
    for i in range(1, d):
        s = list(range(1, d + 1))
        s[i - 1], s[i] = s[i], s[i - 1]
        gen = {tuple(s): QQ(1)}
        if group_multiply(gen, ek) != group_multiply(ek, gen):
            central = False
    return IdempotentRule(
        d=d,
        k=k,
        l=l,
        product_rule=group_multiply(ek, el) == emin,
        idempotent=group_multiply(ek, ek) == ek,
        central=central,
    )


def identity_element(d: int) -> GroupElement:
    return {tuple(range(1, d + 1)): QQ(1)}


def unit_is_identity(algebra: SchurAlgebra) -> bool:
    return matrices_equal(algebra.unit(), identity(algebra.n**algebra.d))
