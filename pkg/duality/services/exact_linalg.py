"""Exact rational linear algebra on top of sympy's ``DomainMatrix`` over QQ.

Matrices are kept in the sparse (SDM) format throughout so that products,
sums and comparisons never mix representations. Vectors are 1 x N matrices.
A ``Subspace`` is stored as the non-zero rows of its reduced row-echelon
form, which makes equality of subspaces a plain data comparison.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Sequence

import numpy as np
from sympy import QQ, Rational
from sympy.polys.matrices import DomainMatrix

from duality.core.exceptions import AmbientMismatchError, ShapeMismatchError

logger = logging.getLogger(__name__)

RationalMatrix = DomainMatrix


def to_rational(value: Any) -> Any:
    """Convert an int, ``"p/q"`` string, sympy Rational or QQ element into QQ."""
    if isinstance(value, str):
        value = Rational(value.strip())
    if isinstance(value, Rational):
        return QQ(int(value.p), int(value.q))
    if isinstance(value, (int, np.integer)):
        return QQ(int(value))
    return QQ.convert(value)


def format_rational(value: Any) -> str:
    """Canonical ``"p/q"`` (or ``"p"``) string of a QQ element."""
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def sparse_matrix(
    entries: Mapping[tuple[int, int], Any], shape: tuple[int, int]
) -> DomainMatrix:
    """Sparse matrix from a ``{(i, j): value}`` mapping; zero values are dropped."""
    rows: dict[int, dict[int, Any]] = {}
    for (i, j), value in entries.items():
        q = to_rational(value)
        if q:
            rows.setdefault(i, {})[j] = q
    return DomainMatrix(rows, shape, QQ)


def rational_matrix(
    rows: Sequence[Sequence[Any]], cols: int | None = None
) -> DomainMatrix:
    """Sparse matrix from nested rows of ints, strings or rationals."""
    width = cols if cols is not None else (len(rows[0]) if rows else 0)
    for row in rows:
        if len(row) != width:
            raise ShapeMismatchError("matrix rows have different lengths")
    return sparse_matrix(
        {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)},
        (len(rows), width),
    )


def identity(n: int) -> DomainMatrix:
    return sparse_matrix({(i, i): 1 for i in range(n)}, (n, n))


def zeros(rows: int, cols: int) -> DomainMatrix:
    return DomainMatrix({}, (rows, cols), QQ)


def entries(matrix: DomainMatrix) -> dict[tuple[int, int], Any]:
    """Non-zero entries of ``matrix`` keyed by position."""
    sdm = matrix.to_sparse().rep
    return {(i, j): v for i, row in sdm.items() for j, v in row.items() if v}


def to_lists(matrix: DomainMatrix) -> list[list[Any]]:
    rows, cols = matrix.shape
    dense = [[QQ(0)] * cols for _ in range(rows)]
    for (i, j), v in entries(matrix).items():
        dense[i][j] = v
    return dense


def matrices_equal(left: DomainMatrix, right: DomainMatrix) -> bool:
    return left.shape == right.shape and entries(left) == entries(right)


def scale(matrix: DomainMatrix, factor: Any) -> DomainMatrix:
    factor = to_rational(factor)
    values = {k: v * factor for k, v in entries(matrix).items()}
    return sparse_matrix(values, matrix.shape)


def commutator(left: DomainMatrix, right: DomainMatrix) -> DomainMatrix:
    return left.matmul(right).sub(right.matmul(left))


def is_zero(matrix: DomainMatrix) -> bool:
    return not entries(matrix)


def flatten(matrix: DomainMatrix) -> DomainMatrix:
    """Row-major vectorization as a 1 x (rows*cols) matrix."""
    rows, cols = matrix.shape
    return sparse_matrix(
        {(0, i * cols + j): v for (i, j), v in entries(matrix).items()},
        (1, rows * cols),
    )


def stack(vectors: Sequence[DomainMatrix], cols: int) -> DomainMatrix:
    """Stack 1 x cols vectors (or row blocks) into one matrix."""
    merged: dict[tuple[int, int], Any] = {}
    offset = 0
    for block in vectors:
        if block.shape[1] != cols:
            raise ShapeMismatchError(f"cannot stack width {block.shape[1]} into {cols}")
        for (i, j), v in entries(block).items():
            merged[(offset + i, j)] = v
        offset += block.shape[0]
    return sparse_matrix(merged, (offset, cols))


# ---------------------------------------------------------------------------
# Echelon forms, rank, kernels
# ---------------------------------------------------------------------------


def rref(matrix: DomainMatrix) -> DomainMatrix:
    """Reduced row-echelon form (same shape, zero rows last)."""
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        return matrix
    reduced, _ = matrix.to_sparse().rref()
    return reduced


def _rref_rows(matrix: DomainMatrix) -> tuple[DomainMatrix, tuple[int, ...]]:
    rows, cols = matrix.shape
    if rows == 0 or cols == 0 or is_zero(matrix):
        return zeros(0, cols), ()
    reduced, pivots = matrix.to_sparse().rref()
    r = len(pivots)
    return reduced.extract(list(range(r)), list(range(cols))), tuple(pivots)


def rank(matrix: DomainMatrix) -> int:
    if matrix.shape[0] == 0 or matrix.shape[1] == 0 or is_zero(matrix):
        return 0
    return len(matrix.to_sparse().rref()[1])


def determinant(matrix: DomainMatrix) -> Any:
    rows, cols = matrix.shape
    if rows != cols:
        raise ShapeMismatchError(f"determinant of a {rows}x{cols} matrix")
    if rows == 0:
        return QQ(1)
    return matrix.to_dense().det()


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^ambient given by its canonical echelon basis."""

    ambient: int
    basis: DomainMatrix = field(compare=False, repr=False)
    pivots: tuple[int, ...] = field(compare=False, repr=False)
    key: tuple[tuple[Any, ...], ...] = field(repr=False)

    @classmethod
    def from_matrix(cls, matrix: DomainMatrix) -> "Subspace":
        """Row space of ``matrix``."""
        basis, pivots = _rref_rows(matrix)
        key = tuple(tuple(row) for row in to_lists(basis))
        return cls(ambient=matrix.shape[1], basis=basis, pivots=pivots, key=key)

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[Any]], ambient: int) -> "Subspace":
        if not vectors:
            return cls.zero(ambient)
        return cls.from_matrix(rational_matrix(vectors, cols=ambient))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient=ambient, basis=zeros(0, ambient), pivots=(), key=())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.from_matrix(identity(ambient))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def contains(self, vector: DomainMatrix) -> bool:
        """Membership of a 1 x ambient vector."""
        if vector.shape != (1, self.ambient):
            raise AmbientMismatchError(self.ambient, vector.shape[1])
        values = entries(vector)
        if not values:
            return True
        if self.dim == 0:
            return False
        coords = sparse_matrix(
            {(0, r): values.get((0, p), 0) for r, p in enumerate(self.pivots)},
            (1, self.dim),
        )
        return matrices_equal(coords.matmul(self.basis), vector)

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient != self.ambient:
            raise AmbientMismatchError(self.ambient, other.ambient)
        return all(self.contains(other.row(r)) for r in range(other.dim))

    def row(self, r: int) -> DomainMatrix:
        return self.basis.extract([r], list(range(self.ambient)))

    def extended(self, vectors: DomainMatrix) -> "Subspace":
        if self.dim == 0:
            return Subspace.from_matrix(vectors)
        return Subspace.from_matrix(stack([self.basis, vectors], self.ambient))

    def plus(self, other: "Subspace") -> "Subspace":
        if other.ambient != self.ambient:
            raise AmbientMismatchError(self.ambient, other.ambient)
        return self.extended(other.basis) if other.dim else self

    def image(self, matrix: DomainMatrix) -> "Subspace":
        """Image of the subspace under the column-vector action v -> matrix @ v."""
        if self.dim == 0:
            return Subspace.zero(matrix.shape[0])
        return Subspace.from_matrix(self.basis.matmul(matrix.transpose()))

    def vectors(self) -> list[list[Any]]:
        return to_lists(self.basis)


def kernel_basis(matrix: DomainMatrix) -> Subspace:
    """Kernel of ``matrix`` acting on column vectors."""
    rows, cols = matrix.shape
    if rows == 0 or is_zero(matrix):
        return Subspace.full(cols)
    null = matrix.to_sparse().nullspace()
    if null.shape[0] == 0:
        return Subspace.zero(cols)
    return Subspace.from_matrix(null.to_sparse())


def intersect(left: Subspace, right: Subspace) -> Subspace:
    """Intersection, computed from the left kernel of the stacked bases."""
    if left.ambient != right.ambient:
        raise AmbientMismatchError(left.ambient, right.ambient)
    if left.dim == 0 or right.dim == 0:
        return Subspace.zero(left.ambient)
    stacked = stack([left.basis, right.basis], left.ambient)
    relations = kernel_basis(stacked.transpose())
    if relations.dim == 0:
        return Subspace.zero(left.ambient)
    coeffs = relations.basis.extract(list(range(relations.dim)), list(range(left.dim)))
    result = Subspace.from_matrix(coeffs.matmul(left.basis))
    assert result.dim == left.dim + right.dim - rank(stacked)
    return result


def intersection_dim(left: Subspace, right: Subspace) -> int:
    """dim(left & right) = dim left + dim right - rank of the stacked bases."""
    if left.ambient != right.ambient:
        raise AmbientMismatchError(left.ambient, right.ambient)
    if left.dim == 0 or right.dim == 0:
        return 0
    if left.dim == left.ambient:
        return right.dim
    if right.dim == right.ambient:
        return left.dim
    return left.dim + right.dim - rank(stack([left.basis, right.basis], left.ambient))


# ---------------------------------------------------------------------------
# Algebras generated by matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosureResult:
    """Basis and growth history of a product-closed span."""

    dimension: int
    basis: list[DomainMatrix] = field(repr=False)
    trajectory: list[int]


def _matmul(left: DomainMatrix, right: DomainMatrix) -> DomainMatrix:
    return left.matmul(right)


def span_closure(
    generators: Sequence[DomainMatrix],
    product: Callable[[DomainMatrix, DomainMatrix], DomainMatrix] = _matmul,
) -> ClosureResult:
    """Smallest product-closed span containing ``generators`` and the identity.

    Each round multiplies the elements added in the previous round by every
    generator on both sides; the dimension is bounded by size**2, so the
    rounds reach a fixed point.
    """
    if not generators:
        raise ShapeMismatchError("span_closure needs at least one generator")
    size = generators[0].shape[0]
    for g in generators:
        if g.shape != (size, size):
            raise ShapeMismatchError(
                f"generator of shape {g.shape}, expected {(size, size)}"
            )

    basis: list[DomainMatrix] = []
    span = Subspace.zero(size * size)

    def admit(candidate: DomainMatrix) -> bool:
        nonlocal span
        vector = flatten(candidate)
        if span.contains(vector):
            return False
        span = span.extended(vector)
        basis.append(candidate)
        return True

    frontier = [m for m in [identity(size), *generators] if admit(m)]
    trajectory = [span.dim]
    while frontier:
        fresh = []
        for element in frontier:
            for g in generators:
                for candidate in (product(g, element), product(element, g)):
                    if admit(candidate):
                        fresh.append(candidate)
        frontier = fresh
        trajectory.append(span.dim)
        logger.debug(f"span_closure round {len(trajectory) - 1}: dim {span.dim}")
    return ClosureResult(dimension=span.dim, basis=basis, trajectory=trajectory)


def commutant_dimension(generators: Iterable[DomainMatrix], size: int) -> int:
    """dim {X : G X = X G for every generator G}, from the rank of the linear system."""
    system: dict[tuple[int, int], Any] = {}
    offset = 0
    for g in generators:
        for (i, k), value in entries(g).items():
            for j in range(size):
                key = (offset + i * size + j, k * size + j)
                system[key] = system.get(key, QQ(0)) + value
        for (k, j), value in entries(g).items():
            for i in range(size):
                key = (offset + i * size + j, i * size + k)
                system[key] = system.get(key, QQ(0)) - value
        offset += size * size
    equations = sparse_matrix(system, (offset, size * size))
    return size * size - rank(equations)


# ---------------------------------------------------------------------------
# Random exact data
# ---------------------------------------------------------------------------


def random_integer_matrix(
    rows: int, cols: int, rng: np.random.Generator, bound: int = 9
) -> DomainMatrix:
    values = rng.integers(-bound, bound + 1, size=(rows, cols))
    return rational_matrix([[int(v) for v in row] for row in values], cols=cols)


def random_invertible(d: int, rng: np.random.Generator, bound: int = 9) -> DomainMatrix:
    """Random integer matrix, entries in [-bound, bound], retried until invertible."""
    while True:
        candidate = random_integer_matrix(d, d, rng, bound)
        if d == 0 or determinant(candidate) != 0:
            return candidate


def inverse(matrix: DomainMatrix) -> DomainMatrix:
    """Exact inverse of an invertible square matrix."""
    rows, cols = matrix.shape
    if rows != cols:
        raise ShapeMismatchError(f"inverse of a {rows}x{cols} matrix")
    return matrix.to_dense().inv().to_sparse()


def as_integer(value: Any) -> int:
    """Python int of an integral QQ element."""
    q = to_rational(value)
    if int(q.denominator) != 1:
        raise ValueError(f"{format_rational(q)} is not an integer")
    return int(q.numerator)
