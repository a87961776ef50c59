"""Unit tests for the RSK and Robinson-Schensted correspondences."""

import pytest

from duality.core.exceptions import ShapeMismatchError
from duality.models.domain import CompositionMatrix, Partition, Permutation, Tableau
from duality.services import combinatorics as comb
from duality.services.rsk import (
    inverse_rsk,
    lds,
    lis,
    permutation_matrix,
    rs_shape,
    rsk,
)


class TestRSK:
    """Forward map on small matrices."""

    def test_identity_matrix(self):
        p, q = rsk(CompositionMatrix.from_rows([[1, 0], [0, 1]]))
        assert p.rows == ((1, 2),)
        assert q.rows == ((1, 2),)

    def test_antidiagonal_matrix(self):
        p, q = rsk(CompositionMatrix.from_rows([[0, 1], [1, 0]]))
        assert p.rows == ((1,), (2,))
        assert q.rows == ((1,), (2,))

    def test_single_row(self):
        p, q = rsk(CompositionMatrix.from_rows([[2, 0, 1]]))
        assert p.rows == ((1, 1, 3),)
        assert q.rows == ((1, 1, 1),)

    def test_contents_are_column_and_row_sums(self):
        for a in comb.composition_matrices(2, 3, 4):
            p, q = rsk(a)
            assert p.content(3) == a.col_sums
            assert q.content(2) == a.row_sums
            assert p.shape == q.shape
            assert p.shape.length <= 2

    def test_zero_matrix(self):
        p, q = rsk(CompositionMatrix.zeros(2, 2))
        assert p.rows == () and q.rows == ()


class TestInverseRSK:
    @pytest.mark.parametrize(
        "n,m,d", [(2, 2, 3), (2, 3, 3), (3, 3, 3), (1, 4, 4), (3, 2, 4)]
    )
    def test_roundtrip(self, n, m, d):
        for a in comb.composition_matrices(n, m, d):
            assert inverse_rsk(*rsk(a), n=n, m=m) == a

    def test_bijection_onto_tableau_pairs(self):
        seen = {rsk(a) for a in comb.composition_matrices(2, 2, 3)}
        assert len(seen) == comb.binomial(6, 3)

    def test_default_bounds_from_entries(self):
        p = Tableau.from_lists([[1, 2]])
        q = Tableau.from_lists([[1, 1]])
        assert inverse_rsk(p, q) == CompositionMatrix.from_rows([[1, 1]])

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            inverse_rsk(Tableau.from_lists([[1, 2]]), Tableau.from_lists([[1], [2]]))

    def test_entries_exceed_bounds(self):
        with pytest.raises(ShapeMismatchError):
            inverse_rsk(
                Tableau.from_lists([[1, 3]]), Tableau.from_lists([[1, 1]]), n=1, m=2
            )

    def test_non_semistandard_tableau_rejected(self):
        with pytest.raises(ValueError):
            Tableau.from_lists([[2, 1]])
        with pytest.raises(ValueError):
            Tableau.from_lists([[1, 2], [1]])


class TestRobinsonSchensted:
    """Permutations, their shapes and monotone subsequences."""

    def test_permutation_matrix(self):
        a = permutation_matrix(Permutation.of(2, 1, 3))
        assert a.to_lists() == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]

    def test_shape_and_subsequences(self):
        w = Permutation.of(3, 1, 2)
        assert rs_shape(w) == Partition.of(2, 1)
        assert lds(w) == 2
        assert lis(w) == 2

    def test_extremes(self):
        assert rs_shape(Permutation.identity(4)) == Partition.of(4)
        assert rs_shape(Permutation.of(4, 3, 2, 1)) == Partition.of(1, 1, 1, 1)

    @pytest.mark.parametrize("d", range(1, 7))
    def test_shape_rows_and_columns(self, d):
        for w in comb.all_permutations(d):
            shape = rs_shape(w)
            assert shape.length == lds(w)
            assert shape.parts[0] == lis(w)
            assert rs_shape(w.inverse()) == shape

    def test_shape_matches_rsk_of_permutation_matrix(self):
        for w in comb.all_permutations(4):
            p, _ = rsk(permutation_matrix(w))
            assert p.shape == rs_shape(w)

    @pytest.mark.parametrize("d", range(1, 8))
    def test_truncated_counts(self, d):
        shapes = [rs_shape(w).length for w in comb.all_permutations(d)]
        for k in range(1, d + 1):
            expected = sum(
                comb.dim_sym_irrep(lam) ** 2 for lam in comb.enumerate_partitions(d, k)
            )
            assert sum(1 for length in shapes if length <= k) == expected

    def test_avoiding_long_decreasing_subsequences_in_s4(self):
        # Catalan number: 1 + 3^2 + 2^2
        assert sum(1 for w in comb.all_permutations(4) if lds(w) <= 2) == 14
