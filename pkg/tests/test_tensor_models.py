"""Unit tests for the tensor space and the symmetric model."""

import pytest

from duality.core.exceptions import BudgetExceededError, ShapeMismatchError
from duality.models.domain import CompositionMatrix, Partition, Permutation
from duality.services import combinatorics as comb
from duality.services import tensor_models as tm
from duality.services.exact_linalg import entries


@pytest.fixture(scope="module")
def tensor_2_3():
    return tm.build_tensor_space(2, 3)


@pytest.fixture(scope="module")
def symmetric_2_2_2():
    return tm.build_symmetric_model(2, 2, 2)


class TestWordActions:
    def test_place_permutation_moves_slots(self):
        assert tm.place_permutation((1, 2, 3), Permutation.of(2, 3, 1)) == (3, 1, 2)

    def test_value_permutation_moves_letters(self):
        assert tm.value_permutation((1, 2, 1), Permutation.of(2, 1)) == (2, 1, 2)

    def test_adjacent_transposition(self):
        assert tm.adjacent_transposition(4, 2) == Permutation.of(1, 3, 2, 4)

    def test_cycle_representative(self):
        for rho in comb.enumerate_partitions(5):
            assert tm.cycle_representative(rho).cycle_type() == rho

    def test_character_classes_start_with_identity(self):
        assert tm.character_classes(3) == [
            Partition.of(1, 1, 1),
            Partition.of(2, 1),
            Partition.of(3),
        ]


class TestTensorSpace:
    """(C^n)^(x)d with its gl_n and S_d actions."""

    def test_dimension(self, tensor_2_3):
        assert tensor_2_3.dim == 8
        assert len(tensor_2_3.left) == 4
        assert len(tensor_2_3.transpositions) == 2

    def test_relations(self, tensor_2_3):
        assert tm.gl_relation_failures(tensor_2_3.left, tensor_2_3.dim) == []
        relations = tm.symmetric_group_relation_failures
        assert relations(tensor_2_3.transpositions, tensor_2_3.dim) == []

    def test_actions_commute(self, tensor_2_3):
        assert tm.commutation_failures(tensor_2_3) == []

    def test_weights_are_contents(self, tensor_2_3):
        assert tm.weight_failures(tensor_2_3) == []
        assert tensor_2_3.weights[tensor_2_3.index()[(1, 2, 2)]][0] == (1, 2)

    @pytest.mark.parametrize("n,d", [(2, 3), (3, 3), (2, 4)])
    def test_traces_count_fixed_words(self, n, d):
        tensor = tm.build_tensor_space(n, d)
        for rho in comb.enumerate_partitions(d):
            trace = tm.place_permutation_trace(tensor, tm.cycle_representative(rho))
            assert trace == n**rho.length

    @pytest.mark.parametrize("n,d", [(2, 3), (3, 3), (2, 4), (3, 4)])
    def test_schur_weyl_multiplicities(self, n, d):
        for lam, (sym_mult, gl_mult) in tm.schur_duality_multiplicities(n, d).items():
            assert sym_mult == comb.dim_gl_irrep(n, lam)
            assert gl_mult == comb.dim_sym_irrep(lam)

    def test_highest_weight_vectors(self):
        vectors = tm.gl_highest_weight_vectors(tm.build_tensor_space(2, 2))
        assert sorted(v.left_weight for v in vectors) == [(1, 1), (2, 0)]

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceededError) as exc_info:
            tm.build_tensor_space(3, 3, budget=10)
        assert exc_info.value.requested == 27
        assert exc_info.value.budget == 10

    def test_invalid_sizes(self):
        with pytest.raises(ShapeMismatchError):
            tm.build_tensor_space(0, 2)


class TestSymmetricModel:
    """S^d(C^n (x) C^m) and its joint highest weight vectors."""

    def test_dimension(self, symmetric_2_2_2):
        assert symmetric_2_2_2.dim == 10

    def test_relations(self, symmetric_2_2_2):
        assert tm.gl_relation_failures(symmetric_2_2_2.left, symmetric_2_2_2.dim) == []
        assert tm.gl_relation_failures(symmetric_2_2_2.right, symmetric_2_2_2.dim) == []
        assert tm.commutation_failures(symmetric_2_2_2) == []
        assert tm.weight_failures(symmetric_2_2_2) == []

    def test_polarization(self, symmetric_2_2_2):
        # E_12 z^A for A = [[0, 0], [1, 1]] moves a unit of row 2 to row 1 per column
        index = symmetric_2_2_2.index()
        source = CompositionMatrix.from_rows([[0, 0], [1, 1]])
        op = symmetric_2_2_2.left[(1, 2)]
        first = CompositionMatrix.from_rows([[1, 0], [0, 1]])
        second = CompositionMatrix.from_rows([[0, 1], [1, 0]])
        column = op.extract(list(range(symmetric_2_2_2.dim)), [index[source]])
        values = {i: v for (i, _), v in entries(column).items()}
        assert values == {index[first]: 1, index[second]: 1}

    @pytest.mark.parametrize(
        "n,m,d", [(2, 2, 2), (2, 3, 3), (3, 3, 3), (3, 2, 4), (1, 3, 2)]
    )
    def test_joint_highest_weights(self, n, m, d):
        model = tm.build_symmetric_model(n, m, d)
        found = sorted(
            (v.weight_pair for v in tm.joint_highest_weight_vectors(model)),
            reverse=True,
        )
        assert found == tm.expected_joint_weights(n, m, d)

    def test_one_sided_model_is_irreducible(self):
        model = tm.build_symmetric_model(3, 1, 4)
        vectors = tm.joint_highest_weight_vectors(model)
        assert [v.weight_pair for v in vectors] == [((4, 0, 0), (4,))]
        assert model.dim == comb.dim_gl_irrep(3, Partition.of(4))

    def test_budget_refusal(self):
        with pytest.raises(BudgetExceededError):
            tm.build_symmetric_model(3, 3, 4, budget=100)


class TestZeroWeight:
    @pytest.mark.parametrize("n", [1, 2])
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_bridge(self, n, d):
        bridge = tm.zero_weight_bridge(n, d)
        assert len(bridge.pairs) == n**d
        assert len(bridge.gl_checks) == n * n
        assert all(bridge.gl_checks.values())
        assert len(bridge.permutation_checks) == d - 1
        assert all(bridge.permutation_checks.values())

    def test_matrix_to_word(self):
        a = CompositionMatrix.from_rows([[1, 0, 1], [0, 1, 0]])
        assert tm.matrix_to_word(a) == (1, 2, 1)

    def test_double_zero_weight_basis(self):
        basis = tm.double_zero_weight_basis(3)
        assert len(basis) == 6
        assert all(a.row_sums == (1, 1, 1) and a.col_sums == (1, 1, 1) for a in basis)

    @pytest.mark.parametrize(
        "lam,values",
        [
            (Partition.of(3), [1, 1, 1]),
            (Partition.of(2, 1), [2, 0, -1]),
            (Partition.of(1, 1, 1), [1, -1, 1]),
        ],
    )
    def test_weyl_group_character(self, lam, values):
        character = tm.weyl_group_action_on_zero_weight(lam, 3)
        assert character.values == values
        assert character.dimension == comb.dim_sym_irrep(lam)

    def test_weyl_group_character_matches_specht_module(self):
        classes = tm.character_classes(4)
        for lam in comb.enumerate_partitions(4):
            character = tm.weyl_group_action_on_zero_weight(lam, 4)
            assert character.values == [comb.sym_character(lam, rho) for rho in classes]
            assert character.dimension == comb.kostka(lam, (1, 1, 1, 1))

    def test_partition_size_checked(self):
        with pytest.raises(ShapeMismatchError):
            tm.weyl_group_action_on_zero_weight(Partition.of(2), 3)
