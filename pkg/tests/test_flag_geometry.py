"""Unit tests for flags, orbit invariants and the dimension calculus."""

import json
from pathlib import Path
from unittest.mock import patch

import numpy as np
import pytest

from duality.core.exceptions import (
    AmbientMismatchError,
    MalformedInputError,
    ShapeMismatchError,
)
from duality.models.domain import CompositionMatrix, FlagType, Partition
from duality.services import combinatorics as comb
from duality.services import flag_geometry as geo
from duality.services.exact_linalg import Subspace, random_invertible, rational_matrix
from duality.services.schur_algebra import pair_invariant

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def rng():
    return np.random.default_rng(11)


def load(name: str) -> dict:
    return json.loads((FIXTURES / name).read_text())


class TestFlags:
    def test_from_basis(self):
        basis = rational_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        flag = geo.flag_from_basis(basis, FlagType.of(1, 0, 2))
        assert flag.flag_type == FlagType.of(1, 0, 2)
        assert flag.step(0).dim == 0
        assert flag.step(2) == flag.step(1)
        assert flag.step(3).dim == 3

    def test_random_flag_has_requested_type(self, rng):
        for t in comb.weak_compositions(4, 3):
            assert geo.random_flag(t, rng).flag_type == t

    def test_coordinate_flag(self):
        flag = geo.coordinate_flag((2, 1, 2), 2)
        assert flag.flag_type == FlagType.of(1, 2)
        assert flag.step(1) == Subspace.from_vectors([[0, 1, 0]], 3)

    def test_coordinate_flag_letters_checked(self):
        with pytest.raises(ShapeMismatchError):
            geo.coordinate_flag((1, 3), 2)

    def test_non_nested_chain_reports_index(self):
        spaces = [
            Subspace.from_vectors([[0, 1, 0]], 3),
            Subspace.from_vectors([[1, 0, 0], [0, 0, 1]], 3),
        ]
        with pytest.raises(MalformedInputError) as exc_info:
            geo.Flag.from_spaces([*spaces, Subspace.full(3)], 3)
        assert exc_info.value.chain_index == 2

    def test_last_step_must_be_everything(self):
        with pytest.raises(MalformedInputError):
            geo.Flag.from_spaces([Subspace.from_vectors([[1, 0]], 2)], 2)

    def test_act_moves_flag(self, rng):
        flag = geo.coordinate_flag((1, 2), 2)
        swap = rational_matrix([[0, 1], [1, 0]])
        assert flag.act(swap) == geo.coordinate_flag((2, 1), 2)

    def test_spec_roundtrip(self, rng):
        flag = geo.random_flag(FlagType.of(1, 2), rng)
        assert geo.flag_from_spec(geo.flag_to_spec(flag)) == flag


class TestFlagParsing:
    """JSON documents of flags and flag pairs."""

    def test_parse_flag(self):
        flag = geo.parse_flag({"d": 2, "steps": [[["1/2", 1]], [[1, 0], [0, 1]]]})
        assert flag.flag_type == FlagType.of(1, 1)

    def test_declared_type_checked(self):
        with pytest.raises(MalformedInputError):
            geo.parse_flag(
                {"d": 2, "steps": [[[1, 0]], [[1, 0], [0, 1]]], "type": [2, 0]}
            )

    def test_bad_entries(self):
        with pytest.raises(MalformedInputError):
            geo.parse_flag({"d": 2, "steps": [[["x", 1]], [[1, 0], [0, 1]]]})
        with pytest.raises(MalformedInputError):
            geo.parse_flag({"d": 2, "steps": [[[1, 0, 0]], [[1, 0], [0, 1]]]})

    def test_missing_keys(self):
        with pytest.raises(MalformedInputError):
            geo.flag_pair_from_payload({"first": {"d": 1, "steps": [[[1]]]}})

    def test_ambient_mismatch(self):
        payload = {
            "first": {"d": 1, "steps": [[[1]]]},
            "second": {"d": 2, "steps": [[[1, 0], [0, 1]]]},
        }
        with pytest.raises(AmbientMismatchError):
            geo.flag_pair_from_payload(payload)

    def test_non_nested_fixture(self):
        with pytest.raises(MalformedInputError) as exc_info:
            geo.flag_pair_from_payload(load("non_nested.json"))
        assert exc_info.value.chain_index == 2
        assert exc_info.value.message.startswith("second flag, step 2: ")

    def test_wrong_length_vector_reports_step(self):
        with pytest.raises(MalformedInputError) as exc_info:
            geo.parse_flag({"d": 2, "steps": [[[1, 0]], [[1, 0, 0], [0, 1]]]})
        assert exc_info.value.chain_index == 2
        assert exc_info.value.message == "flag, step 2: vector of length 3 in Q^2"

    def test_non_numeric_entry_reports_step(self):
        with pytest.raises(MalformedInputError) as exc_info:
            geo.parse_flag({"d": 2, "steps": [[[1, 0]], [[None, 1], [0, 1]]]})
        assert exc_info.value.chain_index == 2

    def test_declared_type_reports_first_differing_step(self):
        with pytest.raises(MalformedInputError) as exc_info:
            geo.parse_flag(
                {"d": 2, "steps": [[[1, 0]], [[1, 0], [0, 1]]], "type": [2, 0]}
            )
        assert exc_info.value.chain_index == 1
        message = exc_info.value.message
        assert "declared type [2, 0] differs from step dimensions [1, 1]" in message

    def test_declared_type_longer_than_chain(self):
        with pytest.raises(MalformedInputError) as exc_info:
            geo.parse_flag(
                {"d": 2, "steps": [[[1, 0]], [[1, 0], [0, 1]]], "type": [1, 1, 0]}
            )
        assert exc_info.value.chain_index == 2

    def test_pair_errors_name_the_flag(self):
        good = {"d": 2, "steps": [[[1, 0]], [[1, 0], [0, 1]]]}
        bad = {"d": 2, "steps": [[["x", 1]], [[1, 0], [0, 1]]]}
        with pytest.raises(MalformedInputError) as exc_info:
            geo.flag_pair_from_payload({"first": good, "second": bad})
        message = exc_info.value.message
        assert message.startswith("second flag, step 1: not a rational number")
        assert exc_info.value.chain_index == 1
        with pytest.raises(MalformedInputError) as exc_info:
            geo.flag_pair_from_payload(
                {"first": {**good, "type": [0, 2]}, "second": good}
            )
        assert exc_info.value.message.startswith("first flag, step 1: declared type")

    def test_pair_document_must_be_an_object(self):
        with pytest.raises(MalformedInputError) as exc_info:
            geo.flag_pair_from_payload([1, 2])
        assert exc_info.value.chain_index is None


class TestOrbitInvariant:
    def test_transverse_lines(self):
        first, second = geo.flag_pair_from_payload(load("transverse_lines.json"))
        assert geo.orbit_invariant(first, second).to_lists() == [[0, 1], [1, 0]]

    def test_identical_complete_flags(self):
        first, second = geo.flag_pair_from_payload(load("complete_flags_q3.json"))
        invariant = geo.orbit_invariant(first, second)
        assert invariant.to_lists() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    def test_one_step_second_flag(self, rng):
        first = geo.random_flag(FlagType.of(2, 1), rng)
        second = geo.Flag.from_spaces([Subspace.full(3)], 3)
        assert geo.orbit_invariant(first, second).to_lists() == [[2], [1]]

    def test_sums_are_types(self, rng):
        for t1 in comb.weak_compositions(3, 2):
            for t2 in comb.weak_compositions(3, 3):
                a = geo.orbit_invariant(
                    geo.random_flag(t1, rng), geo.random_flag(t2, rng)
                )
                assert a.row_sums == t1.steps
                assert a.col_sums == t2.steps

    def test_invariance_under_group(self, rng):
        first = geo.random_flag(FlagType.of(1, 1, 1), rng)
        second = geo.random_flag(FlagType.of(2, 1), rng)
        witnesses = geo.check_invariance(first, second, 50, rng)
        assert len(witnesses) == 50
        assert all(w.passed for w in witnesses)

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_invariance_over_all_types(self, n, m, d, rng):
        firsts = [geo.random_flag(t, rng) for t in comb.weak_compositions(d, n)]
        seconds = [geo.random_flag(t, rng) for t in comb.weak_compositions(d, m)]
        counts = geo.invariance_counts(firsts, seconds, 50, rng)
        assert len(counts) == len(firsts) * len(seconds)
        assert set(counts.values()) == {50}

    def test_invariance_counts_detect_a_changed_invariant(self, rng):
        first = geo.coordinate_flag((1, 2), 2)
        second = geo.coordinate_flag((2, 1), 2)
        # singular: both lines land on span(1, 1)
        singular = rational_matrix([[1, 1], [1, 1]])
        with patch(
            "duality.services.flag_geometry.random_invertible", return_value=singular
        ):
            counts = geo.invariance_counts([first], [second], 3, rng)
        assert counts == {(0, 0): 0}

    def test_invariance_counts_reject_mixed_ambients(self, rng):
        with pytest.raises(AmbientMismatchError):
            geo.invariance_counts(
                [geo.coordinate_flag((1, 2), 2)], [geo.coordinate_flag((1,), 1)], 1, rng
            )
        assert geo.invariance_counts([], [geo.coordinate_flag((1,), 1)], 5, rng) == {}

    def test_act_keeps_zero_and_full_steps(self, rng):
        flag = geo.random_flag(FlagType.of(0, 2, 1), rng)
        moved = flag.act(random_invertible(3, rng))
        assert moved.step(1).dim == 0
        assert moved.step(3) == Subspace.full(3)
        assert moved.flag_type == flag.flag_type

    @pytest.mark.parametrize("n,m,d", [(2, 2, 2), (2, 3, 3), (3, 2, 2)])
    def test_every_label_is_realized(self, n, m, d):
        count, matrices = geo.count_orbits(n, m, d)
        assert count == len(matrices)
        for a in matrices:
            assert geo.orbit_invariant(*geo.realize_orbit(a)) == a

    def test_coordinate_flags_give_pair_invariant(self):
        u, v = (1, 2, 2, 1), (3, 1, 1, 2)
        a = geo.orbit_invariant(geo.coordinate_flag(u, 2), geo.coordinate_flag(v, 3))
        assert a == pair_invariant(u, v, 2, 3)

    def test_realize_empty_matrix(self):
        with pytest.raises(ShapeMismatchError):
            geo.realize_orbit(CompositionMatrix.zeros(2, 2))


class TestDimensionCalculus:
    """Orbit, flag variety and Springer fiber dimensions."""

    def test_flag_variety_dim(self):
        assert geo.flag_variety_dim(FlagType.of(1, 1, 1)) == 3
        assert geo.flag_variety_dim(FlagType.of(2, 1)) == 2
        assert geo.flag_variety_dim(FlagType.of(3)) == 0

    def test_jordan_types(self):
        # (d) is the zero matrix, (1^d) is regular
        assert geo.nilpotent_orbit_dim(Partition.of(3)) == 0
        assert geo.nilpotent_orbit_dim(Partition.of(1, 1, 1)) == 6
        assert geo.centralizer_dim(Partition.of(3)) == 9
        assert geo.centralizer_dim(Partition.of(1, 1, 1)) == 3

    @pytest.mark.parametrize("d", range(1, 6))
    def test_orbit_dim_matches_centralizer(self, d):
        for lam in comb.enumerate_partitions(d):
            assert geo.nilpotent_orbit_dim(lam) == d * d - geo.centralizer_dim(lam)

    def test_spaltenstein_values(self):
        assert geo.spaltenstein_dim(Partition.of(2), FlagType.of(1, 1)) == 1
        assert geo.spaltenstein_dim(Partition.of(1, 1), FlagType.of(1, 1)) == 0
        assert geo.spaltenstein_dim(Partition.of(1, 1), FlagType.of(2, 0)) is None
        assert geo.spaltenstein_dim(Partition.of(2, 1), FlagType.of(1, 1, 1)) == 1

    def test_spaltenstein_size_mismatch(self):
        with pytest.raises(ShapeMismatchError):
            geo.spaltenstein_dim(Partition.of(2), FlagType.of(1, 1, 1))

    def test_closure_order(self):
        assert geo.closure_order(Partition.of(3), Partition.of(1, 1, 1))
        assert not geo.closure_order(Partition.of(1, 1, 1), Partition.of(3))
        assert geo.closure_order(Partition.of(2, 1), Partition.of(2, 1))

    def test_closure_order_increases_orbit_dimension(self):
        parts = comb.enumerate_partitions(5)
        for lam in parts:
            for mu in parts:
                if lam != mu and geo.closure_order(lam, mu):
                    assert geo.nilpotent_orbit_dim(lam) < geo.nilpotent_orbit_dim(mu)

    @pytest.mark.parametrize(
        "n,m,d", [(2, 2, 2), (2, 3, 3), (3, 3, 4), (3, 3, 5), (1, 3, 3)]
    )
    def test_dimension_identity(self, n, m, d):
        report = geo.dimension_identity_check(n, m, d)
        assert report.check == "dimensions"
        assert report.witnesses
        assert report.passed


class TestStableFlags:
    @pytest.mark.parametrize("d,n", [(3, 3), (4, 2), (4, 3)])
    def test_existence_matches_kostka(self, d, n, rng):
        for lam in comb.enumerate_partitions(d):
            for t in comb.weak_compositions(d, n):
                found = geo.find_stable_flag(lam, t)
                assert (found is not None) == (comb.kostka(lam, t.steps) > 0)
                if found is not None:
                    assert found.flag_type == t
                    assert geo.is_stable(geo.jordan_nilpotent(lam), found)

    def test_conjugated_flag_is_stable(self, rng):
        for lam in comb.enumerate_partitions(4):
            result = geo.conjugated_stable_flag(lam, FlagType.of(2, 1, 1), rng)
            if result is not None:
                x, flag = result
                assert geo.is_stable(x, flag)

    def test_regular_nilpotent_has_no_two_dimensional_first_step(self):
        assert geo.find_stable_flag(Partition.of(1, 1), FlagType.of(2, 0)) is None


class TestCensus:
    @pytest.mark.parametrize(
        "n,m,d,rows", [(2, 2, 1, 4), (2, 2, 2, 10), (1, 1, 3, 1), (2, 3, 2, 21)]
    )
    def test_component_counts(self, n, m, d, rows):
        table = geo.component_census(n, m, d, min(n, m))
        assert table.total == rows
        assert len(table.components) == rows
        assert table.consistent

    def test_component_dimension(self):
        table = geo.component_census(2, 2, 2, 2)
        by_matrix = {json.dumps(c.matrix): c.dimension for c in table.components}
        assert by_matrix[json.dumps([[1, 0], [0, 1]])] == 2
        assert by_matrix[json.dumps([[2, 0], [0, 0]])] == 0

    def test_truncated_census(self):
        table = geo.component_census(2, 2, 2, 1)
        assert table.components == []
        assert len(table.strata) == 9
        assert table.total == table.expected == 9

    def test_csv_rows(self):
        rows = geo.component_census(2, 2, 1, 2).to_csv_rows()
        assert rows[0] == ["matrix", "row_weight", "col_weight", "dimension"]
        assert len(rows) == 6
        assert rows[-1] == ["total", "4", "expected", "4"]

    def test_census_needs_positive_ranks(self):
        with pytest.raises(ShapeMismatchError):
            geo.component_census(0, 2, 1, 1)
