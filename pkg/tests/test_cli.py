"""Tests for the command-line surface and its exit codes."""

import json
from pathlib import Path
from unittest.mock import patch

import pytest

from duality.core.exceptions import (
    EXIT_BUDGET,
    EXIT_FAILED,
    EXIT_INTERNAL,
    EXIT_MALFORMED,
    EXIT_OK,
)
from duality.main import main
from duality.models.response import VerificationReport, Witness

FIXTURES = Path(__file__).parent / "fixtures"


class TestVerifyCommand:
    def test_single_suite(self, capsys):
        assert main(["verify", "schur", "--n", "2", "--d", "2"]) == EXIT_OK
        captured = capsys.readouterr()
        payload = json.loads(captured.out)
        assert payload["check"] == "schur"
        assert payload["status"] == "pass"
        assert payload["parameters"]["n"] == 2
        assert "wall_time" not in payload
        assert "schur: PASS" in captured.err

    def test_timings_flag(self, capsys):
        assert main(["verify", "howe", "--timings"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["wall_time"] >= 0

    def test_failing_report_exits_one(self, capsys):
        report = VerificationReport(
            check="howe", witnesses=[Witness(claim="broken", left=1, right=2)]
        )
        with patch("duality.commands.verify.DualityVerifier.run", return_value=report):
            assert main(["verify", "howe"]) == EXIT_FAILED
        assert "FAILED broken: 1 != 2" in capsys.readouterr().err

    def test_budget_exits_two(self, capsys):
        argv = ["verify", "schur", "--n", "3", "--d", "3", "--budget", "10"]
        assert main(argv) == EXIT_BUDGET
        assert "exceeds budget 10" in capsys.readouterr().err

    def test_unknown_suite_exits_three(self, capsys):
        assert main(["verify", "hecke"]) == EXIT_MALFORMED
        assert "invalid choice" in capsys.readouterr().err

    def test_non_integer_parameter_exits_three(self):
        assert main(["verify", "howe", "--n", "two"]) == EXIT_MALFORMED

    @pytest.mark.parametrize("suite", ["orbits", "dimensions"])
    def test_zero_steps_exits_three(self, suite, capsys):
        assert main(["verify", suite, "--n", "0"]) == EXIT_MALFORMED
        assert "error: parameter n must be at least 1, got 0" in capsys.readouterr().err

    def test_unexpected_error_exits_four(self, capsys):
        with patch(
            "duality.commands.verify.DualityVerifier.run",
            side_effect=RuntimeError("boom"),
        ):
            assert main(["verify", "howe"]) == EXIT_INTERNAL
        assert "error: boom" in capsys.readouterr().err

    def test_all_suites(self, capsys):
        assert main(["verify", "all", "--samples", "3", "--workers", "1"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["status"] == "pass"
        assert len(payload["reports"]) == 8


class TestCensusCommand:
    def test_json(self, capsys):
        assert main(["census", "--n", "2", "--m", "2", "--d", "2"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["total"] == payload["expected"] == 10
        assert payload["k"] == 2
        assert len(payload["components"]) == 10

    def test_truncated(self, capsys):
        argv = ["census", "--n", "2", "--m", "2", "--d", "2", "--k", "1"]
        assert main(argv) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["components"] == []
        assert len(payload["strata"]) == 9

    def test_csv(self, capsys):
        assert main(["census", "--n", "2", "--m", "2", "--d", "1", "--csv"]) == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "matrix,row_weight,col_weight,dimension"
        assert lines[-1] == "total,4,expected,4"
        assert len(lines) == 6

    def test_json_and_csv_are_exclusive(self):
        argv = ["census", "--n", "2", "--m", "2", "--d", "1", "--csv", "--json"]
        assert main(argv) == EXIT_MALFORMED

    def test_missing_sizes(self, capsys):
        assert main(["census", "--n", "2"]) == EXIT_MALFORMED
        assert "census needs" in capsys.readouterr().err

    def test_budget(self):
        argv = ["census", "--n", "3", "--m", "3", "--d", "4", "--budget", "100"]
        assert main(argv) == EXIT_BUDGET


class TestOrbitInvariantCommand:
    def test_transverse_lines(self, capsys):
        path = str(FIXTURES / "transverse_lines.json")
        assert main(["orbit-invariant", path]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["matrix"] == [[0, 1], [1, 0]]
        assert payload["row_type"] == [1, 1]
        assert payload["invariant_under_group"] is None

    def test_check_invariance(self, capsys):
        path = str(FIXTURES / "complete_flags_q3.json")
        argv = ["orbit-invariant", path, "--check-invariance", "5", "--seed", "2"]
        assert main(argv) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["matrix"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert payload["invariance_checks"] == 5
        assert payload["invariant_under_group"] is True

    def test_non_nested_chain(self, capsys):
        path = str(FIXTURES / "non_nested.json")
        assert main(["orbit-invariant", path]) == EXIT_MALFORMED
        err = capsys.readouterr().err
        assert "error: second flag, step 2: F_1 is not contained in F_2" in err

    def test_wrong_length_vector_names_step(self, capsys):
        document = json.dumps(
            {
                "first": {"d": 2, "steps": [[[1, 0, 0]], [[1, 0], [0, 1]]]},
                "second": {"d": 2, "steps": [[[1, 0], [0, 1]]]},
            }
        )
        assert main(["orbit-invariant", document]) == EXIT_MALFORMED
        err = capsys.readouterr().err
        assert "error: first flag, step 1: vector of length 3 in Q^2" in err

    def test_declared_type_mismatch_names_step(self, capsys):
        second = {"d": 2, "steps": [[[1, 0]], [[1, 0], [0, 1]]], "type": [2, 0]}
        first = {"d": 2, "steps": [[[1, 0], [0, 1]]]}
        document = json.dumps({"first": first, "second": second})
        assert main(["orbit-invariant", document]) == EXIT_MALFORMED
        err = capsys.readouterr().err
        assert "error: second flag, step 1: declared type [2, 0]" in err

    def test_inline_document(self, capsys):
        line = {"d": 1, "steps": [[[1]]]}
        document = json.dumps({"first": line, "second": line})
        assert main(["orbit-invariant", document]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["matrix"] == [[1]]

    def test_unreadable_document(self):
        assert main(["orbit-invariant", "{not json"]) == EXIT_MALFORMED


class TestRSKCommand:
    def test_permutation(self, capsys):
        assert main(["rsk", "--permutation", "3,1,2"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["shape"] == [2, 1]
        assert payload["matrix"] == [[0, 0, 1], [1, 0, 0], [0, 1, 0]]

    def test_matrix(self, capsys):
        assert main(["rsk", "--matrix", "[[1, 0], [0, 1]]"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["P"] == [[1, 2]]
        assert payload["Q"] == [[1, 2]]

    def test_inverse(self, capsys):
        assert main(["rsk", "--inverse", '{"P": [[1, 2]], "Q": [[1, 1]]}']) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["matrix"] == [[1, 1]]

    def test_exactly_one_input(self):
        assert main(["rsk"]) == EXIT_MALFORMED
        argv = ["rsk", "--permutation", "21", "--matrix", "[[1]]"]
        assert main(argv) == EXIT_MALFORMED

    def test_bad_permutation(self):
        assert main(["rsk", "--permutation", "1,1"]) == EXIT_MALFORMED


class TestGlobalOptions:
    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["--version"])
        assert exc_info.value.code == 0
        assert "duality 0.1.0" in capsys.readouterr().out

    def test_missing_command(self):
        assert main([]) == EXIT_MALFORMED
