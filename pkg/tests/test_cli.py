"""
Tests for the command-line interface.

Tests cover:
- convert between forms with embedded certificates
- solve by each route, including pullback through a certificate
- verify, bench and counterexample reports
- exit codes for usage and input errors
"""

import json
from fractions import Fraction
from pathlib import Path
from unittest.mock import patch

import pytest

from src.cli.commands.bench import parse_range, size_table
from src.cli.main import main

FIXTURES = Path(__file__).parent / "fixtures"


def _fixture(name: str) -> str:
    return str(FIXTURES / name)


def _read(path: Path) -> dict:
    return json.loads(path.read_text())


class TestConvert:
    """Test the convert command."""

    def test_l1_to_cheb_sizes(self, tmp_path):
        """Test m=3, n=2 becomes 30 functions in 14 variables."""
        out = tmp_path / "cheb.json"
        code = main(["convert", "--to", "cheb", "-i", _fixture("three_by_two_l1.json"), "-o", str(out)])
        assert code == 0
        doc = _read(out)
        assert doc["form"] == "cheb"
        assert len(doc["functions"]) == 30
        assert all(len(f["coefficients"]) == 14 for f in doc["functions"])
        assert doc["certificate"]["kind"] == "l1_to_cheb_linear"

    def test_direct_method(self, tmp_path):
        """Test the direct route emits 2^(m-1) functions and no certificate."""
        out = tmp_path / "direct.json"
        code = main([
            "convert", "--to", "cheb", "--method", "direct",
            "-i", _fixture("three_by_two_l1.json"), "-o", str(out),
        ])
        assert code == 0
        doc = _read(out)
        assert len(doc["functions"]) == 4
        assert "certificate" not in doc

    def test_standard_to_game(self, tmp_path):
        """Test the textbook LP becomes a game of size m + n + 1."""
        out = tmp_path / "game.json"
        assert main(["convert", "--to", "game", "-i", _fixture("textbook_standard.json"), "-o", str(out)]) == 0
        assert len(_read(out)["M"]) == 5

    def test_unsupported_pair(self, tmp_path):
        """Test a pair without a reduction is a usage error."""
        code = main(["convert", "--to", "game", "-i", _fixture("three_by_two_l1.json"), "-o", str(tmp_path / "x")])
        assert code == 2

    def test_wrong_input_form(self, tmp_path):
        """Test --from must match the document."""
        code = main([
            "convert", "--from", "lp", "--to", "cheb",
            "-i", _fixture("rps_game.json"), "-o", str(tmp_path / "x"),
        ])
        assert code == 2

    def test_cap_exceeded(self, tmp_path):
        """Test the direct cap surfaces as a usage error."""
        code = main([
            "convert", "--to", "cheb", "--method", "direct", "--cap", "2",
            "-i", _fixture("three_by_two_l1.json"), "-o", str(tmp_path / "x"),
        ])
        assert code == 2


class TestSolve:
    """Test the solve command."""

    def test_game(self, tmp_path):
        """Test RPS solves to the uniform strategy."""
        out = tmp_path / "strategy.json"
        assert main(["solve", "-i", _fixture("rps_game.json"), "-o", str(out)]) == 0
        assert _read(out) == {"status": "optimal", "strategy": ["1/3", "1/3", "1/3"]}

    def test_standard(self, tmp_path):
        """Test the textbook LP."""
        out = tmp_path / "solution.json"
        assert main(["solve", "-i", _fixture("textbook_standard.json"), "-o", str(out)]) == 0
        assert _read(out) == {"status": "optimal", "point": ["2", "1"], "value": "3"}

    @pytest.mark.parametrize("method", ["simplex", "game", "cheb"])
    def test_lp_routes(self, tmp_path, method):
        """Test every LP route solves the unit box to 1."""
        out = tmp_path / "solution.json"
        code = main(["solve", "--method", method, "-i", _fixture("unit_box_lp.json"), "-o", str(out)])
        assert code == 0
        assert _read(out)["value"] == "1"

    @pytest.mark.parametrize("method", ["epigraph", "direct", "linear"])
    def test_l1_routes(self, tmp_path, method):
        """Test every l1 route reaches the same optimum."""
        out = tmp_path / "solution.json"
        code = main(["solve", "--method", method, "-i", _fixture("three_by_two_l1.json"), "-o", str(out)])
        assert code == 0
        assert _read(out)["value"] == "1/2"

    def test_method_not_applicable(self, tmp_path):
        """Test an l1 method on an LP document is a usage error."""
        code = main(["solve", "--method", "direct", "-i", _fixture("unit_box_lp.json"), "-o", str(tmp_path / "x")])
        assert code == 2

    def test_pullback_through_chain(self, tmp_path):
        """Test solving the Chebyshev end of lp -> cheb recovers x1 = 1."""
        cheb = tmp_path / "cheb.json"
        out = tmp_path / "solution.json"
        assert main(["convert", "--to", "cheb", "-i", _fixture("unit_box_lp.json"), "-o", str(cheb)]) == 0
        assert main(["solve", "--pullback", "-i", str(cheb), "-o", str(out)]) == 0
        assert _read(out) == {"status": "optimal", "point": ["1"], "value": "1"}

    def test_pullback_single_stage(self, tmp_path):
        """Test a game with its certificate pulls back to the LP optimum."""
        game = tmp_path / "game.json"
        out = tmp_path / "solution.json"
        assert main(["convert", "--to", "game", "-i", _fixture("textbook_standard.json"), "-o", str(game)]) == 0
        assert main(["solve", "--pullback", "-i", str(game), "-o", str(out)]) == 0
        assert _read(out)["value"] == "3"

    def test_literal_pullback_fails(self, tmp_path):
        """Test the literal chain exits 1 when its optimum is not a strategy."""
        cheb = tmp_path / "cheb.json"
        code = main([
            "convert", "--to", "cheb", "--variant", "literal",
            "-i", _fixture("unit_box_lp.json"), "-o", str(cheb),
        ])
        assert code == 0
        assert main(["solve", "--pullback", "-i", str(cheb), "-o", str(tmp_path / "x")]) == 1

    def test_pullback_needs_certificate(self, tmp_path):
        """Test --pullback on a plain document is a usage error."""
        assert main(["solve", "--pullback", "-i", _fixture("rps_game.json"), "-o", str(tmp_path / "x")]) == 2


class TestInputErrors:
    """Test exit codes for bad input."""

    def test_missing_file(self, tmp_path):
        """Test an unreadable input path."""
        assert main(["solve", "-i", str(tmp_path / "missing.json")]) == 2

    def test_non_skew_game(self, tmp_path):
        """Test an invariant violation exits 2."""
        path = tmp_path / "bad.json"
        path.write_text('{"form": "game", "M": [["0", "1"], ["1", "0"]]}')
        assert main(["solve", "-i", str(path), "-o", str(tmp_path / "x")]) == 2

    def test_malformed_json(self, tmp_path):
        """Test a parse error exits 2."""
        path = tmp_path / "bad.json"
        path.write_text('{"form": ')
        assert main(["solve", "-i", str(path), "-o", str(tmp_path / "x")]) == 2

    def test_certificate_without_payoff(self, tmp_path):
        """Test --pullback through a game certificate with no payoff exits 2."""
        game = tmp_path / "game.json"
        assert main(["convert", "--to", "game", "-i", _fixture("textbook_standard.json"), "-o", str(game)]) == 0
        doc = _read(game)
        del doc["certificate"]["payoff"]
        game.write_text(json.dumps(doc))
        assert main(["solve", "--pullback", "-i", str(game), "-o", str(tmp_path / "x")]) == 2

    def test_chain_certificate_without_stages(self, tmp_path):
        """Test --pullback through a chain kind with no stages exits 2."""
        cheb = tmp_path / "cheb.json"
        assert main(["convert", "--to", "cheb", "-i", _fixture("unit_box_lp.json"), "-o", str(cheb)]) == 0
        doc = _read(cheb)
        del doc["certificate"]["stages"]
        cheb.write_text(json.dumps(doc))
        assert main(["solve", "--pullback", "-i", str(cheb), "-o", str(tmp_path / "x")]) == 2

    def test_unknown_command(self):
        """Test argparse rejects an unknown command with code 2."""
        with pytest.raises(SystemExit) as exc_info:
            main(["optimize"])
        assert exc_info.value.code == 2


class TestReports:
    """Test verify, bench and counterexample."""

    def test_verify_sizes(self, capsys):
        """Test the size-law suite passes."""
        assert main(["verify", "--suite", "sizes", "--trials", "2", "--max-size", "3"]) == 0
        out = capsys.readouterr().out
        assert "sizes" in out
        assert "FAIL" not in out

    def test_bench_table(self, capsys):
        """Test the default bench prints a row per m."""
        assert main(["bench", "--m", "2..4"]) == 0
        out = capsys.readouterr().out
        assert "linear_functions" in out

    def test_size_table_m10(self):
        """Test m=10, n=1: 68 linear functions against 512 sign patterns."""
        table = size_table(parse_range("2..10"), parse_range("1"))
        row = table[table["m"] == 10].iloc[0]
        assert row["linear_functions"] == 68
        assert row["linear_variables"] == 33
        assert row["direct_functions"] == 512

    def test_size_table_above_cap(self):
        """Test direct sizes above the cap are counted, not built."""
        table = size_table([3], [1], cap=2)
        assert not table.iloc[0]["direct_built"]
        assert table.iloc[0]["direct_functions"] == 4

    def test_parse_range(self):
        """Test the accepted range spellings."""
        assert parse_range("2..4") == [2, 3, 4]
        assert parse_range("1,3") == [1, 3]
        assert parse_range("5") == [5]

    def test_counterexample(self, tmp_path):
        """Test the literal dossier on rock-paper-scissors."""
        out = tmp_path / "dossier.json"
        assert main(["counterexample", "eq5", "--samples", "5", "-o", str(out)]) == 0
        dossier = _read(out)
        assert dossier["shift_c"] == "1"
        assert dossier["literal_value_simplex"] == "3/4"
        assert dossier["literal_value_oracle"] == "3/4"
        assert dossier["literal_argmin"] == ["1/4", "1/4", "1/4"]
        assert dossier["literal_argmin_sum"] == "3/4"
        assert dossier["literal_below_shift"] is True
        assert dossier["argmin_is_strategy"] is False
        assert dossier["corrected_value"] == "1"

    def test_counterexample_literal_alias(self, tmp_path):
        """Test the literal name builds the same dossier as eq5."""
        first = tmp_path / "eq5.json"
        second = tmp_path / "literal.json"
        assert main(["counterexample", "eq5", "--samples", "3", "-o", str(first)]) == 0
        assert main(["counterexample", "literal", "--samples", "3", "-o", str(second)]) == 0
        assert _read(first) == _read(second)

    @pytest.mark.parametrize(
        "key,value",
        [
            ("literal_below_shift", False),
            ("argmin_is_strategy", True),
            ("negative_entry_exceeds_shift", False),
            ("corrected_value", Fraction(3, 4)),
        ],
    )
    def test_counterexample_fails_without_discrepancy(self, tmp_path, key, value):
        """Test a dossier that does not show the discrepancy exits 1."""
        dossier = {
            "game": [[Fraction(0)]],
            "shift_c": Fraction(1),
            "literal_value_simplex": Fraction(3, 4),
            "literal_value_oracle": Fraction(3, 4),
            "literal_argmin": [Fraction(1, 4)] * 3,
            "literal_argmin_sum": Fraction(3, 4),
            "literal_below_shift": True,
            "argmin_is_strategy": False,
            "corrected_value": Fraction(1),
            "negative_entry_exceeds_shift": True,
            "sum_above_one_exceeds_shift": True,
        }
        dossier[key] = value
        with patch("src.cli.commands.counterexample.literal_counterexample", return_value=dossier):
            code = main(["counterexample", "eq5", "-o", str(tmp_path / "dossier.json")])
        assert code == 1


class TestConvertSummary:
    """Test the size summary convert writes to stderr."""

    def test_summary_on_stderr(self, tmp_path, capsys):
        """Test the l1 -> cheb sizes are reported regardless of the log level."""
        out = tmp_path / "cheb.json"
        code = main([
            "--log-level", "WARNING", "convert", "--to", "cheb",
            "-i", _fixture("three_by_two_l1.json"), "-o", str(out),
        ])
        assert code == 0
        err = capsys.readouterr().err
        assert "30 functions, 14 variables" in err
