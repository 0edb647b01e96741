"""
Tests for JSON parsing and canonical emission.

Tests cover:
- Parsing each problem form from fixture documents
- Exact rational strings and lowest-terms output
- Position-bearing parse errors and invariant violations
- Round trips of problems and embedded chain certificates
"""

import json
from pathlib import Path

import pytest
from fractions import Fraction

from src.cli.serialization import (
    ParseError,
    emit_problem,
    emit_solution,
    emit_strategy,
    parse_document,
    parse_problem,
)
from src.core.models import (
    ChebyshevProblem,
    InvariantViolation,
    L1Problem,
    LinearProgram,
    MatrixGame,
    Solution,
    SolutionStatus,
    StandardLP,
    Strategy,
)
from src.reductions import l1_to_cheb_linear, lp_to_cheb, standard_to_game

FIXTURES = Path(__file__).parent / "fixtures"


def _fixture(name: str) -> bytes:
    return (FIXTURES / name).read_bytes()


class TestParsing:
    """Test parsing of each problem form."""

    def test_game(self):
        """Test the RPS document."""
        game = parse_problem(_fixture("rps_game.json"))
        assert game == MatrixGame(((0, 1, -1), (-1, 0, 1), (1, -1, 0)))

    @pytest.mark.parametrize(
        "name,expected_type",
        [
            ("rps_game.json", MatrixGame),
            ("unit_box_lp.json", LinearProgram),
            ("textbook_standard.json", StandardLP),
            ("midrange_cheb.json", ChebyshevProblem),
            ("three_by_two_l1.json", L1Problem),
        ],
    )
    def test_forms(self, name, expected_type):
        """Test each form parses to its domain type without a certificate."""
        problem, cert = parse_document(_fixture(name))
        assert isinstance(problem, expected_type)
        assert cert is None

    def test_fraction_string(self):
        """Test "1/3" parses exactly."""
        doc = {"form": "cheb", "functions": [{"constant": "1/3", "coefficients": ["1"]}]}
        problem = parse_problem(json.dumps(doc))
        assert problem.functions[0].constant == Fraction(1, 3)

    def test_integers_accepted(self):
        """Test bare JSON integers are exact too."""
        problem = parse_problem('{"form": "game", "M": [[0, 2], [-2, 0]]}')
        assert problem.max_entry == 2


class TestParseErrors:
    """Test error reporting."""

    def test_non_skew_matrix(self):
        """Test M[0][1] = M[1][0] = 1 is an invariant violation naming (0, 1)."""
        with pytest.raises(InvariantViolation) as exc_info:
            parse_problem('{"form": "game", "M": [["0", "1"], ["1", "0"]]}')
        assert (0, 1) in exc_info.value.indices

    def test_malformed_json_position(self):
        """Test a truncated document reports a character position."""
        with pytest.raises(ParseError) as exc_info:
            parse_problem('{"form": "game", "M": [')
        assert isinstance(exc_info.value.position, int)

    def test_float_rejected(self):
        """Test floats are rejected with a path into the document."""
        with pytest.raises(ParseError) as exc_info:
            parse_problem('{"form": "game", "M": [[0, 0.5], [-0.5, 0]]}')
        assert "M" in str(exc_info.value.position)

    def test_decimal_string_rejected(self):
        """Test "0.5" is not a rational string."""
        with pytest.raises(ParseError):
            parse_problem('{"form": "cheb", "functions": [{"constant": "0.5", "coefficients": ["1"]}]}')

    def test_unknown_form(self):
        """Test an unknown form is a schema error."""
        with pytest.raises(ParseError):
            parse_problem('{"form": "qp", "M": []}')

    def test_unknown_key(self):
        """Test unknown keys are rejected."""
        with pytest.raises(ParseError, match="Extra inputs"):
            parse_problem('{"form": "game", "M": [["0"]], "comment": "x"}')

    def test_invalid_utf8(self):
        """Test undecodable bytes are a parse error."""
        with pytest.raises(ParseError):
            parse_problem(b'{"form": "game", "M": [["\xff"]]}')


class TestEmission:
    """Test canonical output."""

    def test_lowest_terms(self):
        """Test "2/4" is written as "1/2"."""
        problem = parse_problem('{"form": "game", "M": [["0", "2/4"], ["-1/2", "0"]]}')
        doc = json.loads(emit_problem(problem))
        assert doc["M"] == [["0", "1/2"], ["-1/2", "0"]]

    def test_form_key_first(self):
        """Test documents start with their form."""
        doc = json.loads(emit_problem(parse_problem(_fixture("unit_box_lp.json"))))
        assert list(doc)[0] == "form"

    def test_trailing_newline(self):
        """Test output ends in a newline."""
        assert emit_problem(parse_problem(_fixture("rps_game.json"))).endswith(b"\n")

    @pytest.mark.parametrize("name", sorted(p.name for p in FIXTURES.glob("*.json")))
    def test_fixture_round_trip(self, name):
        """Test parse(emit(p)) == p and emission is stable."""
        problem = parse_problem(_fixture(name))
        emitted = emit_problem(problem)
        assert parse_problem(emitted) == problem
        assert emit_problem(parse_problem(emitted)) == emitted

    def test_solution(self):
        """Test optimal solutions carry point and value as strings."""
        doc = json.loads(emit_solution(Solution.optimal((Fraction(1, 3), 2), Fraction(5, 2))))
        assert doc == {"status": "optimal", "point": ["1/3", "2"], "value": "5/2"}

    def test_status_only(self):
        """Test non-optimal solutions carry only the status."""
        doc = json.loads(emit_solution(Solution.of_status(SolutionStatus.UNBOUNDED)))
        assert doc == {"status": "unbounded"}

    def test_strategy(self):
        """Test strategies are emitted as optimal probability vectors."""
        doc = json.loads(emit_strategy(Strategy.uniform(3)))
        assert doc["strategy"] == ["1/3", "1/3", "1/3"]


class TestCertificates:
    """Test certificates embedded in documents."""

    def test_chain_certificate_round_trip(self):
        """Test an LP -> Chebyshev chain survives emission with every stage."""
        problem, cert = lp_to_cheb(parse_problem(_fixture("unit_box_lp.json")))
        parsed, parsed_cert = parse_document(emit_problem(problem, cert))
        assert parsed == problem
        assert parsed_cert == cert
        assert len(parsed_cert.stages) == 3

    def test_l1_chain_certificate(self):
        """Test the l1 chain keeps its split map and payoff."""
        problem, cert = l1_to_cheb_linear(parse_problem(_fixture("three_by_two_l1.json")))
        _, parsed_cert = parse_document(emit_problem(problem, cert))
        assert parsed_cert == cert

    def test_unset_fields_omitted(self):
        """Test a game -> Chebyshev stage has no objective fields."""
        problem, cert = lp_to_cheb(parse_problem(_fixture("unit_box_lp.json")))
        doc = json.loads(emit_problem(problem, cert))
        last = doc["certificate"]["stages"][-1]
        assert last["kind"] == "game_to_cheb"
        assert "objective_constant" not in last
        assert last["variant"] == "corrected"


def _game_document() -> dict:
    game, cert = standard_to_game(parse_problem(_fixture("textbook_standard.json")))
    return json.loads(emit_problem(game, cert))


def _chain_document() -> dict:
    problem, cert = lp_to_cheb(parse_problem(_fixture("unit_box_lp.json")))
    return json.loads(emit_problem(problem, cert))


class TestCertificateLayout:
    """Test embedded certificates are checked against their kind when parsed."""

    def test_game_certificate_without_payoff(self):
        """Test a standard_to_game certificate must carry the payoff matrix."""
        doc = _game_document()
        del doc["certificate"]["payoff"]
        with pytest.raises(InvariantViolation, match="no payoff matrix"):
            parse_document(json.dumps(doc))

    def test_payoff_of_wrong_size(self):
        """Test the payoff matrix must match the target dimension."""
        doc = _game_document()
        doc["certificate"]["payoff"] = [["0"]]
        with pytest.raises(InvariantViolation, match="payoff matrix is not 5x5"):
            parse_document(json.dumps(doc))

    @pytest.mark.parametrize("name", ["y", "w", "t"])
    def test_game_certificate_missing_block(self, name):
        """Test each of the y, w and t blocks is required."""
        doc = _game_document()
        blocks = doc["certificate"]["var_map"]["blocks"]
        doc["certificate"]["var_map"]["blocks"] = [b for b in blocks if b["name"] != name]
        with pytest.raises(InvariantViolation, match=f"no variable block '{name}'"):
            parse_document(json.dumps(doc))

    def test_block_outside_target(self):
        """Test a block must lie within the target variables."""
        doc = _game_document()
        doc["certificate"]["var_map"]["blocks"][-1]["stop"] = 99
        with pytest.raises(InvariantViolation, match="outside 5 target variables"):
            parse_document(json.dumps(doc))

    def test_chain_without_stages(self):
        """Test a chain kind needs its stages."""
        doc = _chain_document()
        del doc["certificate"]["stages"]
        with pytest.raises(InvariantViolation, match="needs stages"):
            parse_document(json.dumps(doc))

    def test_chain_with_stages_out_of_order(self):
        """Test chain stages must follow the reduction order."""
        doc = _chain_document()
        doc["certificate"]["stages"].reverse()
        with pytest.raises(InvariantViolation, match="needs stages"):
            parse_document(json.dumps(doc))

    def test_standardization_without_splits(self):
        """Test an lp_to_standard stage needs one split per source variable."""
        doc = _chain_document()
        del doc["certificate"]["stages"][0]["var_map"]["splits"]
        with pytest.raises(InvariantViolation, match="one split per source variable"):
            parse_document(json.dumps(doc))

    def test_game_to_cheb_without_variant(self):
        """Test the game_to_cheb stage records its variant."""
        doc = _chain_document()
        del doc["certificate"]["stages"][-1]["variant"]
        with pytest.raises(InvariantViolation, match="no variant"):
            parse_document(json.dumps(doc))

    def test_single_stage_kind_with_stages(self):
        """Test only chain kinds may list stages."""
        doc = _chain_document()
        doc["certificate"]["stages"][0]["stages"] = [doc["certificate"]["stages"][1]]
        with pytest.raises(InvariantViolation, match="cannot have stages"):
            parse_document(json.dumps(doc))
