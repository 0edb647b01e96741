"""CLI module - JSON document format and the lp-cheb command line."""

from src.cli.serialization import (
    ParseError,
    emit_problem,
    emit_solution,
    emit_strategy,
    parse_document,
    parse_problem,
)

__all__ = [
    # Serialization
    "parse_problem",
    "parse_document",
    "emit_problem",
    "emit_solution",
    "emit_strategy",
    # Errors
    "ParseError",
]
