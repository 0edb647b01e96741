"""
counterexample: dossier on the literal game -> Chebyshev system.
"""

import argparse
import json
import logging
from fractions import Fraction
from typing import Any

from src.cli.commands.common import EXIT_FAILURE, EXIT_OK, UsageError, read_input, write_output
from src.cli.serialization import parse_problem
from src.core.models import MatrixGame
from src.oracles.suites import literal_counterexample

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("counterexample", help="Show where the literal game reduction fails")
    parser.add_argument("name", choices=["eq5", "literal"], help="Dossier to build (literal is an alias)")
    parser.add_argument("-i", "--input", default=None, help="Game document (default: rock-paper-scissors)")
    parser.add_argument("-o", "--output", default=None, help="Output document (default: stdout)")
    parser.add_argument("--seed", type=int, default=0, help="Seed of the sampled sub-claim points")
    parser.add_argument("--samples", type=int, default=20, help="Sample points per sub-claim")
    parser.set_defaults(handler=run)


def _exact(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (tuple, list)):
        return [_exact(v) for v in value]
    return value


def run(args: argparse.Namespace) -> int:
    game = None
    if args.input is not None:
        game = parse_problem(read_input(args.input))
        if not isinstance(game, MatrixGame):
            raise UsageError("counterexample expects a game document")

    dossier = literal_counterexample(game, seed=args.seed, samples=args.samples)
    document = {key: _exact(value) for key, value in dossier.items()}
    write_output(args.output, (json.dumps(document, indent=2) + "\n").encode("utf-8"))

    logger.info(
        f"Literal optimum {dossier['literal_value_simplex']} vs c = {dossier['shift_c']}; "
        f"corrected optimum {dossier['corrected_value']}"
    )
    holds = (
        dossier["literal_below_shift"]
        and not dossier["argmin_is_strategy"]
        and dossier["negative_entry_exceeds_shift"]
        and dossier["sum_above_one_exceeds_shift"]
        and dossier["corrected_value"] == 1
    )
    return EXIT_OK if holds else EXIT_FAILURE
