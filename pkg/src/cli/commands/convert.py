"""
convert: apply one reduction and write the target problem with its certificate.
"""

import argparse
import logging
import sys
from typing import Optional, Tuple

from src.cli.commands.common import EXIT_OK, UsageError, describe, form_of, read_input, write_output
from src.cli.serialization import Problem, emit_problem, parse_problem
from src.core.models import GameToChebVariant, ReductionCertificate
from src.reductions.chains import l1_to_cheb_direct, l1_to_cheb_linear, lp_to_cheb
from src.reductions.epigraph import cheb_to_lp, l1_to_lp
from src.reductions.games import game_to_cheb, standard_to_game
from src.reductions.standard import lp_to_standard

logger = logging.getLogger(__name__)

FORM_CHOICES = ["lp", "standard", "game", "cheb", "l1"]

# (from, to) pairs that have a reduction
SUPPORTED = {
    ("cheb", "lp"),
    ("l1", "lp"),
    ("lp", "standard"),
    ("standard", "game"),
    ("game", "cheb"),
    ("l1", "cheb"),
    ("lp", "cheb"),
}


def register(subparsers) -> None:
    parser = subparsers.add_parser("convert", help="Reduce a problem to another form")
    parser.add_argument("--from", dest="source", choices=FORM_CHOICES, help="Expected input form")
    parser.add_argument("--to", dest="target", choices=FORM_CHOICES, required=True, help="Target form")
    parser.add_argument(
        "--method",
        choices=["linear", "direct"],
        default="linear",
        help="l1 -> cheb reduction: linear-size chain or 2^(m-1) sign patterns",
    )
    parser.add_argument(
        "--variant",
        choices=[v.value for v in GameToChebVariant],
        default=GameToChebVariant.CORRECTED.value,
        help="game -> cheb variant",
    )
    parser.add_argument("--cap", type=int, default=None, help="Largest m for the direct reduction")
    parser.add_argument("-i", "--input", default=None, help="Input document (default: stdin)")
    parser.add_argument("-o", "--output", default=None, help="Output document (default: stdout)")
    parser.set_defaults(handler=run)


def convert(
    problem: Problem,
    target: str,
    method: str = "linear",
    variant: GameToChebVariant = GameToChebVariant.CORRECTED,
    cap: Optional[int] = None,
) -> Tuple[Problem, Optional[ReductionCertificate]]:
    """
    Dispatch to the reduction for (form of problem, target).

    Raises:
        UsageError: If no reduction connects the two forms
    """
    source = form_of(problem)
    if (source, target) not in SUPPORTED:
        raise UsageError(f"No reduction from {source} to {target}")

    if source == "cheb":
        return cheb_to_lp(problem)
    if source == "standard":
        return standard_to_game(problem)
    if source == "game":
        return game_to_cheb(problem, variant)
    if source == "l1":
        if target == "lp":
            return l1_to_lp(problem)
        if method == "direct":
            return l1_to_cheb_direct(problem, cap), None
        return l1_to_cheb_linear(problem, variant)
    if target == "standard":
        return lp_to_standard(problem)
    return lp_to_cheb(problem, variant)


def run(args: argparse.Namespace) -> int:
    problem = parse_problem(read_input(args.input))
    if args.source is not None and form_of(problem) != args.source:
        raise UsageError(f"Input is a {form_of(problem)} document, not {args.source}")

    target, cert = convert(problem, args.target, args.method, GameToChebVariant(args.variant), args.cap)
    write_output(args.output, emit_problem(target, cert))
    summary = f"Converted {describe(problem)} -> {describe(target)}"
    print(summary, file=sys.stderr)
    logger.debug(summary)
    return EXIT_OK
