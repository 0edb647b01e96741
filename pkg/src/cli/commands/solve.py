"""
solve: solve a problem exactly, or solve a reduction target and pull the result back.
"""

import argparse
import logging
from typing import Optional, Union

from src.cli.commands.common import EXIT_OK, UsageError, form_of, read_input, write_output
from src.cli.serialization import Problem, emit_solution, emit_strategy, parse_document
from src.core.models import (
    ChebyshevProblem,
    GameToChebVariant,
    L1Problem,
    LinearProgram,
    MatrixGame,
    ReductionCertificate,
    ReductionKind,
    Solution,
    StandardLP,
    Strategy,
)
from src.reductions.chains import pullback
from src.solvers.approximation import (
    solve_cheb,
    solve_cheb_chain,
    solve_l1,
    solve_l1_direct,
    solve_l1_linear,
    solve_lp_via_cheb,
    solve_lp_via_game,
)
from src.solvers.games import solve_game
from src.solvers.simplex import simplex_solve, solve_standard

logger = logging.getLogger(__name__)

Result = Union[Solution, Strategy]

# Methods accepted per input form; the first is the default
METHODS = {
    "lp": ("simplex", "game", "cheb"),
    "standard": ("simplex",),
    "game": ("simplex",),
    "cheb": ("simplex",),
    "l1": ("epigraph", "direct", "linear"),
}

# Target form each single-stage certificate expects
_TARGET_TYPES = {
    ReductionKind.CHEB_TO_LP: LinearProgram,
    ReductionKind.L1_TO_LP: LinearProgram,
    ReductionKind.LP_TO_STANDARD: StandardLP,
    ReductionKind.STANDARD_TO_GAME: MatrixGame,
    ReductionKind.GAME_TO_CHEB: ChebyshevProblem,
}


def register(subparsers) -> None:
    parser = subparsers.add_parser("solve", help="Solve a problem exactly")
    parser.add_argument(
        "--method",
        choices=sorted({m for methods in METHODS.values() for m in methods}),
        default=None,
        help="Solution route (lp: simplex|game|cheb, l1: epigraph|direct|linear)",
    )
    parser.add_argument(
        "--variant",
        choices=[v.value for v in GameToChebVariant],
        default=GameToChebVariant.CORRECTED.value,
        help="game -> cheb variant used by chained routes",
    )
    parser.add_argument("--cap", type=int, default=None, help="Largest m for the direct l1 route")
    parser.add_argument(
        "--pullback",
        action="store_true",
        help="Solve the document as a reduction target and map the result through its certificate",
    )
    parser.add_argument("-i", "--input", default=None, help="Input document (default: stdin)")
    parser.add_argument("-o", "--output", default=None, help="Output document (default: stdout)")
    parser.set_defaults(handler=run)


def solve_problem(
    problem: Problem,
    method: Optional[str] = None,
    variant: GameToChebVariant = GameToChebVariant.CORRECTED,
    cap: Optional[int] = None,
) -> Result:
    """
    Solve a problem of any form by the requested route.

    Raises:
        UsageError: If the method does not apply to the problem's form
    """
    form = form_of(problem)
    method = method or METHODS[form][0]
    if method not in METHODS[form]:
        raise UsageError(f"Method {method} does not apply to {form} problems")

    if isinstance(problem, LinearProgram):
        if method == "game":
            return solve_lp_via_game(problem)
        if method == "cheb":
            return solve_lp_via_cheb(problem, variant)
        return simplex_solve(problem)
    if isinstance(problem, StandardLP):
        return solve_standard(problem)
    if isinstance(problem, MatrixGame):
        strategy, t_max = solve_game(problem)
        logger.info(f"Last coordinate of the returned strategy: {t_max}")
        return strategy
    if isinstance(problem, ChebyshevProblem):
        return solve_cheb(problem)
    if isinstance(problem, L1Problem):
        if method == "direct":
            return solve_l1_direct(problem, cap)
        if method == "linear":
            return solve_l1_linear(problem, variant)
        return solve_l1(problem)
    raise UsageError(f"Cannot solve {type(problem).__name__}")


def solve_and_pull_back(problem: Problem, cert: ReductionCertificate) -> Result:
    """
    Solve a reduction target and map its solution back to the source problem.

    Raises:
        UsageError: If the problem is not the certificate's target form
        ReductionError: If the pullback rejects the solution
    """
    if cert.is_chain:
        if not isinstance(problem, ChebyshevProblem):
            raise UsageError(f"{cert.kind.value} certificate expects a cheb document")
        return solve_cheb_chain(problem, cert)

    expected = _TARGET_TYPES[cert.kind]
    if not isinstance(problem, expected):
        raise UsageError(f"{cert.kind.value} certificate expects a {expected.__name__}")
    if isinstance(problem, MatrixGame):
        strategy, _ = solve_game(problem)
        return pullback(cert, strategy)
    return pullback(cert, solve_problem(problem))


def _emit(result: Result) -> bytes:
    if isinstance(result, Strategy):
        return emit_strategy(result)
    return emit_solution(result)


def run(args: argparse.Namespace) -> int:
    problem, cert = parse_document(read_input(args.input))
    variant = GameToChebVariant(args.variant)

    if args.pullback:
        if cert is None:
            raise UsageError("--pullback needs a document with an embedded certificate")
        result = solve_and_pull_back(problem, cert)
    else:
        result = solve_problem(problem, args.method, variant, args.cap)

    write_output(args.output, _emit(result))
    return EXIT_OK
