"""
Composed reduction pipelines and their pullback.

- l1_to_cheb_linear: l1 -> LP -> standard LP -> symmetric game -> Chebyshev
  (6m+4n+4 functions in 3m+2n+1 variables)
- lp_to_cheb: LP -> standard LP -> symmetric game -> Chebyshev
- l1_to_cheb_direct: max |f_1 +- f_2 +- ... +- f_m|  (2^(m-1) functions in n variables)
"""

import itertools
import logging
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

from src.core.config import get_settings
from src.core.models import (
    ChebyshevProblem,
    DimensionError,
    GameToChebVariant,
    L1Problem,
    LinearProgram,
    ReductionCertificate,
    ReductionKind,
    Solution,
    Strategy,
)
from src.reductions.epigraph import l1_to_lp, lp_sol_to_cheb_sol, lp_sol_to_l1_sol
from src.reductions.errors import (
    CapExceededError,
    CertificateMismatchError,
    ChainPullbackError,
    ReductionError,
)
from src.reductions.games import (
    cheb_sol_to_strategy,
    game_strategy_to_lp_sol,
    game_to_cheb,
    standard_to_game,
)
from src.reductions.standard import lp_to_standard, standard_sol_pullback

logger = logging.getLogger(__name__)

Pulled = Union[Solution, Strategy]

_PULLBACKS: Dict[ReductionKind, Callable] = {
    ReductionKind.CHEB_TO_LP: lp_sol_to_cheb_sol,
    ReductionKind.L1_TO_LP: lp_sol_to_l1_sol,
    ReductionKind.LP_TO_STANDARD: standard_sol_pullback,
    ReductionKind.STANDARD_TO_GAME: game_strategy_to_lp_sol,
    ReductionKind.GAME_TO_CHEB: cheb_sol_to_strategy,
}


def compose(kind: ReductionKind, stages: Sequence[ReductionCertificate]) -> ReductionCertificate:
    """Chain certificate: source of the first stage, target of the last."""
    if not stages:
        raise CertificateMismatchError("A chain needs at least one stage")
    last = stages[-1]
    return ReductionCertificate(
        kind=kind,
        source_dims=stages[0].source_dims,
        target_dims=last.target_dims,
        shift_c=last.shift_c,
        scale_alpha=last.scale_alpha,
        variant=last.variant,
        stages=tuple(stages),
    )


def lp_to_cheb(
    p: LinearProgram,
    variant: GameToChebVariant = GameToChebVariant.CORRECTED,
) -> Tuple[ChebyshevProblem, ReductionCertificate]:
    """
    Reduce an arbitrary LP to a Chebyshev problem through its symmetric game.

    Returns:
        Tuple of (Chebyshev problem with 2N+2 functions in N = m'+n'+1 variables, chain certificate)
    """
    standard, to_standard = lp_to_standard(p)
    game, to_game = standard_to_game(standard)
    problem, to_cheb = game_to_cheb(game, variant)
    return problem, compose(ReductionKind.LP_TO_CHEB, [to_standard, to_game, to_cheb])


def l1_to_cheb_linear(
    p: L1Problem,
    variant: GameToChebVariant = GameToChebVariant.CORRECTED,
) -> Tuple[ChebyshevProblem, ReductionCertificate]:
    """
    Reduce an l1 problem to a Chebyshev problem of linear size.

    Args:
        p: l1 problem with m functions in n variables
        variant: game_to_cheb variant used by the last stage

    Returns:
        Tuple of (Chebyshev problem with 6m+4n+4 functions in 3m+2n+1 variables, chain certificate)
    """
    lp, to_lp = l1_to_lp(p)
    standard, to_standard = lp_to_standard(lp)
    game, to_game = standard_to_game(standard)
    problem, to_cheb = game_to_cheb(game, variant)
    cert = compose(ReductionKind.L1_TO_CHEB_LINEAR, [to_lp, to_standard, to_game, to_cheb])
    logger.debug(
        f"l1_to_cheb_linear: m={p.size}, n={p.arity} -> "
        f"{problem.size} functions in {problem.arity} variables"
    )
    return problem, cert


def pullback(cert: ReductionCertificate, value: Pulled) -> Pulled:
    """Apply the inverse solution map of a single or chained certificate."""
    if cert.is_chain:
        return cheb_chain_pullback(cert, value)
    return _PULLBACKS[cert.kind](cert, value)


def cheb_chain_pullback(cert: ReductionCertificate, s: Pulled) -> Pulled:
    """
    Pull a target solution back through every stage of a chain, last stage first.

    Raises:
        ChainPullbackError: Identifying the failing stage and its cause
    """
    if not cert.is_chain:
        raise CertificateMismatchError(f"{cert.kind.value} certificate is not a chain")

    current: Pulled = s
    for index in reversed(range(len(cert.stages))):
        stage = cert.stages[index]
        try:
            current = _PULLBACKS[stage.kind](stage, current)
        except (ReductionError, DimensionError) as exc:
            logger.debug(f"Chain pullback failed at stage {index} ({stage.kind.value}): {exc}")
            raise ChainPullbackError(index, stage.kind, exc) from exc
    return current


def l1_to_cheb_direct(p: L1Problem, cap: Optional[int] = None) -> ChebyshevProblem:
    """
    Direct reduction: one function f_1 +- f_2 +- ... +- f_m per sign pattern.

    Since max over sign patterns of |sum +-f_i| equals sum |f_i|, the two
    objectives agree at every point.

    Args:
        p: l1 problem with m functions
        cap: Largest m accepted (default from settings, 20)

    Returns:
        Chebyshev problem with 2^(m-1) functions in the same variables

    Raises:
        CapExceededError: If m > cap
    """
    if cap is None:
        cap = get_settings().direct_reduction_cap
    m = p.size
    if m > cap:
        raise CapExceededError(
            f"Direct reduction of {m} functions would emit {2 ** (m - 1)} functions (cap m <= {cap})"
        )

    first, rest = p.functions[0], p.functions[1:]
    functions = []
    for signs in itertools.product((1, -1), repeat=m - 1):
        combined = first
        for sign, f in zip(signs, rest):
            combined = combined + f if sign > 0 else combined - f
        functions.append(combined)

    logger.debug(f"l1_to_cheb_direct: m={m} -> {len(functions)} functions")
    return ChebyshevProblem(tuple(functions))
