"""Reductions module - problem-to-problem transformations with exact solution pullback."""

from src.reductions.chains import (
    cheb_chain_pullback,
    compose,
    l1_to_cheb_direct,
    l1_to_cheb_linear,
    lp_to_cheb,
    pullback,
)
from src.reductions.epigraph import cheb_to_lp, l1_to_lp, lp_sol_to_cheb_sol, lp_sol_to_l1_sol
from src.reductions.errors import (
    CapExceededError,
    CertificateMismatchError,
    ChainPullbackError,
    ContractViolationError,
    NotAStrategyError,
    ReductionError,
    TrivialGameError,
)
from src.reductions.games import (
    cheb_sol_to_strategy,
    corrected_objective_at_strategy,
    game_strategy_to_lp_sol,
    game_to_cheb,
    standard_to_game,
)
from src.reductions.standard import lp_to_standard, standard_sol_pullback

__all__ = [
    # Epigraph reductions
    "cheb_to_lp",
    "lp_sol_to_cheb_sol",
    "l1_to_lp",
    "lp_sol_to_l1_sol",
    # Standardization
    "lp_to_standard",
    "standard_sol_pullback",
    # Games
    "standard_to_game",
    "game_strategy_to_lp_sol",
    "game_to_cheb",
    "cheb_sol_to_strategy",
    "corrected_objective_at_strategy",
    # Chains
    "compose",
    "lp_to_cheb",
    "l1_to_cheb_linear",
    "l1_to_cheb_direct",
    "cheb_chain_pullback",
    "pullback",
    # Errors
    "ReductionError",
    "TrivialGameError",
    "NotAStrategyError",
    "ContractViolationError",
    "CapExceededError",
    "CertificateMismatchError",
    "ChainPullbackError",
]
