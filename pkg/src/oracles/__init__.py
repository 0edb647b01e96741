"""Oracles module - brute-force ground truth and seeded verification instances."""

from src.oracles.sampling import (
    l1_cheb_pointwise_check,
    random_cheb_problem,
    random_l1_problem,
    random_lp,
    random_point,
    random_skew_game,
)
from src.oracles.vertex_enum import (
    LimitExceededError,
    OracleError,
    enumerate_game_optima,
    vertex_enum_solve,
    verify_strategy_optimal,
)

__all__ = [
    # Vertex enumeration
    "vertex_enum_solve",
    "verify_strategy_optimal",
    "enumerate_game_optima",
    # Sampling
    "l1_cheb_pointwise_check",
    "random_cheb_problem",
    "random_l1_problem",
    "random_lp",
    "random_point",
    "random_skew_game",
    # Errors
    "LimitExceededError",
    "OracleError",
]
