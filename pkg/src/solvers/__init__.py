"""Solvers module - exact simplex, symmetric games and approximation problems."""

from src.solvers.approximation import (
    solve_cheb,
    solve_cheb_chain,
    solve_cheb_on_face,
    solve_l1,
    solve_l1_direct,
    solve_l1_linear,
    solve_lp_via_cheb,
    solve_lp_via_game,
)
from src.solvers.games import solve_game
from src.solvers.simplex import (
    SimplexTableau,
    SolverError,
    is_feasible_standard,
    simplex_solve,
    solve_standard,
)

__all__ = [
    # Simplex
    "SimplexTableau",
    "simplex_solve",
    "solve_standard",
    "is_feasible_standard",
    # Games
    "solve_game",
    # Approximation
    "solve_cheb",
    "solve_l1",
    "solve_l1_direct",
    "solve_l1_linear",
    "solve_cheb_on_face",
    "solve_cheb_chain",
    "solve_lp_via_game",
    "solve_lp_via_cheb",
    # Errors
    "SolverError",
]
