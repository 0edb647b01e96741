"""
Optimal strategies of symmetric (skew-symmetric) matrix games.

The value of such a game is zero, so x is optimal iff x is a strategy with
Mx <= 0. solve_game finds one in two LP stages: the first confirms the value
is zero, the second maximizes the last coordinate over the optimal face so
that a strategy with positive last coordinate is returned whenever one exists.
"""

import logging
from fractions import Fraction
from typing import List, Tuple

from src.core.evaluation import game_payoff
from src.core.models import (
    AffineFunction,
    LinearConstraint,
    LinearProgram,
    MatrixGame,
    Relation,
    Sense,
    Strategy,
    VarSign,
)
from src.solvers.simplex import SolverError, simplex_solve

logger = logging.getLogger(__name__)


def _simplex_constraint(size: int, arity: int) -> LinearConstraint:
    ones = (Fraction(1),) * size + (Fraction(0),) * (arity - size)
    one = AffineFunction(Fraction(1), (Fraction(0),) * arity)
    return LinearConstraint(AffineFunction(Fraction(0), ones), Relation.EQ, one)


def _value_program(g: MatrixGame) -> LinearProgram:
    """minimize t  s.t.  (Mx)_i <= t,  sum x = 1,  x >= 0,  t free"""
    size = g.size
    arity = size + 1
    zero = AffineFunction.zero(arity)
    constraints: List[LinearConstraint] = [
        LinearConstraint(AffineFunction(Fraction(0), row + (Fraction(-1),)), Relation.LE, zero)
        for row in g.M
    ]
    constraints.append(_simplex_constraint(size, arity))
    return LinearProgram(
        sense=Sense.MIN,
        objective=AffineFunction.variable(size, arity),
        constraints=tuple(constraints),
        var_signs=(VarSign.NONNEG,) * size + (VarSign.FREE,),
    )


def _optimal_face_program(g: MatrixGame) -> LinearProgram:
    """maximize x_N  s.t.  Mx <= 0,  sum x = 1,  x >= 0"""
    size = g.size
    zero = AffineFunction.zero(size)
    constraints: List[LinearConstraint] = [
        LinearConstraint(AffineFunction(Fraction(0), row), Relation.LE, zero) for row in g.M
    ]
    constraints.append(_simplex_constraint(size, size))
    return LinearProgram(
        sense=Sense.MAX,
        objective=AffineFunction.variable(size - 1, size),
        constraints=tuple(constraints),
        var_signs=(VarSign.NONNEG,) * size,
    )


def solve_game(g: MatrixGame) -> Tuple[Strategy, Fraction]:
    """
    Find an optimal strategy of a symmetric game.

    Args:
        g: Skew-symmetric game of size N

    Returns:
        Tuple of (optimal strategy maximizing its last coordinate, that coordinate)

    Raises:
        SolverError: If the game value is not exactly zero or the result fails Mx <= 0
    """
    if g.is_zero:
        strategy = Strategy.uniform(g.size)
        return strategy, strategy.x[-1]

    stage_one = simplex_solve(_value_program(g))
    if not stage_one.is_optimal or stage_one.value != 0:
        raise SolverError(f"Symmetric game value should be 0, solver reported {stage_one}")

    stage_two = simplex_solve(_optimal_face_program(g))
    if not stage_two.is_optimal:
        raise SolverError(f"Optimal face of the game is empty or unbounded: {stage_two.status.value}")

    strategy = Strategy(stage_two.point)
    payoff = game_payoff(g, strategy.x)
    if any(value > 0 for value in payoff):
        raise SolverError("Game solver returned a strategy with (Mx)_i > 0")

    logger.debug(f"solve_game: size {g.size}, last coordinate {stage_two.value}")
    return strategy, stage_two.value
