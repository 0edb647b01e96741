"""
Solvers for Chebyshev and l1 problems, and LP solving through the game chain.

Every solver here runs an exact LP underneath and returns a Solution expressed
in the caller's own variables. Chebyshev LPs are written around a point where
every band |f_i| <= level already holds, so the slack basis is feasible and
the simplex starts in phase two.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.core.evaluation import eval_affine, eval_cheb, eval_lp_objective, is_lp_feasible
from src.core.models import (
    ChebyshevProblem,
    GameToChebVariant,
    L1Problem,
    LinearProgram,
    ReductionCertificate,
    ReductionKind,
    Solution,
    SolutionStatus,
    StandardLP,
    Vector,
)
from src.reductions.chains import cheb_chain_pullback, l1_to_cheb_direct, l1_to_cheb_linear, lp_to_cheb
from src.reductions.epigraph import cheb_to_lp, l1_to_lp, lp_sol_to_cheb_sol, lp_sol_to_l1_sol
from src.reductions.games import game_strategy_to_lp_sol, standard_to_game
from src.reductions.standard import lp_to_standard, standard_sol_pullback
from src.solvers.games import solve_game
from src.solvers.simplex import SolverError, is_feasible_standard, simplex_solve, solve_standard

logger = logging.getLogger(__name__)


def _band_rows(
    p: ChebyshevProblem,
    center: Vector,
    level: Fraction,
    margin: bool,
) -> Tuple[List[Vector], List[Fraction]]:
    """
    Rows of  -level <= f_i(center + u - v) (+ s) ... <= level  as  A w <= b.

    Columns are u, v and, with ``margin``, one column s that tightens every
    band by s. Right-hand sides are level -+ f_i(center).
    """
    rows: List[Vector] = []
    bounds: List[Fraction] = []
    extra = (Fraction(1),) if margin else ()
    for f in p.functions:
        at_center = eval_affine(f, center)
        negated = tuple(-a for a in f.coefficients)
        rows.append(f.coefficients + negated + extra)
        bounds.append(level - at_center)
        rows.append(negated + f.coefficients + extra)
        bounds.append(level + at_center)
    return rows, bounds


def _epigraph_optimum(p: ChebyshevProblem) -> Solution:
    """
    Optimum (x, t) of  min t, |f_i(x)| <= t  in the variables of cheb_to_lp.

    With t0 = max |f_i(0)| the program is solved as  max s  subject to
    |f_i(x)| <= t0 - s, s >= 0, which the origin satisfies with s = 0.
    """
    n = p.arity
    origin = (Fraction(0),) * n
    level = eval_cheb(p, origin)
    rows, bounds = _band_rows(p, origin, level, margin=True)
    objective = (Fraction(0),) * (2 * n) + (Fraction(1),)
    margin = solve_standard(StandardLP(c=objective, A=tuple(rows), b=tuple(bounds)))
    if not margin.is_optimal:
        raise SolverError(f"Chebyshev LP reported {margin.status.value}")

    w = margin.point
    x = tuple(w[j] - w[n + j] for j in range(n))
    t = level - margin.value
    return Solution.optimal(x + (t,), t)


def solve_cheb(p: ChebyshevProblem) -> Solution:
    """
    Minimize max_i |f_i(x)| exactly.

    Solves the epigraph LP of cheb_to_lp, checks the optimum against it and
    drops t through the certificate.

    Returns:
        OPTIMAL solution (a Chebyshev problem always attains its minimum)
    """
    lp, cert = cheb_to_lp(p)
    optimum = _epigraph_optimum(p)
    if not (is_lp_feasible(lp, optimum.point) and eval_lp_objective(lp, optimum.point) == optimum.value):
        raise SolverError(f"Chebyshev optimum {optimum.point} does not check out against its epigraph LP")
    solution = lp_sol_to_cheb_sol(cert, optimum)
    if eval_cheb(p, solution.point) != solution.value:
        raise SolverError(f"Chebyshev objective at {solution.point} differs from {solution.value}")
    return solution


def solve_l1(p: L1Problem) -> Solution:
    """Minimize sum_i |f_i(x)| through its epigraph LP."""
    lp, cert = l1_to_lp(p)
    solution = lp_sol_to_l1_sol(cert, simplex_solve(lp))
    if not solution.is_optimal:
        raise SolverError(f"l1 LP reported {solution.status.value}")
    return solution


def solve_l1_direct(p: L1Problem, cap: Optional[int] = None) -> Solution:
    """Minimize sum_i |f_i(x)| as the Chebyshev problem over all sign patterns."""
    return solve_cheb(l1_to_cheb_direct(p, cap))


def solve_cheb_on_face(
    p: ChebyshevProblem,
    level: Fraction,
    coordinate: int,
    center: Optional[Sequence] = None,
) -> Solution:
    """
    Maximize x[coordinate] over  {x : |f_i(x)| <= level for all i}.

    With ``level`` the Chebyshev optimum this searches the optimal set. The
    returned value is the Chebyshev objective at the chosen point, not the
    maximized coordinate.

    Args:
        p: Chebyshev problem
        level: Bound on every |f_i|
        coordinate: Index of the maximized variable
        center: A point of the set (default: the Chebyshev optimum)

    Returns:
        OPTIMAL solution, or the status of the face LP when it has no optimum
    """
    n = p.arity
    if center is None:
        optimum = solve_cheb(p)
        if optimum.value > level:
            return Solution.of_status(SolutionStatus.INFEASIBLE)
        center = optimum.point
    center = tuple(center)
    if n == 0:
        return Solution.optimal((), eval_cheb(p, ()))

    rows, bounds = _band_rows(p, center, level, margin=False)
    objective = [Fraction(0)] * (2 * n)
    objective[coordinate] = Fraction(1)
    objective[n + coordinate] = Fraction(-1)
    face = solve_standard(StandardLP(c=tuple(objective), A=tuple(rows), b=tuple(bounds)))
    if not face.is_optimal:
        return face
    point = tuple(center[j] + face.point[j] - face.point[n + j] for j in range(n))
    return Solution.optimal(point, eval_cheb(p, point))


def _game_t_coordinate(cert: ReductionCertificate) -> int:
    for stage in cert.stages:
        if stage.kind == ReductionKind.STANDARD_TO_GAME:
            return stage.var_map.block("t").start
    raise SolverError(f"{cert.kind.value} chain has no game stage")


def solve_cheb_chain(p: ChebyshevProblem, cert: ReductionCertificate) -> Solution:
    """
    Solve the Chebyshev end of a game chain and pull the optimum back.

    Among the Chebyshev optima the one with the largest game t-coordinate is
    pulled back, so a finite LP optimum is recovered whenever it exists.

    Raises:
        ChainPullbackError: If a stage rejects the point (e.g. the LITERAL
            variant landing off the strategy simplex)
    """
    optimum = solve_cheb(p)
    best = solve_cheb_on_face(p, optimum.value, _game_t_coordinate(cert), center=optimum.point)
    if not best.is_optimal:
        best = optimum
    return cheb_chain_pullback(cert, best)


def solve_l1_linear(
    p: L1Problem,
    variant: GameToChebVariant = GameToChebVariant.CORRECTED,
) -> Solution:
    """
    Minimize sum_i |f_i(x)| through the linear-size Chebyshev chain.

    Raises:
        ChainPullbackError: If the pullback fails (expected for LITERAL)
        SolverError: If the chain reports no finite optimum
    """
    problem, cert = l1_to_cheb_linear(p, variant)
    solution = solve_cheb_chain(problem, cert)
    if not solution.is_optimal:
        raise SolverError(f"l1 chain pullback produced {solution.status.value}")
    return solution


def _refine_no_finite_optimum(p: LinearProgram, s: Solution) -> Solution:
    if s.status != SolutionStatus.NO_FINITE_OPTIMUM:
        return s
    standard, _ = lp_to_standard(p)
    status = SolutionStatus.UNBOUNDED if is_feasible_standard(standard) else SolutionStatus.INFEASIBLE
    logger.debug(f"No finite optimum refined to {status.value}")
    return Solution.of_status(status)


def solve_lp_via_game(p: LinearProgram) -> Solution:
    """
    Solve an LP through its symmetric game.

    A zero t-coordinate only says the LP has no finite optimum; a phase-one
    feasibility check then separates INFEASIBLE from UNBOUNDED.
    """
    standard, to_standard = lp_to_standard(p)
    game, to_game = standard_to_game(standard)
    strategy, _ = solve_game(game)
    solution = standard_sol_pullback(to_standard, game_strategy_to_lp_sol(to_game, strategy))
    return _refine_no_finite_optimum(p, solution)


def solve_lp_via_cheb(
    p: LinearProgram,
    variant: GameToChebVariant = GameToChebVariant.CORRECTED,
) -> Solution:
    """
    Solve an LP as a single unconstrained Chebyshev problem.

    Raises:
        TrivialGameError: If the LP's game is zero (A, b and c all zero)
        ChainPullbackError: If the pullback fails
    """
    problem, cert = lp_to_cheb(p, variant)
    return _refine_no_finite_optimum(p, solve_cheb_chain(problem, cert))
