"""
Brute-force vertex enumeration oracles.

These oracles never touch the simplex module. Linear programs are examined in
their own variable space:

1. Constraints become inequalities a.x <= beta (sign bounds included) and
   equalities a.x = beta.
2. The lineality space (directions along which every row is constant) is
   pinned to zero, which leaves a pointed polyhedron with the same feasibility
   and the same optimum when the objective is constant along it.
3. Every vertex of a pointed polyhedron is the unique solution of the
   equalities plus n - rank(E) active inequalities, so trying all such subsets
   finds them all. No feasible vertex means INFEASIBLE.
4. The LP is unbounded iff an extreme ray of the recession cone improves the
   objective; extreme rays are one-dimensional solutions of the equalities plus
   n - rank(E) - 1 active inequalities.
"""

import itertools
import logging
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple

from src.core.config import get_settings
from src.core.evaluation import eval_lp_objective, game_payoff, is_lp_feasible
from src.core.models import (
    LinearProgram,
    MatrixGame,
    Relation,
    Sense,
    Solution,
    SolutionStatus,
    Strategy,
    VarSign,
    Vector,
)
from src.oracles.linalg import dot, nullspace, rank, solve_unique

logger = logging.getLogger(__name__)

MAX_VARIABLES = 6

Halfspace = Tuple[Vector, Fraction]


class LimitExceededError(Exception):
    """Raised when an instance is too large for exhaustive enumeration."""
    pass


class OracleError(Exception):
    """Raised when an oracle finds a result that contradicts known theory."""
    pass


def _resolve_limit(limit: Optional[int]) -> int:
    return get_settings().vertex_enum_limit if limit is None else limit


def _check_budget(n_choices: int, size: int, limit: int) -> None:
    subsets = comb(n_choices, size) if size >= 0 else 0
    if subsets > limit:
        raise LimitExceededError(
            f"Enumeration needs C({n_choices}, {size}) = {subsets} subsets (limit {limit})"
        )


def _split_constraints(p: LinearProgram) -> Tuple[List[Halfspace], List[Halfspace]]:
    """Inequalities a.x <= beta and equalities a.x = beta of an LP."""
    n = p.n_variables
    inequalities: List[Halfspace] = []
    equalities: List[Halfspace] = []
    for constraint in p.constraints:
        difference = constraint.lhs - constraint.rhs
        a, beta = difference.coefficients, -difference.constant
        if constraint.relation == Relation.LE:
            inequalities.append((a, beta))
        elif constraint.relation == Relation.GE:
            inequalities.append((tuple(-v for v in a), -beta))
        else:
            equalities.append((a, beta))
    for j, sign in enumerate(p.var_signs):
        if sign == VarSign.NONNEG:
            row = [Fraction(0)] * n
            row[j] = Fraction(-1)
            inequalities.append((tuple(row), Fraction(0)))
    return inequalities, equalities


def _enumerate_vertices(
    inequalities: Sequence[Halfspace],
    equalities: Sequence[Halfspace],
    n: int,
    limit: int,
) -> List[Vector]:
    """All distinct vertices of a pointed polyhedron, in enumeration order."""
    eq_rows = [a for a, _ in equalities]
    eq_rhs = [beta for _, beta in equalities]
    size = n - rank(eq_rows, n)
    _check_budget(len(inequalities), size, limit)

    vertices: List[Vector] = []
    seen = set()
    for subset in itertools.combinations(range(len(inequalities)), size):
        rows = eq_rows + [inequalities[i][0] for i in subset]
        rhs = eq_rhs + [inequalities[i][1] for i in subset]
        point = solve_unique(rows, rhs, n)
        if point is None or point in seen:
            continue
        if all(dot(a, point) <= beta for a, beta in inequalities):
            seen.add(point)
            vertices.append(point)
    return vertices


def _extreme_rays(
    inequalities: Sequence[Halfspace],
    equalities: Sequence[Halfspace],
    n: int,
    limit: int,
) -> List[Vector]:
    """Extreme rays of the recession cone  {r : E r = 0, a_i . r <= 0}  (pointed)."""
    eq_rows = [a for a, _ in equalities]
    size = n - rank(eq_rows, n) - 1
    if size < 0:
        return []
    _check_budget(len(inequalities), size, limit)

    rays: List[Vector] = []
    for subset in itertools.combinations(range(len(inequalities)), size):
        basis = nullspace(eq_rows + [inequalities[i][0] for i in subset], n)
        if len(basis) != 1:
            continue
        for sign in (1, -1):
            ray = tuple(sign * v for v in basis[0])
            if all(dot(a, ray) <= 0 for a, _ in inequalities):
                rays.append(ray)
    return rays


def vertex_enum_solve(p: LinearProgram, limit: Optional[int] = None) -> Solution:
    """
    Solve a small LP by exhaustive enumeration of vertices and extreme rays.

    Args:
        p: Linear program with at most MAX_VARIABLES variables
        limit: Largest number of subsets examined per pass (default from settings)

    Returns:
        OPTIMAL (first best vertex in enumeration order), INFEASIBLE or UNBOUNDED

    Raises:
        LimitExceededError: If the instance is beyond the oracle's reach
    """
    limit = _resolve_limit(limit)
    n = p.n_variables
    if n > MAX_VARIABLES:
        raise LimitExceededError(f"Oracle handles at most {MAX_VARIABLES} variables, got {n}")
    if n == 0:
        if is_lp_feasible(p, ()):
            return Solution.optimal((), eval_lp_objective(p, ()))
        return Solution.of_status(SolutionStatus.INFEASIBLE)

    inequalities, equalities = _split_constraints(p)
    c = p.objective.coefficients
    improving = 1 if p.sense == Sense.MAX else -1

    lineality = nullspace([a for a, _ in inequalities + equalities], n)
    pinned = equalities + [(d, Fraction(0)) for d in lineality]

    vertices = _enumerate_vertices(inequalities, pinned, n, limit)
    if not vertices:
        return Solution.of_status(SolutionStatus.INFEASIBLE)

    if any(dot(c, d) != 0 for d in lineality):
        return Solution.of_status(SolutionStatus.UNBOUNDED)
    for ray in _extreme_rays(inequalities, pinned, n, limit):
        if improving * dot(c, ray) > 0:
            logger.debug(f"Improving extreme ray {ray}")
            return Solution.of_status(SolutionStatus.UNBOUNDED)

    best = vertices[0]
    for point in vertices[1:]:
        if improving * (dot(c, point) - dot(c, best)) > 0:
            best = point
    logger.debug(f"vertex_enum_solve: {len(vertices)} vertices, best {best}")
    if not is_lp_feasible(p, best):
        raise OracleError(f"Enumerated vertex {best} violates the program")
    return Solution.optimal(best, eval_lp_objective(p, best))


def verify_strategy_optimal(g: MatrixGame, x: Strategy) -> bool:
    """
    True iff Mx <= 0 holds exactly.

    Raises:
        DimensionError: If the strategy and the game differ in size
    """
    return all(value <= 0 for value in game_payoff(g, x.x))


def enumerate_game_optima(g: MatrixGame, limit: Optional[int] = None) -> List[Strategy]:
    """
    Vertices of the optimal-strategy polytope  {Mx <= 0, x >= 0, sum x = 1}.

    Returns:
        Optimal vertex strategies, sorted by their entries

    Raises:
        LimitExceededError: If N exceeds MAX_VARIABLES or the subset budget
        OracleError: If no optimal strategy is found
    """
    limit = _resolve_limit(limit)
    size = g.size
    if size > MAX_VARIABLES:
        raise LimitExceededError(f"Oracle handles games up to size {MAX_VARIABLES}, got {size}")

    inequalities: List[Halfspace] = [(row, Fraction(0)) for row in g.M]
    for j in range(size):
        row = [Fraction(0)] * size
        row[j] = Fraction(-1)
        inequalities.append((tuple(row), Fraction(0)))
    equalities: List[Halfspace] = [((Fraction(1),) * size, Fraction(1))]

    vertices = _enumerate_vertices(inequalities, equalities, size, limit)
    if not vertices:
        raise OracleError("Symmetric game without an optimal strategy")
    return [Strategy(v) for v in sorted(vertices)]
