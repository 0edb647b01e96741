"""
Reductions through symmetric matrix games.

- standard_to_game: the block skew-symmetric game of a standard-form LP
- game_to_cheb: an optimal strategy of a symmetric game as the argmin of an
  unconstrained Chebyshev problem with 2N+2 functions in N variables

game_to_cheb ships two variants. LITERAL emits the shifted system with the
final pair  sum(x) + c - 1  and  -sum(x) - c + 1. These are negatives of one
another, so |.| cannot tell sum(x) < 1 from sum(x) > 1 and the optimum may sit
below c at a point that is not a strategy. CORRECTED normalizes M by its
largest entry (so c = 1) and replaces the final function with
-sum(x) + c + 1. For that system:

    max(|sum x|, |2 - sum x|) >= 1, with equality iff sum x = 1
    |1 - x_i| <= 1 forces 0 <= x_i <= 2
    with sum x = 1, row i equals 1 + (M'x)_i, so <= 1 iff (M'x)_i <= 0

hence the objective is >= 1 everywhere and equals 1 exactly on the optimal
strategies of M.
"""

import logging
from fractions import Fraction
from typing import List, Tuple

from src.core.evaluation import game_payoff
from src.core.models import (
    AffineFunction,
    ChebyshevProblem,
    GameToChebVariant,
    MatrixGame,
    ReductionCertificate,
    ReductionKind,
    Solution,
    SolutionStatus,
    StandardLP,
    Strategy,
    VariableBlock,
    VariableMap,
)
from src.reductions.errors import (
    CertificateMismatchError,
    ContractViolationError,
    NotAStrategyError,
    TrivialGameError,
    require_kind,
)

logger = logging.getLogger(__name__)


def standard_to_game(p: StandardLP) -> Tuple[MatrixGame, ReductionCertificate]:
    """
    Build the skew-symmetric game of a standard-form LP.

    Rows and columns are partitioned into the y-block (m' dual variables), the
    w-block (n' primal variables) and a scalar t:

        M = [[0, A, -b], [-A^T, 0, c], [b^T, -c^T, 0]]

    Args:
        p: Standard-form LP

    Returns:
        Tuple of (MatrixGame of size m'+n'+1, certificate)
    """
    m, n = p.n_rows, p.n_cols
    size = m + n + 1
    zero = Fraction(0)

    rows: List[Tuple[Fraction, ...]] = []
    for i in range(m):
        rows.append((zero,) * m + p.A[i] + (-p.b[i],))
    for j in range(n):
        rows.append(tuple(-p.A[k][j] for k in range(m)) + (zero,) * n + (p.c[j],))
    rows.append(p.b + tuple(-cj for cj in p.c) + (zero,))

    game = MatrixGame(tuple(rows))
    cert = ReductionCertificate(
        kind=ReductionKind.STANDARD_TO_GAME,
        source_dims=(n, m),
        target_dims=(size, size),
        var_map=VariableMap(blocks=(
            VariableBlock("y", 0, m),
            VariableBlock("w", m, m + n),
            VariableBlock("t", m + n, size),
        )),
        payoff=game.M,
    )
    logger.debug(f"standard_to_game: {m} rows, {n} columns -> game of size {size}")
    return game, cert


def game_strategy_to_lp_sol(cert: ReductionCertificate, z: Strategy) -> Solution:
    """
    Recover a standard-form LP solution from an optimal strategy z = (y, w, t).

    If t > 0, w/t is optimal with value c.(w/t). If t = 0 the LP has no finite
    optimum (it is infeasible or unbounded) and NO_FINITE_OPTIMUM is returned.

    Raises:
        ContractViolationError: If z is not optimal for the game (Mz <= 0 fails)
    """
    require_kind(cert, ReductionKind.STANDARD_TO_GAME)
    size = cert.target_dims[0]
    if len(z) != size:
        raise CertificateMismatchError(f"Strategy has {len(z)} entries, certificate expects {size}")

    payoff = game_payoff(MatrixGame(cert.payoff), z.x)
    for i, value in enumerate(payoff):
        if value > 0:
            raise ContractViolationError(
                f"Strategy is not optimal for the game: (Mz)[{i}] = {value} > 0"
            )

    w_block = cert.var_map.block("w")
    t = z.x[cert.var_map.block("t").start]
    if t == 0:
        logger.info("Optimal strategy has t = 0: the LP has no finite optimum")
        return Solution.of_status(SolutionStatus.NO_FINITE_OPTIMUM)

    last_row = cert.payoff[size - 1]
    point = tuple(z.x[j] / t for j in range(w_block.start, w_block.stop))
    c = tuple(-last_row[j] for j in range(w_block.start, w_block.stop))
    value = sum((cj * wj for cj, wj in zip(c, point)), Fraction(0))
    return Solution.optimal(point, value)


def game_to_cheb(
    g: MatrixGame,
    variant: GameToChebVariant = GameToChebVariant.CORRECTED,
) -> Tuple[ChebyshevProblem, ReductionCertificate]:
    """
    Reduce finding an optimal strategy of a symmetric game to a Chebyshev problem.

    Args:
        g: Nonzero skew-symmetric game of size N
        variant: LITERAL (as printed, shift c = max entry) or CORRECTED (normalized, c = 1)

    Returns:
        Tuple of (Chebyshev problem with 2N+2 functions in N variables, certificate)

    Raises:
        TrivialGameError: If M = 0 (every mixed strategy is optimal)
    """
    variant = GameToChebVariant(variant)
    if g.is_zero:
        raise TrivialGameError("Payoff matrix is zero; every mixed strategy is optimal")

    size = g.size
    largest = g.max_entry
    if variant == GameToChebVariant.LITERAL:
        alpha = Fraction(1)
        shift = largest
    else:
        alpha = 1 / largest
        shift = Fraction(1)
    matrix = [[entry * alpha for entry in row] for row in g.M]

    ones = (Fraction(1),) * size
    minus_ones = (Fraction(-1),) * size

    functions: List[AffineFunction] = [
        AffineFunction(Fraction(0), tuple(entry + shift for entry in row)) for row in matrix
    ]
    functions.extend(
        AffineFunction(shift, AffineFunction.variable(i, size, -1).coefficients)
        for i in range(size)
    )
    functions.append(AffineFunction(shift - 1, ones))
    if variant == GameToChebVariant.LITERAL:
        functions.append(AffineFunction(1 - shift, minus_ones))
    else:
        functions.append(AffineFunction(shift + 1, minus_ones))

    problem = ChebyshevProblem(tuple(functions))
    cert = ReductionCertificate(
        kind=ReductionKind.GAME_TO_CHEB,
        source_dims=(size, size),
        target_dims=(size, 2 * size + 2),
        var_map=VariableMap(blocks=(VariableBlock("x", 0, size),)),
        shift_c=shift,
        scale_alpha=alpha,
        variant=variant,
        payoff=g.M,
    )
    logger.debug(f"game_to_cheb ({variant.value}): size {size} -> {2 * size + 2} functions")
    return problem, cert


def cheb_sol_to_strategy(cert: ReductionCertificate, s: Solution) -> Strategy:
    """
    Read an optimal Chebyshev point back as a mixed strategy.

    The point must satisfy x >= 0 and sum x = 1 exactly. For the CORRECTED
    variant this already makes it optimal for the source game; for LITERAL the
    condition Mx <= 0 is checked as well.

    Raises:
        NotAStrategyError: With the violated condition and witness values
        ContractViolationError: If the solution is not OPTIMAL
    """
    require_kind(cert, ReductionKind.GAME_TO_CHEB)
    if not s.is_optimal:
        raise ContractViolationError(f"Expected an optimal Chebyshev solution, got {s.status.value}")

    size = cert.target_dims[0]
    if len(s.point) != size:
        raise CertificateMismatchError(
            f"Solution has {len(s.point)} coordinates, certificate expects {size}"
        )

    for i, entry in enumerate(s.point):
        if entry < 0:
            raise NotAStrategyError("x >= 0", {"index": i, "entry": entry, "value": s.value})
    total = sum(s.point, Fraction(0))
    if total != 1:
        raise NotAStrategyError("sum x = 1", {"sum": total, "value": s.value})

    strategy = Strategy(s.point)
    if cert.variant == GameToChebVariant.LITERAL:
        payoff = game_payoff(MatrixGame(cert.payoff), strategy.x)
        for i, value in enumerate(payoff):
            if value > 0:
                raise NotAStrategyError("Mx <= 0", {"row": i, "payoff": value})
    return strategy


def corrected_objective_at_strategy(g: MatrixGame, x: Strategy) -> Fraction:
    """1 + max(0, max_i (M'x)_i): the CORRECTED objective at any strategy, M' = M / max entry."""
    if g.is_zero:
        raise TrivialGameError("Payoff matrix is zero; every mixed strategy is optimal")
    payoff = game_payoff(g, x.x)
    return 1 + max(Fraction(0), max(payoff) / g.max_entry)
