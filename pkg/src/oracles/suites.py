"""
Seeded verification suites.

Each suite draws random instances from a ``numpy`` generator, runs the
library on them and compares against the brute-force oracles or closed-form
identities with exact equality. Results are collected per suite and can be
rendered as a pandas table.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from src.cli.serialization import emit_problem, parse_document
from src.core.evaluation import eval_cheb
from src.core.models import (
    AffineFunction,
    GameToChebVariant,
    LinearConstraint,
    LinearProgram,
    MatrixGame,
    Relation,
    Sense,
    SolutionStatus,
    VarSign,
)
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
    enumerate_game_optima,
    vertex_enum_solve,
    verify_strategy_optimal,
)
from src.reductions.chains import l1_to_cheb_direct, l1_to_cheb_linear, lp_to_cheb
from src.reductions.epigraph import cheb_to_lp, l1_to_lp
from src.reductions.games import (
    cheb_sol_to_strategy,
    corrected_objective_at_strategy,
    game_strategy_to_lp_sol,
    game_to_cheb,
    standard_to_game,
)
from src.reductions.standard import lp_to_standard, standard_sol_pullback
from src.solvers.approximation import solve_cheb, solve_l1, solve_l1_direct, solve_l1_linear, solve_lp_via_game
from src.solvers.games import solve_game
from src.solvers.simplex import simplex_solve

logger = logging.getLogger(__name__)

ROCK_PAPER_SCISSORS = (
    (0, 1, -1),
    (-1, 0, 1),
    (1, -1, 0),
)

DEFAULT_MAX_SIZE = 6


def rock_paper_scissors() -> MatrixGame:
    return MatrixGame(ROCK_PAPER_SCISSORS)


def unit_box_lp() -> LinearProgram:
    """max x1  s.t.  x1 <= 1,  x1 >= 0; its game is rock-paper-scissors."""
    return LinearProgram(
        sense=Sense.MAX,
        objective=AffineFunction.variable(0, 1),
        constraints=(LinearConstraint(AffineFunction.variable(0, 1), Relation.LE, AffineFunction(1, (0,))),),
        var_signs=(VarSign.NONNEG,),
    )


@dataclass
class SuiteResult:
    """Outcome of one verification suite."""
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, condition: bool, detail: str) -> None:
        self.checks += 1
        if not condition:
            logger.error(f"[{self.name}] {detail}")
            self.failures.append(detail)

    def run(self, trial: int, body: Callable[[], None]) -> None:
        """Run one trial; an exception counts as a failed check."""
        try:
            body()
        except Exception as exc:
            self.check(False, f"trial {trial}: {type(exc).__name__}: {exc}")


# ===== Dossier =====

def literal_counterexample(g: Optional[MatrixGame] = None, seed: int = 0, samples: int = 20) -> Dict[str, Any]:
    """
    Evidence that the LITERAL game-to-Chebyshev system can bottom out off the strategy simplex.

    The literal system is solved by simplex and by vertex enumeration; its
    optimum is compared with the shift c and the corrected variant's optimum.
    The two claims that do hold for the literal system are sampled as well:
    a negative entry, or entries summing past 1, push the objective above c.

    Returns:
        Dict of exact values and booleans describing the instance
    """
    g = g or rock_paper_scissors()
    rng = np.random.default_rng(seed)
    literal, cert = game_to_cheb(g, GameToChebVariant.LITERAL)
    corrected, _ = game_to_cheb(g, GameToChebVariant.CORRECTED)
    shift = cert.shift_c

    by_simplex = solve_cheb(literal)
    lp, _ = cheb_to_lp(literal)
    try:
        by_oracle = vertex_enum_solve(lp).value
    except LimitExceededError:
        logger.warning(f"Game of size {g.size} is beyond the vertex-enumeration oracle")
        by_oracle = None
    argmin = by_simplex.point
    argmin_sum = sum(argmin, Fraction(0))

    negative_points = []
    overfull_points = []
    for _ in range(samples):
        x = [abs(v) for v in random_point(rng, g.size)]
        negative = list(x)
        negative[int(rng.integers(g.size))] = -x[0] - Fraction(1, 4)
        negative_points.append(tuple(negative))
        total = sum(x, Fraction(0))
        if total <= 1:
            x[0] += 2 - total
        overfull_points.append(tuple(x))

    return {
        "game": [[str(v) for v in row] for row in g.M],
        "shift_c": shift,
        "literal_value_simplex": by_simplex.value,
        "literal_value_oracle": by_oracle,
        "literal_argmin": argmin,
        "literal_argmin_sum": argmin_sum,
        "literal_below_shift": by_simplex.value < shift,
        "argmin_is_strategy": argmin_sum == 1 and all(v >= 0 for v in argmin),
        "corrected_value": solve_cheb(corrected).value,
        "negative_entry_exceeds_shift": all(eval_cheb(literal, x) > shift for x in negative_points),
        "sum_above_one_exceeds_shift": all(eval_cheb(literal, x) > shift for x in overfull_points),
    }


# ===== Suites =====

def suite_sizes(rng: np.random.Generator, trials: int, max_size: int) -> SuiteResult:
    """Emitted dimensions follow the closed-form size laws."""
    result = SuiteResult("sizes")
    for trial in range(trials):
        m, n = int(rng.integers(1, 11)), int(rng.integers(1, 6))
        size = int(rng.integers(2, max(2, max_size) + 1))

        def body() -> None:
            cheb = random_cheb_problem(rng, m, n)
            l1 = random_l1_problem(rng, m, n)
            lp, _ = cheb_to_lp(cheb)
            result.check((lp.n_variables, lp.n_constraints) == (n + 1, 2 * m), f"cheb_to_lp m={m} n={n}")
            lp, _ = l1_to_lp(l1)
            result.check((lp.n_variables, lp.n_constraints) == (m + n, 2 * m), f"l1_to_lp m={m} n={n}")
            game_cheb, _ = game_to_cheb(random_skew_game(rng, size))
            result.check((game_cheb.size, game_cheb.arity) == (2 * size + 2, size), f"game_to_cheb N={size}")
            linear, _ = l1_to_cheb_linear(l1)
            result.check(
                (linear.size, linear.arity) == (6 * m + 4 * n + 4, 3 * m + 2 * n + 1),
                f"l1_to_cheb_linear m={m} n={n}",
            )
            result.check(l1_to_cheb_direct(l1).size == 2 ** (m - 1), f"l1_to_cheb_direct m={m}")

        result.run(trial, body)
    return result


def suite_corrected(rng: np.random.Generator, trials: int, max_size: int) -> SuiteResult:
    """The corrected Chebyshev system has optimum 1, attained exactly at optimal strategies."""
    result = SuiteResult("corrected")
    for trial in range(trials):
        size = int(rng.integers(2, max(2, max_size) + 1))

        def body() -> None:
            g = random_skew_game(rng, size)
            problem, cert = game_to_cheb(g, GameToChebVariant.CORRECTED)
            solution = solve_cheb(problem)
            result.check(solution.value == 1, f"trial {trial}: corrected optimum {solution.value} != 1")
            strategy = cheb_sol_to_strategy(cert, solution)
            result.check(verify_strategy_optimal(g, strategy), f"trial {trial}: pulled-back strategy not optimal")
            for vertex in enumerate_game_optima(g):
                result.check(
                    eval_cheb(problem, vertex.x) == 1 and corrected_objective_at_strategy(g, vertex) == 1,
                    f"trial {trial}: optimal vertex {vertex.x} does not evaluate to 1",
                )

        result.run(trial, body)
    return result


def suite_literal(rng: np.random.Generator, trials: int, max_size: int) -> SuiteResult:
    """The literal system on rock-paper-scissors: optimum 3/4 below c = 1, off the simplex."""
    result = SuiteResult("literal")

    def body() -> None:
        dossier = literal_counterexample(seed=int(rng.integers(2 ** 31)), samples=max(trials, 1))
        result.check(dossier["literal_value_simplex"] == Fraction(3, 4), "literal optimum is not 3/4")
        result.check(
            dossier["literal_value_oracle"] == dossier["literal_value_simplex"],
            "simplex and oracle disagree on the literal optimum",
        )
        result.check(dossier["literal_below_shift"], "literal optimum is not below c")
        result.check(not dossier["argmin_is_strategy"], "literal argmin is a strategy")
        result.check(dossier["corrected_value"] == 1, "corrected optimum is not 1")
        result.check(dossier["negative_entry_exceeds_shift"], "negative-entry claim fails")
        result.check(dossier["sum_above_one_exceeds_shift"], "sum-above-one claim fails")

    result.run(0, body)
    return result


_STATUS_CYCLE = (SolutionStatus.OPTIMAL, SolutionStatus.INFEASIBLE, SolutionStatus.UNBOUNDED, None)


def suite_simplex(rng: np.random.Generator, trials: int, max_size: int) -> SuiteResult:
    """simplex_solve agrees with vertex enumeration in status and exact value."""
    result = SuiteResult("simplex")
    for trial in range(trials):
        expected = _STATUS_CYCLE[trial % len(_STATUS_CYCLE)]
        n, rows = int(rng.integers(1, 5)), int(rng.integers(1, 9))

        def body() -> None:
            p = random_lp(rng, n, rows, expected)
            solved, oracle = simplex_solve(p), vertex_enum_solve(p)
            result.check(solved.status == oracle.status, f"trial {trial}: {solved.status} vs oracle {oracle.status}")
            result.check(solved.value == oracle.value, f"trial {trial}: {solved.value} vs oracle {oracle.value}")
            if expected is not None:
                result.check(solved.status == expected, f"trial {trial}: built {expected.value}, got {solved.status.value}")

        result.run(trial, body)
    return result


def suite_lp_chain(rng: np.random.Generator, trials: int, max_size: int) -> SuiteResult:
    """LP -> game -> strategy -> LP recovers the simplex optimum."""
    result = SuiteResult("lp-chain")

    def unit_box() -> None:
        standard, to_standard = lp_to_standard(unit_box_lp())
        game, to_game = standard_to_game(standard)
        result.check(game == rock_paper_scissors(), "unit box LP does not give rock-paper-scissors")
        strategy, _ = solve_game(game)
        solution = standard_sol_pullback(to_standard, game_strategy_to_lp_sol(to_game, strategy))
        result.check(solution.point == (1,) and solution.value == 1, f"unit box chain gave {solution}")

    result.run(0, unit_box)
    for trial in range(trials):
        expected = _STATUS_CYCLE[trial % 3]
        n, rows = int(rng.integers(1, 4)), int(rng.integers(1, 6))

        def body() -> None:
            p = random_lp(rng, n, rows, expected)
            direct, via_game = simplex_solve(p), solve_lp_via_game(p)
            result.check(
                (direct.status, direct.value) == (via_game.status, via_game.value),
                f"trial {trial}: simplex {direct.status.value} {direct.value}, "
                f"game {via_game.status.value} {via_game.value}",
            )

        result.run(trial + 1, body)
    return result


def suite_l1(rng: np.random.Generator, trials: int, max_size: int) -> SuiteResult:
    """Epigraph, direct and linear-chain l1 solvers return the same optimum."""
    result = SuiteResult("l1")
    for trial in range(trials):
        m, n = int(rng.integers(1, max(1, max_size) + 1)), int(rng.integers(1, 4))
        seed = int(rng.integers(2 ** 31))

        def body() -> None:
            p = random_l1_problem(rng, m, n)
            epigraph = solve_l1(p).value
            direct = solve_l1_direct(p).value
            linear = solve_l1_linear(p).value
            result.check(epigraph == direct == linear, f"trial {trial}: {epigraph}, {direct}, {linear}")
            result.check(l1_cheb_pointwise_check(p, 100, seed), f"trial {trial}: pointwise identity fails")

        result.run(trial, body)
    return result


def suite_serialization(rng: np.random.Generator, trials: int, max_size: int) -> SuiteResult:
    """parse(emit(p)) == p, and emission of a parsed document is canonical."""
    result = SuiteResult("serialization")
    for trial in range(trials):
        m, n = int(rng.integers(1, 5)), int(rng.integers(1, 4))

        def body() -> None:
            l1 = random_l1_problem(rng, m, n)
            lp = random_lp(rng, n, m)
            cheb, linear_cert = l1_to_cheb_linear(l1)
            lp_cheb, lp_cert = lp_to_cheb(unit_box_lp())
            standard, standard_cert = lp_to_standard(lp)
            cases = [
                (l1, None),
                (lp, None),
                (random_skew_game(rng, int(rng.integers(2, 5))), None),
                (cheb, linear_cert),
                (lp_cheb, lp_cert),
                (standard, standard_cert),
            ]
            for problem, cert in cases:
                emitted = emit_problem(problem, cert)
                parsed, parsed_cert = parse_document(emitted)
                result.check((parsed, parsed_cert) == (problem, cert), f"trial {trial}: round trip differs")
                result.check(emit_problem(parsed, parsed_cert) == emitted, f"trial {trial}: emission not canonical")

        result.run(trial, body)
    return result


SUITES: Dict[str, Callable[[np.random.Generator, int, int], SuiteResult]] = {
    "sizes": suite_sizes,
    "corrected": suite_corrected,
    "literal": suite_literal,
    "simplex": suite_simplex,
    "lp-chain": suite_lp_chain,
    "l1": suite_l1,
    "serialization": suite_serialization,
}


def run_suites(
    names: Optional[Sequence[str]] = None,
    seed: int = 0,
    trials: int = 50,
    max_size: int = DEFAULT_MAX_SIZE,
) -> List[SuiteResult]:
    """
    Run the named suites (all by default), each from its own seeded generator.

    Raises:
        KeyError: If a suite name is unknown
    """
    names = list(names or SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise KeyError(f"Unknown suites: {', '.join(unknown)}")

    results = []
    order = list(SUITES)
    for name in names:
        rng = np.random.default_rng([seed, order.index(name)])
        logger.info(f"Running suite {name} ({trials} trials, seed {seed})")
        results.append(SUITES[name](rng, trials, max_size))
    return results


def results_table(results: Sequence[SuiteResult]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {"suite": r.name, "checks": r.checks, "failures": len(r.failures), "passed": r.passed}
            for r in results
        ],
        columns=["suite", "checks", "failures", "passed"],
    )
