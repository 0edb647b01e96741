"""
Exact two-phase simplex over rationals.

The tableau is a dense numpy object array of ``Fraction`` entries, so every
row operation is exact. Pivot selection follows Bland's rule (lowest-index
entering column with positive reduced cost, lowest-index basic variable among
ratio ties), which guarantees termination on degenerate programs.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from src.core.evaluation import eval_lp_objective, eval_standard_objective, is_lp_feasible, is_standard_feasible
from src.core.models import LinearProgram, Solution, SolutionStatus, StandardLP
from src.reductions.standard import lp_to_standard, standard_sol_pullback

logger = logging.getLogger(__name__)


class SolverError(Exception):
    """Raised when an exact identity a solver relies on does not hold."""
    pass


class SimplexTableau:
    """
    Dense tableau for  A w + s = b,  w, s >= 0  of a standard-form LP.

    Columns are ordered: n structural, m slack, then one artificial per row
    with b_i < 0 (such rows are negated so every right-hand side is >= 0).
    The last tableau column holds the right-hand side. ``cost`` is the
    reduced-cost row of the current objective, its last entry is minus the
    objective value.
    """

    def __init__(self, p: StandardLP):
        m, n = p.n_rows, p.n_cols
        negative_rows = [i for i in range(m) if p.b[i] < 0]

        self.n_structural = n
        self.artificial_start = n + m
        self.n_columns = n + m + len(negative_rows)
        self.table = np.full((m, self.n_columns + 1), Fraction(0), dtype=object)
        self.basis: List[int] = []
        self.cost = np.full(self.n_columns + 1, Fraction(0), dtype=object)
        self.pivots = 0

        artificial = self.artificial_start
        for i in range(m):
            sign = -1 if p.b[i] < 0 else 1
            for j in range(n):
                self.table[i, j] = sign * p.A[i][j]
            self.table[i, n + i] = Fraction(sign)
            self.table[i, -1] = sign * p.b[i]
            if sign < 0:
                self.table[i, artificial] = Fraction(1)
                self.basis.append(artificial)
                artificial += 1
            else:
                self.basis.append(n + i)

    @property
    def n_rows(self) -> int:
        return len(self.basis)

    def _price(self, objective: Sequence[Fraction]) -> None:
        """Reduced costs d - d_B^T T for a maximization objective d."""
        cost = np.array(list(objective) + [Fraction(0)], dtype=object)
        for i, basic in enumerate(self.basis):
            if objective[basic] != 0:
                cost = cost - objective[basic] * self.table[i, :]
        self.cost = cost

    def _pivot(self, row: int, column: int) -> None:
        pivot = self.table[row, column]
        support = [j for j in range(self.n_columns + 1) if self.table[row, j] != 0]
        for j in support:
            self.table[row, j] = self.table[row, j] / pivot
        values = [(j, self.table[row, j]) for j in support]

        # Only columns where the pivot row is nonzero change.
        for i in range(self.n_rows):
            factor = self.table[i, column]
            if i == row or factor == 0:
                continue
            for j, value in values:
                self.table[i, j] = self.table[i, j] - factor * value
        factor = self.cost[column]
        if factor != 0:
            for j, value in values:
                self.cost[j] = self.cost[j] - factor * value
        self.basis[row] = column
        self.pivots += 1

    def _leaving_row(self, column: int) -> Optional[int]:
        leaving: Optional[int] = None
        best: Optional[Fraction] = None
        for i in range(self.n_rows):
            entry = self.table[i, column]
            if entry <= 0:
                continue
            ratio = self.table[i, -1] / entry
            if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leaving]):
                leaving, best = i, ratio
        return leaving

    def _iterate(self, columns: Sequence[int]) -> bool:
        """Pivot until optimal (True) or an unbounded column is found (False)."""
        while True:
            entering = next((j for j in columns if self.cost[j] > 0), None)
            if entering is None:
                return True
            leaving = self._leaving_row(entering)
            if leaving is None:
                logger.debug(f"Column {entering} is unbounded after {self.pivots} pivots")
                return False
            self._pivot(leaving, entering)

    def phase_one(self) -> bool:
        """
        Drive artificials to zero.

        Returns:
            True if the program is feasible
        """
        if self.artificial_start == self.n_columns:
            return True

        objective = [Fraction(0)] * self.artificial_start
        objective += [Fraction(-1)] * (self.n_columns - self.artificial_start)
        self._price(objective)
        self._iterate(range(self.n_columns))

        infeasibility = sum(
            (self.table[i, -1] for i, basic in enumerate(self.basis) if basic >= self.artificial_start),
            Fraction(0),
        )
        if infeasibility != 0:
            logger.debug(f"Phase one ended with infeasibility {infeasibility}")
            return False

        # Basic artificials sit at zero; swap them for any real column of their row.
        for i, basic in enumerate(self.basis):
            if basic < self.artificial_start:
                continue
            column = next(
                (j for j in range(self.artificial_start) if self.table[i, j] != 0),
                None,
            )
            if column is not None:
                self._pivot(i, column)
        return True

    def phase_two(self, c: Sequence[Fraction]) -> bool:
        """
        Maximize c.w from the feasible basis; artificials never re-enter.

        Returns:
            True if an optimum was reached, False if the program is unbounded
        """
        objective = list(c) + [Fraction(0)] * (self.n_columns - self.n_structural)
        self._price(objective)
        return self._iterate(range(self.artificial_start))

    def basic_solution(self) -> List[Fraction]:
        w = [Fraction(0)] * self.n_structural
        for i, basic in enumerate(self.basis):
            if basic < self.n_structural:
                w[basic] = self.table[i, -1]
        return w


def is_feasible_standard(p: StandardLP) -> bool:
    """Phase one only: does A w <= b, w >= 0 have a solution?"""
    return SimplexTableau(p).phase_one()


def solve_standard(p: StandardLP) -> Solution:
    """
    Solve  maximize c.w, A w <= b, w >= 0  exactly.

    Returns:
        OPTIMAL with a vertex solution, INFEASIBLE or UNBOUNDED

    Raises:
        SolverError: If the returned vertex fails an exact feasibility recheck
    """
    tableau = SimplexTableau(p)
    if not tableau.phase_one():
        logger.debug("Standard LP is infeasible")
        return Solution.of_status(SolutionStatus.INFEASIBLE)
    if not tableau.phase_two(p.c):
        return Solution.of_status(SolutionStatus.UNBOUNDED)

    w = tableau.basic_solution()
    if not is_standard_feasible(p, w):
        raise SolverError("Simplex vertex violates A w <= b, w >= 0")
    value = eval_standard_objective(p, w)
    logger.debug(f"Simplex optimum {value} after {tableau.pivots} pivots")
    return Solution.optimal(w, value)


def simplex_solve(p: LinearProgram) -> Solution:
    """
    Solve a general LP: standardize, run the two-phase simplex, pull back.

    Args:
        p: Linear program

    Returns:
        Solution with status OPTIMAL, INFEASIBLE or UNBOUNDED
    """
    if p.n_variables == 0:
        # Nothing to choose: the program is its constant objective, if feasible.
        if is_lp_feasible(p, ()):
            return Solution.optimal((), eval_lp_objective(p, ()))
        return Solution.of_status(SolutionStatus.INFEASIBLE)

    standard, cert = lp_to_standard(p)
    solution = standard_sol_pullback(cert, solve_standard(standard))
    if solution.is_optimal and not (
        is_lp_feasible(p, solution.point) and eval_lp_objective(p, solution.point) == solution.value
    ):
        raise SolverError(f"Pulled-back point {solution.point} does not check out against the program")
    logger.debug(
        f"simplex_solve: {p.n_variables} variables, {p.n_constraints} constraints -> "
        f"{solution.status.value}"
    )
    return solution
