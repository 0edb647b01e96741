"""
Seeded random instances for the verification suites.

All generators take a ``numpy.random.Generator`` (``default_rng(seed)``) and
return exact-rational problems, so a fixed seed reproduces every instance.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from src.core.evaluation import eval_cheb, eval_l1
from src.core.models import (
    AffineFunction,
    ChebyshevProblem,
    L1Problem,
    LinearConstraint,
    LinearProgram,
    MatrixGame,
    Relation,
    Sense,
    SolutionStatus,
    VarSign,
    Vector,
)
from src.reductions.chains import l1_to_cheb_direct

logger = logging.getLogger(__name__)

# Integer grid for generated coefficients
COEFFICIENT_BOUND = 3
# Box that keeps OPTIMAL instances bounded
BOX_BOUND = 5


def random_rational(rng: np.random.Generator, bound: int = 5, max_denominator: int = 4) -> Fraction:
    denominator = int(rng.integers(1, max_denominator + 1))
    numerator = int(rng.integers(-bound * denominator, bound * denominator + 1))
    return Fraction(numerator, denominator)


def random_point(rng: np.random.Generator, n: int) -> Vector:
    return tuple(random_rational(rng) for _ in range(n))


def _random_integers(rng: np.random.Generator, size: int, bound: int = COEFFICIENT_BOUND) -> Vector:
    return tuple(Fraction(int(v)) for v in rng.integers(-bound, bound + 1, size=size))


def random_affine(rng: np.random.Generator, n: int) -> AffineFunction:
    return AffineFunction(random_rational(rng), _random_integers(rng, n))


def random_skew_game(rng: np.random.Generator, size: int, grid: int = COEFFICIENT_BOUND) -> MatrixGame:
    """
    A nonzero skew-symmetric game M = U - U^T with U uniform on an integer grid.

    Raises:
        ValueError: If size < 2 (every 1x1 skew matrix is zero)
    """
    if size < 2:
        raise ValueError("A nonzero skew-symmetric game needs size >= 2")
    while True:
        u = rng.integers(-grid, grid + 1, size=(size, size))
        m = u - u.T
        if np.any(m != 0):
            return MatrixGame(tuple(tuple(Fraction(int(v)) for v in row) for row in m))


def random_cheb_problem(rng: np.random.Generator, m: int, n: int) -> ChebyshevProblem:
    return ChebyshevProblem(tuple(random_affine(rng, n) for _ in range(m)))


def random_l1_problem(rng: np.random.Generator, m: int, n: int) -> L1Problem:
    return L1Problem(tuple(random_affine(rng, n) for _ in range(m)))


def _constant(value: Fraction, n: int) -> AffineFunction:
    return AffineFunction(value, (Fraction(0),) * n)


def _through_point(
    rng: np.random.Generator,
    anchor: Vector,
    count: int,
    relations: Tuple[Relation, ...],
) -> List[LinearConstraint]:
    """Constraints that the anchor point satisfies."""
    n = len(anchor)
    constraints: List[LinearConstraint] = []
    for _ in range(count):
        a = _random_integers(rng, n)
        level = sum((x * y for x, y in zip(a, anchor)), Fraction(0))
        relation = relations[int(rng.integers(len(relations)))]
        slack = Fraction(int(rng.integers(0, 3)))
        if relation == Relation.LE:
            rhs = level + slack
        elif relation == Relation.GE:
            rhs = level - slack
        else:
            rhs = level
        constraints.append(LinearConstraint(AffineFunction(Fraction(0), a), relation, _constant(rhs, n)))
    return constraints


def random_lp(
    rng: np.random.Generator,
    n_variables: int,
    n_constraints: int,
    status: Optional[SolutionStatus] = None,
) -> LinearProgram:
    """
    A random LP, optionally built to have a known status.

    - OPTIMAL: constraints pass through a random anchor point, plus a box
      |x_j| <= BOX_BOUND (counted in n_constraints when room allows)
    - UNBOUNDED: nonnegative variables, origin feasible, and a direction e_0
      that every row allows and the objective improves along
    - INFEASIBLE: a pair a.x <= beta, a.x >= beta + 1
    - None: unstructured rows; the status is whatever it turns out to be
    """
    n = n_variables
    sense = Sense.MAX if rng.integers(2) else Sense.MIN
    objective = AffineFunction(Fraction(int(rng.integers(-2, 3))), _random_integers(rng, n))

    if status == SolutionStatus.UNBOUNDED:
        constraints = []
        for _ in range(n_constraints):
            a = list(_random_integers(rng, n))
            a[0] = -abs(a[0])
            b = Fraction(int(rng.integers(0, 5)))
            constraints.append(LinearConstraint(AffineFunction(Fraction(0), tuple(a)), Relation.LE, _constant(b, n)))
        coefficients = list(objective.coefficients)
        coefficients[0] = Fraction(int(rng.integers(1, 4)))
        if sense == Sense.MIN:
            coefficients[0] = -coefficients[0]
        objective = AffineFunction(objective.constant, tuple(coefficients))
        return LinearProgram(sense, objective, tuple(constraints), (VarSign.NONNEG,) * n)

    var_signs = tuple(VarSign.FREE if rng.integers(2) else VarSign.NONNEG for _ in range(n))

    if status == SolutionStatus.INFEASIBLE:
        a = _random_integers(rng, n)
        if not any(a):
            a = (Fraction(1),) + a[1:]
        beta = Fraction(int(rng.integers(-3, 4)))
        lhs = AffineFunction(Fraction(0), a)
        constraints = [
            LinearConstraint(lhs, Relation.LE, _constant(beta, n)),
            LinearConstraint(lhs, Relation.GE, _constant(beta + 1, n)),
        ]
        extra = max(0, n_constraints - 2)
        constraints += _through_point(rng, random_point(rng, n), extra, (Relation.LE, Relation.GE))
        return LinearProgram(sense, objective, tuple(constraints), var_signs)

    if status == SolutionStatus.OPTIMAL:
        anchor = tuple(
            abs(v) if s == VarSign.NONNEG else v
            for v, s in zip((random_rational(rng, bound=BOX_BOUND - 1) for _ in range(n)), var_signs)
        )
        box: List[LinearConstraint] = []
        for j, sign in enumerate(var_signs):
            x_j = AffineFunction.variable(j, n)
            box.append(LinearConstraint(x_j, Relation.LE, _constant(Fraction(BOX_BOUND), n)))
            if sign == VarSign.FREE:
                box.append(LinearConstraint(x_j, Relation.GE, _constant(Fraction(-BOX_BOUND), n)))
        rest = max(0, n_constraints - len(box))
        constraints = box + _through_point(rng, anchor, rest, (Relation.LE, Relation.GE, Relation.EQ))
        return LinearProgram(sense, objective, tuple(constraints), var_signs)

    constraints = [
        LinearConstraint(
            AffineFunction(Fraction(0), _random_integers(rng, n)),
            (Relation.LE, Relation.GE)[int(rng.integers(2))],
            _constant(Fraction(int(rng.integers(-4, 5))), n),
        )
        for _ in range(n_constraints)
    ]
    return LinearProgram(sense, objective, tuple(constraints), var_signs)


def l1_cheb_pointwise_check(p: L1Problem, trials: int, seed: int) -> bool:
    """
    Compare sum |f_i| with the direct sign-pattern Chebyshev objective at random points.

    Raises:
        CapExceededError: If p has more functions than the direct reduction accepts
    """
    rng = np.random.default_rng(seed)
    direct = l1_to_cheb_direct(p)
    for _ in range(trials):
        x = random_point(rng, p.arity)
        if eval_l1(p, x) != eval_cheb(direct, x):
            logger.error(f"Pointwise l1/Chebyshev mismatch at {x}")
            return False
    return True
