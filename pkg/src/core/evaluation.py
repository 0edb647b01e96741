"""
Exact evaluation helpers for affine functions, problem objectives and feasibility.
"""

from fractions import Fraction
from typing import Sequence

from src.core.models import (
    AffineFunction,
    ChebyshevProblem,
    DimensionError,
    L1Problem,
    LinearConstraint,
    LinearProgram,
    MatrixGame,
    Relation,
    StandardLP,
    Vector,
    VarSign,
    to_vector,
)


def _point(x: Sequence, arity: int) -> Vector:
    point = to_vector(x)
    if len(point) != arity:
        raise DimensionError(f"Point has {len(point)} coordinates, expected {arity}")
    return point


def eval_affine(f: AffineFunction, x: Sequence) -> Fraction:
    """
    Evaluate b_0 + sum_j c_j x_j exactly.

    Raises:
        DimensionError: If len(x) differs from the function's arity
    """
    point = _point(x, f.arity)
    return f.constant + sum((c * v for c, v in zip(f.coefficients, point)), Fraction(0))


def eval_cheb(p: ChebyshevProblem, x: Sequence) -> Fraction:
    """max_i |f_i(x)|"""
    point = _point(x, p.arity)
    return max(abs(eval_affine(f, point)) for f in p.functions)


def eval_l1(p: L1Problem, x: Sequence) -> Fraction:
    """sum_i |f_i(x)|"""
    point = _point(x, p.arity)
    return sum((abs(eval_affine(f, point)) for f in p.functions), Fraction(0))


def is_constraint_satisfied(constraint: LinearConstraint, x: Sequence) -> bool:
    lhs = eval_affine(constraint.lhs, x)
    rhs = eval_affine(constraint.rhs, x)
    if constraint.relation == Relation.LE:
        return lhs <= rhs
    if constraint.relation == Relation.GE:
        return lhs >= rhs
    return lhs == rhs


def eval_lp_objective(p: LinearProgram, x: Sequence) -> Fraction:
    return eval_affine(p.objective, x)


def is_lp_feasible(p: LinearProgram, x: Sequence) -> bool:
    point = _point(x, p.n_variables)
    if any(sign == VarSign.NONNEG and v < 0 for sign, v in zip(p.var_signs, point)):
        return False
    return all(is_constraint_satisfied(c, point) for c in p.constraints)


def eval_standard_objective(p: StandardLP, w: Sequence) -> Fraction:
    point = _point(w, p.n_cols)
    return sum((c * v for c, v in zip(p.c, point)), Fraction(0))


def is_standard_feasible(p: StandardLP, w: Sequence) -> bool:
    point = _point(w, p.n_cols)
    if any(v < 0 for v in point):
        return False
    return all(
        sum((a * v for a, v in zip(row, point)), Fraction(0)) <= bound
        for row, bound in zip(p.A, p.b)
    )


def game_payoff(g: MatrixGame, x: Sequence) -> Vector:
    """The column Mx."""
    point = _point(x, g.size)
    return tuple(sum((m * v for m, v in zip(row, point)), Fraction(0)) for row in g.M)
