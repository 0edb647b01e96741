"""
Standardization of general LPs into  maximize c.w, A w <= b, w >= 0.

Rewrite rules:
- MIN objectives are negated to MAX; the objective constant moves to the certificate
- EQ constraints split into a <= row followed by a >= row
- GE rows are negated into LE rows
- every FREE variable is written w = u - v with u, v >= 0; NONNEG variables stay single
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.core.models import (
    DimensionError,
    LinearProgram,
    ReductionCertificate,
    ReductionKind,
    Relation,
    Sense,
    Solution,
    StandardLP,
    VarSign,
    VariableBlock,
    VariableMap,
    Vector,
)
from src.reductions.errors import CertificateMismatchError, require_kind

logger = logging.getLogger(__name__)

Split = Tuple[int, Optional[int]]


def _column_splits(var_signs: Sequence[VarSign]) -> List[Split]:
    splits: List[Split] = []
    column = 0
    for sign in var_signs:
        if sign == VarSign.NONNEG:
            splits.append((column, None))
            column += 1
        else:
            splits.append((column, column + 1))
            column += 2
    return splits


def _expand(coefficients: Vector, splits: Sequence[Split], width: int) -> Vector:
    row = [Fraction(0)] * width
    for coefficient, (u, v) in zip(coefficients, splits):
        row[u] += coefficient
        if v is not None:
            row[v] -= coefficient
    return tuple(row)


def lp_to_standard(p: LinearProgram) -> Tuple[StandardLP, ReductionCertificate]:
    """
    Rewrite a general LP into standard form.

    Args:
        p: Linear program with at least one variable

    Returns:
        Tuple of (StandardLP, certificate holding the split map and objective bookkeeping)

    Raises:
        DimensionError: If the program has no variables
    """
    n = p.n_variables
    if n < 1:
        raise DimensionError("Cannot standardize a program without variables")

    splits = _column_splits(p.var_signs)
    width = sum(1 if v is None else 2 for _, v in splits)

    rows: List[Vector] = []
    bounds: List[Fraction] = []
    for constraint in p.constraints:
        # lhs - rhs = a.x + d  <rel>  0
        difference = constraint.lhs - constraint.rhs
        a = _expand(difference.coefficients, splits, width)
        bound = -difference.constant
        if constraint.relation in (Relation.LE, Relation.EQ):
            rows.append(a)
            bounds.append(bound)
        if constraint.relation in (Relation.GE, Relation.EQ):
            rows.append(tuple(-entry for entry in a))
            bounds.append(-bound)

    negated = p.sense == Sense.MIN
    objective = p.objective.scale(-1) if negated else p.objective
    standard = StandardLP(
        c=_expand(objective.coefficients, splits, width),
        A=tuple(rows),
        b=tuple(bounds),
    )
    cert = ReductionCertificate(
        kind=ReductionKind.LP_TO_STANDARD,
        source_dims=(n, p.n_constraints),
        target_dims=(width, len(bounds)),
        var_map=VariableMap(blocks=(VariableBlock("w", 0, width),), splits=tuple(splits)),
        objective_constant=p.objective.constant,
        objective_negated=negated,
    )
    logger.debug(
        f"lp_to_standard: {n} variables, {p.n_constraints} constraints -> "
        f"{width} variables, {len(bounds)} rows"
    )
    return standard, cert


def standard_sol_pullback(cert: ReductionCertificate, s: Solution) -> Solution:
    """
    Recombine u - v into free variables and restore the objective sign and constant.

    Non-optimal statuses pass through unchanged.
    """
    require_kind(cert, ReductionKind.LP_TO_STANDARD)
    if not s.is_optimal:
        return s
    if len(s.point) != cert.target_dims[0]:
        raise CertificateMismatchError(
            f"Solution has {len(s.point)} coordinates, certificate expects {cert.target_dims[0]}"
        )

    point = tuple(
        s.point[u] - (s.point[v] if v is not None else Fraction(0))
        for u, v in cert.var_map.splits
    )
    value = -s.value if cert.objective_negated else s.value
    value += cert.objective_constant or Fraction(0)
    return Solution.optimal(point, value)
