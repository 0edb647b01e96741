"""
Epigraph reductions of max-abs and sum-abs objectives to linear programs.

Both reductions bound every |f_i| by auxiliary variables t:
- Chebyshev: minimize t subject to -t <= f_i <= t (n+1 variables, 2m constraints)
- l1: minimize sum t_i subject to -t_i <= f_i <= t_i (m+n variables, 2m constraints)

The auxiliary variables are marked NONNEG; this is implied at feasibility.
"""

import logging
from fractions import Fraction
from typing import List, Tuple

from src.core.models import (
    AffineFunction,
    ChebyshevProblem,
    L1Problem,
    LinearConstraint,
    LinearProgram,
    ReductionCertificate,
    ReductionKind,
    Relation,
    Sense,
    Solution,
    SolutionStatus,
    VarSign,
    VariableBlock,
    VariableMap,
)
from src.reductions.errors import CertificateMismatchError, require_kind

logger = logging.getLogger(__name__)


def _band_constraints(f: AffineFunction, t: AffineFunction) -> List[LinearConstraint]:
    """-t <= f <= t as two constraints."""
    return [
        LinearConstraint(-t, Relation.LE, f),
        LinearConstraint(f, Relation.LE, t),
    ]


def cheb_to_lp(p: ChebyshevProblem) -> Tuple[LinearProgram, ReductionCertificate]:
    """
    Reduce a Chebyshev problem to an LP with one additional variable t.

    Args:
        p: Chebyshev problem with m functions in n variables

    Returns:
        Tuple of (LP over (x_1..x_n, t), certificate)
    """
    n, m = p.arity, p.size
    t = AffineFunction.variable(n, n + 1)

    constraints: List[LinearConstraint] = []
    for f in p.functions:
        constraints.extend(_band_constraints(f.extend(1), t))

    lp = LinearProgram(
        sense=Sense.MIN,
        objective=t,
        constraints=tuple(constraints),
        var_signs=(VarSign.FREE,) * n + (VarSign.NONNEG,),
    )
    cert = ReductionCertificate(
        kind=ReductionKind.CHEB_TO_LP,
        source_dims=(n, m),
        target_dims=(n + 1, 2 * m),
        var_map=VariableMap(blocks=(VariableBlock("x", 0, n), VariableBlock("t", n, n + 1))),
    )
    logger.debug(f"cheb_to_lp: {m} functions in {n} variables -> {n + 1} variables, {2 * m} constraints")
    return lp, cert


def _drop_auxiliary(cert: ReductionCertificate, s: Solution, bug_status: SolutionStatus) -> Solution:
    if not s.is_optimal:
        if s.status == bug_status:
            logger.warning(
                f"{cert.kind.value} pullback received {s.status.value}; "
                f"the emitted LP cannot be {s.status.value}, the solver is suspect"
            )
        return s

    if len(s.point) != cert.target_dims[0]:
        raise CertificateMismatchError(
            f"Solution has {len(s.point)} coordinates, certificate expects {cert.target_dims[0]}"
        )
    x = cert.var_map.block("x")
    return Solution.optimal(s.point[x.start:x.stop], s.value)


def lp_sol_to_cheb_sol(cert: ReductionCertificate, s: Solution) -> Solution:
    """Drop t; the optimal t equals the Chebyshev optimum, so the value is unchanged."""
    require_kind(cert, ReductionKind.CHEB_TO_LP)
    return _drop_auxiliary(cert, s, SolutionStatus.INFEASIBLE)


def l1_to_lp(p: L1Problem) -> Tuple[LinearProgram, ReductionCertificate]:
    """
    Reduce an l1 problem to the LP  sum t_i -> min, -t_i <= f_i <= t_i.

    Args:
        p: l1 problem with m functions in n variables

    Returns:
        Tuple of (LP over (x_1..x_n, t_1..t_m), certificate)
    """
    n, m = p.arity, p.size
    width = n + m

    constraints: List[LinearConstraint] = []
    for i, f in enumerate(p.functions):
        constraints.extend(_band_constraints(f.extend(m), AffineFunction.variable(n + i, width)))

    objective = AffineFunction(Fraction(0), (Fraction(0),) * n + (Fraction(1),) * m)
    lp = LinearProgram(
        sense=Sense.MIN,
        objective=objective,
        constraints=tuple(constraints),
        var_signs=(VarSign.FREE,) * n + (VarSign.NONNEG,) * m,
    )
    cert = ReductionCertificate(
        kind=ReductionKind.L1_TO_LP,
        source_dims=(n, m),
        target_dims=(width, 2 * m),
        var_map=VariableMap(blocks=(VariableBlock("x", 0, n), VariableBlock("t", n, width))),
    )
    logger.debug(f"l1_to_lp: {m} functions in {n} variables -> {width} variables, {2 * m} constraints")
    return lp, cert


def lp_sol_to_l1_sol(cert: ReductionCertificate, s: Solution) -> Solution:
    """Drop the t-block; the value is unchanged."""
    require_kind(cert, ReductionKind.L1_TO_LP)
    return _drop_auxiliary(cert, s, SolutionStatus.UNBOUNDED)
