"""Core module - exact value types, evaluation helpers and settings."""

from src.core.config import Settings, get_settings, reset_settings
from src.core.evaluation import (
    eval_affine,
    eval_cheb,
    eval_l1,
    eval_lp_objective,
    eval_standard_objective,
    game_payoff,
    is_lp_feasible,
    is_standard_feasible,
)
from src.core.models import (
    AffineFunction,
    ChebyshevProblem,
    DimensionError,
    GameToChebVariant,
    InvariantViolation,
    L1Problem,
    LinearConstraint,
    LinearProgram,
    MatrixGame,
    Rational,
    ReductionCertificate,
    ReductionKind,
    Relation,
    Sense,
    Solution,
    SolutionStatus,
    StandardLP,
    Strategy,
    VarSign,
    VariableBlock,
    VariableMap,
    to_rational,
)

__all__ = [
    # Config
    "Settings",
    "get_settings",
    "reset_settings",
    # Evaluation
    "eval_affine",
    "eval_cheb",
    "eval_l1",
    "eval_lp_objective",
    "eval_standard_objective",
    "game_payoff",
    "is_lp_feasible",
    "is_standard_feasible",
    # Models
    "AffineFunction",
    "ChebyshevProblem",
    "L1Problem",
    "LinearConstraint",
    "LinearProgram",
    "MatrixGame",
    "Rational",
    "ReductionCertificate",
    "Solution",
    "StandardLP",
    "Strategy",
    "VariableBlock",
    "VariableMap",
    "to_rational",
    # Enums
    "GameToChebVariant",
    "ReductionKind",
    "Relation",
    "Sense",
    "SolutionStatus",
    "VarSign",
    # Errors
    "DimensionError",
    "InvariantViolation",
]
