"""
Exceptions raised by reductions and solution pullbacks.
"""

from typing import Any, Dict, Optional

from src.core.models import ReductionCertificate, ReductionKind


class ReductionError(Exception):
    """Base exception for reduction errors."""
    pass


class TrivialGameError(ReductionError):
    """Raised when the payoff matrix is zero: every mixed strategy is optimal."""
    pass


class NotAStrategyError(ReductionError):
    """Raised when a pulled-back point is not an optimal mixed strategy."""

    def __init__(self, condition: str, witness: Optional[Dict[str, Any]] = None):
        self.condition = condition
        self.witness = dict(witness or {})
        super().__init__(f"Not a strategy: violates {condition} ({self.witness})")


class ContractViolationError(ReductionError):
    """Raised when an input breaks a pullback's precondition."""
    pass


class CapExceededError(ReductionError):
    """Raised when the direct l1 reduction would exceed its function cap."""
    pass


class CertificateMismatchError(ReductionError):
    """Raised when a certificate does not match the solution handed to it."""
    pass


class ChainPullbackError(ReductionError):
    """Raised when one stage of a chained pullback fails."""

    def __init__(self, stage: int, kind: ReductionKind, cause: Exception):
        self.stage = stage
        self.kind = kind
        self.cause = cause
        super().__init__(f"Pullback stage {stage} ({kind.value}) failed: {cause}")


def require_kind(cert: ReductionCertificate, kind: ReductionKind) -> None:
    if cert.kind != kind:
        raise CertificateMismatchError(
            f"Expected a {kind.value} certificate, got {cert.kind.value}"
        )
