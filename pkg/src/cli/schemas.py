"""
Pydantic schemas for problem documents.

Defines structural validation of the JSON exchange format. Rationals travel as
strings ("p/q" or an integer) and are converted to ``Fraction`` on validation;
type invariants (skew-symmetry, arity agreement) are checked later by the core
models.
"""

from fractions import Fraction
from typing import Annotated, Any, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field

from src.core.models import GameToChebVariant, ReductionKind, Relation, Sense, VarSign, to_rational


def _parse_rational(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"Expected a rational string such as \"1/3\", got {value!r}")
    return to_rational(value)


Rational = Annotated[Fraction, BeforeValidator(_parse_rational)]
RationalRow = List[Rational]


class DocumentModel(BaseModel):
    """Base schema: unknown keys are rejected."""
    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


# ===== Building blocks =====

class AffineDocument(DocumentModel):
    """constant + coefficients . x"""
    constant: Rational = Fraction(0)
    coefficients: RationalRow = Field(default_factory=list)


class ConstraintDocument(DocumentModel):
    """lhs <rel> rhs"""
    lhs: AffineDocument
    rel: Relation
    rhs: AffineDocument


# ===== Certificate Schemas =====

class VariableBlockDocument(DocumentModel):
    name: str = Field(..., min_length=1)
    start: int = Field(..., ge=0)
    stop: int = Field(..., ge=0)


class VariableMapDocument(DocumentModel):
    blocks: List[VariableBlockDocument] = Field(default_factory=list)
    splits: List[Tuple[int, Optional[int]]] = Field(default_factory=list)


class CertificateDocument(DocumentModel):
    """Reduction certificate; chains nest their stages."""
    kind: ReductionKind
    source_dims: Tuple[int, int]
    target_dims: Tuple[int, int]
    var_map: VariableMapDocument = Field(default_factory=VariableMapDocument)
    shift_c: Optional[Rational] = None
    scale_alpha: Optional[Rational] = None
    variant: Optional[GameToChebVariant] = None
    objective_constant: Optional[Rational] = None
    objective_negated: bool = False
    payoff: Optional[List[RationalRow]] = None
    stages: List["CertificateDocument"] = Field(default_factory=list)


CertificateDocument.model_rebuild()


# ===== Problem Schemas =====

class LPDocument(DocumentModel):
    """General linear program."""
    form: Literal["lp"]
    sense: Sense
    objective: AffineDocument
    constraints: List[ConstraintDocument] = Field(default_factory=list)
    var_signs: List[VarSign]
    certificate: Optional[CertificateDocument] = None


class StandardDocument(DocumentModel):
    """maximize c.w, A w <= b, w >= 0"""
    form: Literal["standard"]
    c: RationalRow
    A: List[RationalRow] = Field(default_factory=list)
    b: RationalRow = Field(default_factory=list)
    certificate: Optional[CertificateDocument] = None


class GameDocument(DocumentModel):
    """Skew-symmetric payoff matrix."""
    form: Literal["game"]
    M: List[RationalRow]
    certificate: Optional[CertificateDocument] = None


class ChebDocument(DocumentModel):
    """Minimize max |f_i|."""
    form: Literal["cheb"]
    functions: List[AffineDocument] = Field(..., min_length=1)
    certificate: Optional[CertificateDocument] = None


class L1Document(DocumentModel):
    """Minimize sum |f_i|."""
    form: Literal["l1"]
    functions: List[AffineDocument] = Field(..., min_length=1)
    certificate: Optional[CertificateDocument] = None


ProblemDocument = Annotated[
    Union[LPDocument, StandardDocument, GameDocument, ChebDocument, L1Document],
    Field(discriminator="form"),
]
