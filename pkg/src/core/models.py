"""
Value types for every problem form handled by the library.

This module defines immutable, exact-arithmetic models for:
- Affine functions and linear constraints
- General and standard-form linear programs
- Skew-symmetric matrix games and their mixed strategies
- Chebyshev (max-abs) and l1 (sum-abs) approximation problems
- Solutions and reduction certificates

All numbers are ``fractions.Fraction``; floats are rejected on construction.
"""

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]
Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]

_RATIONAL_PATTERN = re.compile(r"-?\d+(?:/\d+)?")


class DimensionError(ValueError):
    """Raised when vector, matrix or arity dimensions disagree."""
    pass


class InvariantViolation(ValueError):
    """Raised when a value breaks a type invariant (e.g. a non-skew payoff matrix)."""

    def __init__(self, message: str, indices: Optional[Sequence] = None):
        super().__init__(message)
        self.indices = list(indices) if indices is not None else []


def to_rational(value: RationalLike) -> Fraction:
    """
    Convert an integer, Fraction or "p/q" string into an exact Fraction.

    Args:
        value: Value to convert. Floats and booleans are rejected.

    Returns:
        Fraction in lowest terms

    Raises:
        TypeError: If the value is inexact or of an unsupported type
        InvariantViolation: If a string is malformed or has a zero denominator
    """
    if isinstance(value, bool):
        raise TypeError(f"Booleans are not rationals: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_PATTERN.fullmatch(value):
            raise InvariantViolation(f"Malformed rational: {value!r}")
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise InvariantViolation(f"Zero denominator in rational: {value!r}")
    raise TypeError(f"Inexact or unsupported number: {value!r}")


def to_vector(values: Iterable[RationalLike]) -> Vector:
    """Convert an iterable of rational-like values into a tuple of Fractions."""
    return tuple(to_rational(v) for v in values)


def to_matrix(rows: Iterable[Iterable[RationalLike]]) -> Matrix:
    """Convert nested iterables into a row-major tuple-of-tuples of Fractions."""
    return tuple(to_vector(row) for row in rows)


# ===== Enumerations =====

class Relation(str, Enum):
    """Relation of a linear constraint"""
    LE = "<="
    GE = ">="
    EQ = "="


class Sense(str, Enum):
    """Optimization direction"""
    MIN = "min"
    MAX = "max"


class VarSign(str, Enum):
    """Sign restriction of an LP variable"""
    FREE = "free"
    NONNEG = "nonneg"


class SolutionStatus(str, Enum):
    """Outcome of a solve"""
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    NO_FINITE_OPTIMUM = "no_finite_optimum"


class ReductionKind(str, Enum):
    """Reduction recorded by a certificate"""
    CHEB_TO_LP = "cheb_to_lp"
    L1_TO_LP = "l1_to_lp"
    LP_TO_STANDARD = "lp_to_standard"
    STANDARD_TO_GAME = "standard_to_game"
    GAME_TO_CHEB = "game_to_cheb"
    L1_TO_CHEB_LINEAR = "l1_to_cheb_linear"
    LP_TO_CHEB = "lp_to_cheb"


class GameToChebVariant(str, Enum):
    """Form of the unconstrained game-to-Chebyshev reduction"""
    LITERAL = "literal"
    CORRECTED = "corrected"


# ===== Affine functions and constraints =====

@dataclass(frozen=True)
class AffineFunction:
    """constant + sum_j coefficients[j] * x[j]"""
    constant: Fraction
    coefficients: Vector = ()

    def __post_init__(self):
        object.__setattr__(self, "constant", to_rational(self.constant))
        object.__setattr__(self, "coefficients", to_vector(self.coefficients))

    @property
    def arity(self) -> int:
        return len(self.coefficients)

    @classmethod
    def zero(cls, arity: int) -> "AffineFunction":
        return cls(Fraction(0), (Fraction(0),) * arity)

    @classmethod
    def variable(cls, index: int, arity: int, coefficient: RationalLike = 1) -> "AffineFunction":
        """The function coefficient * x[index] in ``arity`` variables."""
        if not 0 <= index < arity:
            raise DimensionError(f"Variable index {index} out of range for arity {arity}")
        coefficients = [Fraction(0)] * arity
        coefficients[index] = to_rational(coefficient)
        return cls(Fraction(0), tuple(coefficients))

    def _check_arity(self, other: "AffineFunction") -> None:
        if self.arity != other.arity:
            raise DimensionError(f"Arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other: "AffineFunction") -> "AffineFunction":
        self._check_arity(other)
        return AffineFunction(
            self.constant + other.constant,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __neg__(self) -> "AffineFunction":
        return self.scale(-1)

    def __sub__(self, other: "AffineFunction") -> "AffineFunction":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "AffineFunction":
        factor = to_rational(factor)
        return AffineFunction(
            self.constant * factor,
            tuple(c * factor for c in self.coefficients),
        )

    def extend(self, extra: int) -> "AffineFunction":
        """Embed into a larger variable space by appending ``extra`` zero coefficients."""
        return AffineFunction(self.constant, self.coefficients + (Fraction(0),) * extra)


@dataclass(frozen=True)
class LinearConstraint:
    """lhs <relation> rhs for two affine functions of equal arity"""
    lhs: AffineFunction
    relation: Relation
    rhs: AffineFunction

    def __post_init__(self):
        object.__setattr__(self, "relation", Relation(self.relation))
        if self.lhs.arity != self.rhs.arity:
            raise DimensionError(
                f"Constraint sides differ in arity: {self.lhs.arity} vs {self.rhs.arity}"
            )

    @property
    def arity(self) -> int:
        return self.lhs.arity


# ===== Linear programs =====

@dataclass(frozen=True)
class LinearProgram:
    """Optimize an affine objective subject to a finite list of linear constraints."""
    sense: Sense
    objective: AffineFunction
    constraints: Tuple[LinearConstraint, ...]
    var_signs: Tuple[VarSign, ...]

    def __post_init__(self):
        object.__setattr__(self, "sense", Sense(self.sense))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        object.__setattr__(self, "var_signs", tuple(VarSign(s) for s in self.var_signs))

        n = self.objective.arity
        if len(self.var_signs) != n:
            raise DimensionError(f"Expected {n} variable signs, got {len(self.var_signs)}")
        for index, constraint in enumerate(self.constraints):
            if constraint.arity != n:
                raise DimensionError(
                    f"Constraint {index} has arity {constraint.arity}, expected {n}"
                )

    @property
    def n_variables(self) -> int:
        return self.objective.arity

    @property
    def n_constraints(self) -> int:
        return len(self.constraints)


@dataclass(frozen=True)
class StandardLP:
    """maximize c.w subject to A w <= b, w >= 0"""
    c: Vector
    A: Matrix
    b: Vector

    def __post_init__(self):
        object.__setattr__(self, "c", to_vector(self.c))
        object.__setattr__(self, "A", to_matrix(self.A))
        object.__setattr__(self, "b", to_vector(self.b))

        if len(self.c) < 1:
            raise DimensionError("Standard form needs at least one variable")
        if len(self.A) != len(self.b):
            raise DimensionError(f"A has {len(self.A)} rows but b has {len(self.b)} entries")
        for i, row in enumerate(self.A):
            if len(row) != len(self.c):
                raise DimensionError(f"Row {i} of A has {len(row)} entries, expected {len(self.c)}")

    @property
    def n_rows(self) -> int:
        return len(self.b)

    @property
    def n_cols(self) -> int:
        return len(self.c)


# ===== Games =====

@dataclass(frozen=True)
class MatrixGame:
    """Symmetric zero-sum game with skew-symmetric payoff matrix M = -M^T."""
    M: Matrix

    def __post_init__(self):
        object.__setattr__(self, "M", to_matrix(self.M))

        size = len(self.M)
        if size < 1:
            raise DimensionError("A game needs at least one pure strategy")
        for i, row in enumerate(self.M):
            if len(row) != size:
                raise DimensionError(f"Row {i} has {len(row)} entries, expected {size}")

        offending = [
            (i, j)
            for i in range(size)
            for j in range(i, size)
            if self.M[i][j] != -self.M[j][i]
        ]
        if offending:
            i, j = offending[0]
            raise InvariantViolation(
                f"Payoff matrix is not skew-symmetric: M[{i}][{j}]={self.M[i][j]}, "
                f"M[{j}][{i}]={self.M[j][i]}",
                indices=offending,
            )

    @property
    def size(self) -> int:
        return len(self.M)

    @property
    def max_entry(self) -> Fraction:
        return max(max(row) for row in self.M)

    @property
    def is_zero(self) -> bool:
        return all(entry == 0 for row in self.M for entry in row)


@dataclass(frozen=True)
class Strategy:
    """Mixed strategy: nonnegative entries summing to exactly one."""
    x: Vector

    def __post_init__(self):
        object.__setattr__(self, "x", to_vector(self.x))

        if not self.x:
            raise DimensionError("A strategy needs at least one entry")
        negative = [i for i, value in enumerate(self.x) if value < 0]
        if negative:
            raise InvariantViolation(
                f"Strategy has negative entries at {negative}", indices=negative
            )
        total = sum(self.x, Fraction(0))
        if total != 1:
            raise InvariantViolation(f"Strategy entries sum to {total}, not 1")

    @classmethod
    def uniform(cls, size: int) -> "Strategy":
        return cls((Fraction(1, size),) * size)

    def __len__(self) -> int:
        return len(self.x)


# ===== Approximation problems =====

def _check_function_list(functions: Tuple[AffineFunction, ...], label: str) -> None:
    if not functions:
        raise DimensionError(f"{label} problem needs at least one function")
    arity = functions[0].arity
    for i, f in enumerate(functions):
        if f.arity != arity:
            raise DimensionError(f"Function {i} has arity {f.arity}, expected {arity}")


@dataclass(frozen=True)
class ChebyshevProblem:
    """Minimize max_i |f_i(x)|."""
    functions: Tuple[AffineFunction, ...]

    def __post_init__(self):
        object.__setattr__(self, "functions", tuple(self.functions))
        _check_function_list(self.functions, "Chebyshev")

    @property
    def arity(self) -> int:
        return self.functions[0].arity

    @property
    def size(self) -> int:
        return len(self.functions)


@dataclass(frozen=True)
class L1Problem:
    """Minimize sum_i |f_i(x)|."""
    functions: Tuple[AffineFunction, ...]

    def __post_init__(self):
        object.__setattr__(self, "functions", tuple(self.functions))
        _check_function_list(self.functions, "l1")

    @property
    def arity(self) -> int:
        return self.functions[0].arity

    @property
    def size(self) -> int:
        return len(self.functions)


# ===== Solutions and certificates =====

@dataclass(frozen=True)
class Solution:
    """Solve outcome; point and value are present exactly when status is OPTIMAL."""
    status: SolutionStatus
    point: Optional[Vector] = None
    value: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "status", SolutionStatus(self.status))
        if self.point is not None:
            object.__setattr__(self, "point", to_vector(self.point))
        if self.value is not None:
            object.__setattr__(self, "value", to_rational(self.value))

        has_payload = self.point is not None and self.value is not None
        if (self.status == SolutionStatus.OPTIMAL) != has_payload:
            raise InvariantViolation(
                f"Status {self.status.value} inconsistent with point/value presence"
            )
        if not has_payload and (self.point is not None or self.value is not None):
            raise InvariantViolation("Point and value must be given together")

    @classmethod
    def optimal(cls, point: Iterable[RationalLike], value: RationalLike) -> "Solution":
        return cls(SolutionStatus.OPTIMAL, to_vector(point), to_rational(value))

    @classmethod
    def of_status(cls, status: SolutionStatus) -> "Solution":
        return cls(SolutionStatus(status))

    @property
    def is_optimal(self) -> bool:
        return self.status == SolutionStatus.OPTIMAL


@dataclass(frozen=True)
class VariableBlock:
    """Half-open index range [start, stop) of target variables with a role name."""
    name: str
    start: int
    stop: int

    @property
    def width(self) -> int:
        return self.stop - self.start


@dataclass(frozen=True)
class VariableMap:
    """
    How target variables partition into blocks.

    ``blocks`` names contiguous ranges (x, t, y, w, ...). ``splits`` holds, for
    each source variable of an LP standardization, its target column and, for a
    free variable written u - v, the column of v.
    """
    blocks: Tuple[VariableBlock, ...] = ()
    splits: Tuple[Tuple[int, Optional[int]], ...] = ()

    def block(self, name: str) -> VariableBlock:
        for block in self.blocks:
            if block.name == name:
                return block
        raise KeyError(f"No variable block named {name!r}")


@dataclass(frozen=True)
class ReductionCertificate:
    """
    Metadata recorded by a reduction so target solutions can be pulled back exactly.

    Dimensions are (variables, functions-or-constraints) pairs. ``shift_c`` is the
    additive shift applied to the payoff matrix, ``scale_alpha`` the factor the
    matrix was normalized by. ``payoff`` keeps the source game matrix where a
    pullback has to check optimality. Composite certificates list their
    ``stages`` in application order.
    """
    kind: ReductionKind
    source_dims: Tuple[int, int]
    target_dims: Tuple[int, int]
    var_map: VariableMap = VariableMap()
    shift_c: Optional[Fraction] = None
    scale_alpha: Optional[Fraction] = None
    variant: Optional[GameToChebVariant] = None
    objective_constant: Optional[Fraction] = None
    objective_negated: bool = False
    payoff: Optional[Matrix] = None
    stages: Tuple["ReductionCertificate", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", ReductionKind(self.kind))
        object.__setattr__(self, "source_dims", tuple(self.source_dims))
        object.__setattr__(self, "target_dims", tuple(self.target_dims))
        object.__setattr__(self, "stages", tuple(self.stages))
        if self.variant is not None:
            object.__setattr__(self, "variant", GameToChebVariant(self.variant))
        for name in ("shift_c", "scale_alpha", "objective_constant"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, to_rational(value))
        if self.payoff is not None:
            object.__setattr__(self, "payoff", to_matrix(self.payoff))
        self._check_layout()

    def _check_layout(self):
        """Every field the kind's pullback reads is present and in range."""
        kind = self.kind.value
        width = self.target_dims[0]
        if self.kind in _CHAIN_STAGES:
            stage_kinds = tuple(stage.kind for stage in self.stages)
            if stage_kinds != _CHAIN_STAGES[self.kind]:
                expected = ", ".join(k.value for k in _CHAIN_STAGES[self.kind])
                raise InvariantViolation(f"{kind} certificate needs stages [{expected}]")
            return
        if self.stages:
            raise InvariantViolation(f"{kind} certificate cannot have stages")

        names = [block.name for block in self.var_map.blocks]
        for name in _REQUIRED_BLOCKS[self.kind]:
            if name not in names:
                raise InvariantViolation(f"{kind} certificate has no variable block {name!r}")
        for i, block in enumerate(self.var_map.blocks):
            if not 0 <= block.start <= block.stop <= width:
                raise InvariantViolation(
                    f"Block {block.name!r} [{block.start}, {block.stop}) is outside {width} target variables", [i]
                )

        if self.kind == ReductionKind.LP_TO_STANDARD:
            if len(self.var_map.splits) != self.source_dims[0]:
                raise InvariantViolation(
                    f"{kind} certificate needs one split per source variable, "
                    f"got {len(self.var_map.splits)} for {self.source_dims[0]}"
                )
            for i, (u, v) in enumerate(self.var_map.splits):
                if not 0 <= u < width or (v is not None and not 0 <= v < width):
                    raise InvariantViolation(f"Split {i} points outside {width} target variables", [i])

        if self.kind in (ReductionKind.STANDARD_TO_GAME, ReductionKind.GAME_TO_CHEB):
            if self.payoff is None:
                raise InvariantViolation(f"{kind} certificate has no payoff matrix")
            if len(self.payoff) != width or any(len(row) != width for row in self.payoff):
                raise InvariantViolation(f"{kind} payoff matrix is not {width}x{width}")
        if self.kind == ReductionKind.GAME_TO_CHEB and self.variant is None:
            raise InvariantViolation(f"{kind} certificate has no variant")

    @property
    def is_chain(self) -> bool:
        return bool(self.stages)


_CHAIN_STAGES = {
    ReductionKind.LP_TO_CHEB: (
        ReductionKind.LP_TO_STANDARD,
        ReductionKind.STANDARD_TO_GAME,
        ReductionKind.GAME_TO_CHEB,
    ),
    ReductionKind.L1_TO_CHEB_LINEAR: (
        ReductionKind.L1_TO_LP,
        ReductionKind.LP_TO_STANDARD,
        ReductionKind.STANDARD_TO_GAME,
        ReductionKind.GAME_TO_CHEB,
    ),
}

_REQUIRED_BLOCKS = {
    ReductionKind.CHEB_TO_LP: ("x", "t"),
    ReductionKind.L1_TO_LP: ("x", "t"),
    ReductionKind.LP_TO_STANDARD: (),
    ReductionKind.STANDARD_TO_GAME: ("y", "w", "t"),
    ReductionKind.GAME_TO_CHEB: ("x",),
}
