"""
JSON serialization of problems, certificates and solutions.

This module handles:
- Parsing a document into a domain problem (plus its optional certificate)
- Canonical emission: fixed key order, rationals in lowest terms
- Emission of solve results

parse_problem(emit_problem(p)) == p for every problem, and emitting a parsed
document yields its canonical form.
"""

import json
import logging
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import TypeAdapter, ValidationError

from src.cli.schemas import (
    AffineDocument,
    CertificateDocument,
    ChebDocument,
    GameDocument,
    L1Document,
    LPDocument,
    ProblemDocument,
    StandardDocument,
)
from src.core.models import (
    AffineFunction,
    ChebyshevProblem,
    L1Problem,
    LinearConstraint,
    LinearProgram,
    MatrixGame,
    ReductionCertificate,
    Solution,
    StandardLP,
    Strategy,
    VariableBlock,
    VariableMap,
)

logger = logging.getLogger(__name__)

Problem = Union[LinearProgram, StandardLP, MatrixGame, ChebyshevProblem, L1Problem]

FORMS = {
    LinearProgram: "lp",
    StandardLP: "standard",
    MatrixGame: "game",
    ChebyshevProblem: "cheb",
    L1Problem: "l1",
}

_problem_adapter: TypeAdapter = TypeAdapter(ProblemDocument)


class ParseError(Exception):
    """Raised when a document is not valid JSON or does not match the schema."""

    def __init__(self, position: Union[int, str], message: str):
        self.position = position
        self.message = message
        super().__init__(f"Parse error at {position}: {message}")


# ===== Parsing =====

def _affine(doc: AffineDocument) -> AffineFunction:
    return AffineFunction(doc.constant, tuple(doc.coefficients))


def _certificate(doc: Optional[CertificateDocument]) -> Optional[ReductionCertificate]:
    if doc is None:
        return None
    return ReductionCertificate(
        kind=doc.kind,
        source_dims=doc.source_dims,
        target_dims=doc.target_dims,
        var_map=VariableMap(
            blocks=tuple(VariableBlock(b.name, b.start, b.stop) for b in doc.var_map.blocks),
            splits=tuple((u, v) for u, v in doc.var_map.splits),
        ),
        shift_c=doc.shift_c,
        scale_alpha=doc.scale_alpha,
        variant=doc.variant,
        objective_constant=doc.objective_constant,
        objective_negated=doc.objective_negated,
        payoff=doc.payoff,
        stages=tuple(_certificate(stage) for stage in doc.stages),
    )


def _problem(doc: Any) -> Problem:
    if isinstance(doc, LPDocument):
        return LinearProgram(
            sense=doc.sense,
            objective=_affine(doc.objective),
            constraints=tuple(
                LinearConstraint(_affine(c.lhs), c.rel, _affine(c.rhs)) for c in doc.constraints
            ),
            var_signs=tuple(doc.var_signs),
        )
    if isinstance(doc, StandardDocument):
        return StandardLP(c=doc.c, A=doc.A, b=doc.b)
    if isinstance(doc, GameDocument):
        return MatrixGame(doc.M)
    if isinstance(doc, ChebDocument):
        return ChebyshevProblem(tuple(_affine(f) for f in doc.functions))
    if isinstance(doc, L1Document):
        return L1Problem(tuple(_affine(f) for f in doc.functions))
    raise ParseError("$", f"Unsupported document {type(doc).__name__}")


def parse_document(data: Union[bytes, str]) -> Tuple[Problem, Optional[ReductionCertificate]]:
    """
    Parse a problem document and its embedded certificate, if any.

    Args:
        data: UTF-8 JSON document

    Returns:
        Tuple of (problem, certificate or None)

    Raises:
        ParseError: On malformed JSON (character position) or schema mismatch (JSON path)
        InvariantViolation: If the problem breaks a type invariant (e.g. non-skew matrix)
            or the certificate lacks a field its kind needs
        DimensionError: If sizes disagree
    """
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.pos, exc.msg)
    except UnicodeDecodeError as exc:
        raise ParseError(exc.start, "Document is not valid UTF-8")

    try:
        doc = _problem_adapter.validate_python(raw)
    except ValidationError as exc:
        first = exc.errors()[0]
        path = ".".join(str(part) for part in first["loc"]) or "$"
        raise ParseError(path, first["msg"])

    problem = _problem(doc)
    logger.debug(f"Parsed {doc.form} document")
    return problem, _certificate(doc.certificate)


def parse_problem(data: Union[bytes, str]) -> Problem:
    """Parse a problem document, ignoring any embedded certificate."""
    return parse_document(data)[0]


# ===== Emission =====

def _row(values) -> List[str]:
    return [str(v) for v in values]


def _affine_doc(f: AffineFunction) -> Dict[str, Any]:
    return {"constant": str(f.constant), "coefficients": _row(f.coefficients)}


def certificate_to_document(cert: ReductionCertificate) -> Dict[str, Any]:
    """Certificate as a JSON-ready dict; unset fields are omitted."""
    doc: Dict[str, Any] = {
        "kind": cert.kind.value,
        "source_dims": list(cert.source_dims),
        "target_dims": list(cert.target_dims),
    }
    var_map: Dict[str, Any] = {}
    if cert.var_map.blocks:
        var_map["blocks"] = [
            {"name": b.name, "start": b.start, "stop": b.stop} for b in cert.var_map.blocks
        ]
    if cert.var_map.splits:
        var_map["splits"] = [[u, v] for u, v in cert.var_map.splits]
    if var_map:
        doc["var_map"] = var_map
    for name in ("shift_c", "scale_alpha", "objective_constant"):
        value = getattr(cert, name)
        if value is not None:
            doc[name] = str(value)
    if cert.variant is not None:
        doc["variant"] = cert.variant.value
    if cert.objective_negated:
        doc["objective_negated"] = True
    if cert.payoff is not None:
        doc["payoff"] = [_row(row) for row in cert.payoff]
    if cert.stages:
        doc["stages"] = [certificate_to_document(stage) for stage in cert.stages]
    return doc


def problem_to_document(
    problem: Problem,
    certificate: Optional[ReductionCertificate] = None,
) -> Dict[str, Any]:
    """Problem as a JSON-ready dict with the form key first."""
    form = FORMS.get(type(problem))
    if form is None:
        raise TypeError(f"Cannot serialize {type(problem).__name__}")

    doc: Dict[str, Any] = {"form": form}
    if isinstance(problem, LinearProgram):
        doc["sense"] = problem.sense.value
        doc["objective"] = _affine_doc(problem.objective)
        doc["constraints"] = [
            {"lhs": _affine_doc(c.lhs), "rel": c.relation.value, "rhs": _affine_doc(c.rhs)}
            for c in problem.constraints
        ]
        doc["var_signs"] = [s.value for s in problem.var_signs]
    elif isinstance(problem, StandardLP):
        doc["c"] = _row(problem.c)
        doc["A"] = [_row(row) for row in problem.A]
        doc["b"] = _row(problem.b)
    elif isinstance(problem, MatrixGame):
        doc["M"] = [_row(row) for row in problem.M]
    else:
        doc["functions"] = [_affine_doc(f) for f in problem.functions]

    if certificate is not None:
        doc["certificate"] = certificate_to_document(certificate)
    return doc


def _dump(doc: Dict[str, Any]) -> bytes:
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def emit_problem(problem: Problem, certificate: Optional[ReductionCertificate] = None) -> bytes:
    """
    Canonical JSON bytes for a problem and optional certificate.

    Args:
        problem: Any supported problem form
        certificate: Certificate embedded under "certificate"

    Returns:
        UTF-8 encoded document ending in a newline
    """
    return _dump(problem_to_document(problem, certificate))


def emit_solution(s: Solution) -> bytes:
    doc: Dict[str, Any] = {"status": s.status.value}
    if s.is_optimal:
        doc["point"] = _row(s.point)
        doc["value"] = str(s.value)
    return _dump(doc)


def emit_strategy(x: Strategy) -> bytes:
    return _dump({"status": "optimal", "strategy": _row(x.x)})
