"""
Helpers shared by the sub-commands: input/output streams, exit codes, summaries.
"""

import sys
from pathlib import Path
from typing import Optional

from src.cli.serialization import FORMS, Problem
from src.core.models import LinearProgram, MatrixGame, StandardLP

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Raised when flags or inputs do not fit the requested command."""
    pass


def read_input(path: Optional[str]) -> bytes:
    """Read a document from a path, or from stdin when path is None or "-"."""
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"Cannot read {path}: {exc.strerror}")


def write_output(path: Optional[str], data: bytes) -> None:
    """Write bytes to a path, or to stdout when path is None or "-"."""
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    Path(path).write_bytes(data)


def form_of(problem: Problem) -> str:
    return FORMS[type(problem)]


def describe(problem: Problem) -> str:
    """Human-readable size of a problem."""
    if isinstance(problem, LinearProgram):
        return f"lp: {problem.n_variables} variables, {problem.n_constraints} constraints"
    if isinstance(problem, StandardLP):
        return f"standard: {problem.n_cols} variables, {problem.n_rows} rows"
    if isinstance(problem, MatrixGame):
        return f"game: size {problem.size}"
    return f"{form_of(problem)}: {problem.size} functions, {problem.arity} variables"
