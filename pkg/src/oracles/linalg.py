"""
Exact linear algebra over rationals for the brute-force oracles.

Plain Gaussian elimination on lists of Fractions. Kept separate from the
simplex tableau so the oracles share no code with the solver they check.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Row = List[Fraction]


def reduced_row_echelon(
    rows: Sequence[Sequence[Fraction]],
    n_cols: int,
    rhs: Optional[Sequence[Fraction]] = None,
) -> Tuple[List[Row], Optional[Row], List[int]]:
    """
    Reduced row echelon form of a copy of ``rows`` (and of ``rhs`` alongside).

    Args:
        rows: Matrix rows, each of length n_cols (may be empty)
        n_cols: Number of columns
        rhs: Optional right-hand side carried through the row operations

    Returns:
        Tuple of (reduced rows, reduced rhs or None, pivot columns)
    """
    m = [[Fraction(v) for v in row] for row in rows]
    t = None if rhs is None else [Fraction(v) for v in rhs]
    pivots: List[int] = []

    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == len(m):
            break
        i_row = next((r for r in range(piv_r, len(m)) if m[r][piv_c] != 0), None)
        if i_row is None:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
            if t is not None:
                t[piv_r], t[i_row] = t[i_row], t[piv_r]

        fp = m[piv_r][piv_c]
        m[piv_r] = [v / fp for v in m[piv_r]]
        if t is not None:
            t[piv_r] /= fp
        for r in range(len(m)):
            fr = m[r][piv_c]
            if r == piv_r or fr == 0:
                continue
            m[r] = [a - fr * b for a, b in zip(m[r], m[piv_r])]
            if t is not None:
                t[r] -= fr * t[piv_r]
        pivots.append(piv_c)
        piv_r += 1
    return m, t, pivots


def rank(rows: Sequence[Sequence[Fraction]], n_cols: int) -> int:
    return len(reduced_row_echelon(rows, n_cols)[2])


def solve_unique(
    rows: Sequence[Sequence[Fraction]],
    rhs: Sequence[Fraction],
    n_cols: int,
) -> Optional[Tuple[Fraction, ...]]:
    """
    The unique solution of  rows . x = rhs, or None if it has none or many.
    """
    m, t, pivots = reduced_row_echelon(rows, n_cols, rhs)
    if len(pivots) != n_cols:
        return None
    # Rows past the rank must read 0 = 0
    if any(t[r] != 0 for r in range(len(pivots), len(m))):
        return None
    x = [Fraction(0)] * n_cols
    for r, c in enumerate(pivots):
        x[c] = t[r]
    return tuple(x)


def nullspace(rows: Sequence[Sequence[Fraction]], n_cols: int) -> List[Tuple[Fraction, ...]]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    m, _, pivots = reduced_row_echelon(rows, n_cols)
    pivot_set = set(pivots)
    basis: List[Tuple[Fraction, ...]] = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * n_cols
        v[free] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -m[r][free]
        basis.append(tuple(v))
    return basis


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))
