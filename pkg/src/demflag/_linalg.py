"""Exact Gaussian elimination over the rationals.

The systems solved here are tiny (at most nine unknowns), so a plain
fraction-valued row reduction is both fast enough and free of rounding.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def solve_unique(rows: Sequence[Sequence[int | Fraction]],
                 rhs: Sequence[int | Fraction]) -> list[Fraction] | None:
    """Solve ``A x = b`` exactly.

    Returns the unique solution, or None when the system is inconsistent.
    Raises ValueError when the solution is not unique; callers here always
    work with full-column-rank systems, so that would signal a bug.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(b)]
           for row, b in zip(rows, rhs)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((k for k in range(r, m) if aug[k][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for k in range(m):
            if k != r and aug[k][c] != 0:
                f = aug[k][c]
                aug[k] = [a - f * b for a, b in zip(aug[k], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == m:
            break
    for k in range(r, m):
        if aug[k][n] != 0:
            return None
    if len(pivot_cols) < n:
        raise ValueError("underdetermined system")
    x = [Fraction(0)] * n
    for row_idx, c in enumerate(pivot_cols):
        x[c] = aug[row_idx][n]
    return x
