"""Exact linear algebra over Z and Q.

`bareiss_rank` is the production rank routine. `rational_rank` and
`nullspace` run plain Gaussian elimination over Fractions and serve as an
independent check on it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Echelon variant: a column without a nonzero pivot candidate is skipped
    and the previous pivot is kept as divisor, so every division is exact.
    """
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    nrows = len(rows)
    prev = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = None
        for i in range(rank, nrows):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        p = prow[col]
        for i in range(rank + 1, nrows):
            row = rows[i]
            m = row[col]
            if m:
                rows[i] = [0] * (col + 1) + [
                    (p * a - m * b) // prev for a, b in zip(row[col + 1:], prow[col + 1:])
                ]
            elif prev == p:
                continue
            else:
                rows[i] = [0] * (col + 1) + [p * a // prev for a in row[col + 1:]]
        prev = p
        rank += 1
    return rank


def _rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [[Fraction(x) for x in r] for r in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rational_rank(matrix: Sequence[Sequence]) -> int:
    return len(_rref(matrix)[1])


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {v : M v = 0} over Q, one vector per free column."""
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    rows, pivots = _rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def mat_vec(matrix: Sequence[Sequence], v: Sequence) -> list:
    return [sum(a * b for a, b in zip(row, v)) for row in matrix]
