"""Small exact linear algebra helpers over the rationals.

Only what the coefficient solves and independence certificates need: row
reduction, rank, a consistent-system solver, and matrix inversion.  Matrices
are lists of lists of exact rationals.
"""

from __future__ import annotations

from .algebra import as_rational, rational

Matrix = list[list]


def _as_matrix(rows) -> Matrix:
    return [[as_rational(v) for v in row] for row in rows]


def row_echelon(rows) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = _as_matrix(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def matrix_rank(rows) -> int:
    _, pivots = row_echelon(rows)
    return len(pivots)


def solve_exact(rows, rhs) -> list | None:
    """Solve A x = b exactly; None if inconsistent, error if underdetermined."""
    m = _as_matrix(rows)
    b = [as_rational(v) for v in rhs]
    if len(m) != len(b):
        raise ValueError("matrix/rhs size mismatch")
    if not m:
        return []
    ncols = len(m[0])
    augmented = [row + [val] for row, val in zip(m, b)]
    reduced, pivots = row_echelon(augmented)
    if ncols in pivots:
        return None  # pivot in the constants column: inconsistent
    if len(pivots) < ncols:
        raise ValueError("underdetermined system")
    solution = [rational(0)] * ncols
    for r, c in enumerate(pivots):
        solution[c] = reduced[r][ncols]
    return solution


def invert_matrix(rows) -> Matrix:
    m = _as_matrix(rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    identity = [[rational(1 if i == j else 0) for j in range(n)] for i in range(n)]
    augmented = [m[i] + identity[i] for i in range(n)]
    reduced, pivots = row_echelon(augmented)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]


def matmul(a, b) -> Matrix:
    a, b = _as_matrix(a), _as_matrix(b)
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), rational(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def is_nilpotent(rows) -> bool:
    """Whether the square matrix is nilpotent (power n vanishes)."""
    m = _as_matrix(rows)
    n = len(m)
    power = m
    for _ in range(n):
        if all(v == 0 for row in power for v in row):
            return True
        power = matmul(power, m)
    return all(v == 0 for row in power for v in row)
