"""
Exact dense linear algebra over rationals.

Small dense systems only: the moment solve and the determinants of the
transformed vectors never exceed a few dozen rows.
"""

from fractions import Fraction
from typing import List, Sequence

from algebra.scalars import ONE, ZERO

Matrix = Sequence[Sequence[Fraction]]


class SingularMatrixError(ArithmeticError):
    """Raised when an exact elimination finds no pivot."""

    def __init__(self, column: int):
        super().__init__(f"no pivot in column {column}")
        self.column = column


def determinant(matrix: Matrix) -> Fraction:
    """
    Determinant by fraction-free (Bareiss) elimination.

    Each division in the update is exact, so intermediate entries stay
    minors of the input instead of growing as nested fractions.

    Args:
        matrix: Square matrix of Fractions

    Returns:
        Exact determinant; 1 for the empty matrix
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        return ONE
    sign = 1
    previous = ONE
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return ZERO
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) / previous
            rows[i][k] = ZERO
        previous = pivot
    return sign * rows[n - 1][n - 1]


def solve(matrix: Matrix, rhs: Sequence[Fraction]) -> List[Fraction]:
    """
    Solve a square system exactly by Gaussian elimination.

    Args:
        matrix: n x n coefficient matrix
        rhs: right-hand side of length n

    Returns:
        The unique solution

    Raises:
        SingularMatrixError: If the matrix is singular
    """
    n = len(rhs)
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError(k)
        rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
        pivot = rows[k][k]
        for i in range(k + 1, n):
            factor = rows[i][k] / pivot
            if factor == 0:
                continue
            for j in range(k, n + 1):
                rows[i][j] -= factor * rows[k][j]
    solution = [ZERO] * n
    for k in range(n - 1, -1, -1):
        acc = rows[k][n] - sum((rows[k][j] * solution[j] for j in range(k + 1, n)), ZERO)
        solution[k] = acc / rows[k][k]
    return solution


def minor(matrix: Matrix, row: int, column: int) -> List[List[Fraction]]:
    """Matrix with one row and one column removed."""
    return [
        [value for j, value in enumerate(r) if j != column]
        for i, r in enumerate(matrix)
        if i != row
    ]
