"""Triangular board geometry: cells, lines, and the length-index bijection.

The board of size n is a right triangle of unit squares: the vertical side
(n squares) is on the right, the horizontal side (n squares) at the bottom,
and the staircase hypotenuse runs from the bottom-left to the top-right
corner.  Row a, counted 1-based from the top, contains a squares; within a
row, pos counts 1-based from the right.  So (1, 1) is the apex, (n, 1) the
bottom-right corner and (n, n) the bottom-left corner.

Three families of lines partition the cells:

* rows         (constant row),
* columns      (constant pos, i.e. a vertical line),
* standard diagonals (constant row - pos, running southwest to northeast).

Lines are indexed by their *length* in squares.  The cell (a, b) lies on
the row of length a, the column of length n - b + 1 and the diagonal of
length n - a + b, and these three lengths always sum to 2n + 1.  The map
from cells to length triples is a bijection onto

    {(i, j, k) : i + j + k = 2n + 1, 1 <= i, j, k <= n}.

That mapping is a convention fixed here once for the whole package (the
LP builders and the dual certificates all rely on it); it is pinned down
by the tests against a brute-force line counter.
"""

from __future__ import annotations

from typing import NamedTuple


class Cell(NamedTuple):
    """One square of the board: row from the top, pos from the right (both 1-based)."""

    row: int
    pos: int


class LineIndices(NamedTuple):
    """Lengths of the row, column and diagonal through a cell; sums to 2n + 1."""

    row_len: int
    col_len: int
    diag_len: int


def check_size(n: int) -> int:
    """Validate a board size, returning it.  n = 0 is rejected, not treated as empty."""
    from .errors import DomainError

    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"board size must be a positive integer, got {n!r}")
    return n


def check_cell(cell: Cell, n: int) -> Cell:
    """Validate that cell lies on the size-n board."""
    from .errors import DomainError

    check_size(n)
    row, pos = cell
    if not (isinstance(row, int) and isinstance(pos, int)):
        raise DomainError(f"cell coordinates must be integers, got {cell!r}")
    if not 1 <= pos <= row <= n:
        raise DomainError(f"cell {tuple(cell)} is not on the board of size {n}")
    return Cell(row, pos)


def cell_count(n: int) -> int:
    """Number of cells of the size-n board, n(n+1)/2."""
    check_size(n)
    return n * (n + 1) // 2


def all_cells(n: int) -> list[Cell]:
    """All cells in row-major order, pos ascending within each row."""
    check_size(n)
    return [Cell(a, b) for a in range(1, n + 1) for b in range(1, a + 1)]


def cell_index(cell: Cell, n: int) -> int:
    """Position of cell in all_cells(n), used as its LP variable index."""
    row, pos = check_cell(cell, n)
    return row * (row - 1) // 2 + (pos - 1)


def line_indices(cell: Cell, n: int) -> LineIndices:
    """Length triple (row, column, diagonal) of the lines through cell."""
    row, pos = check_cell(cell, n)
    return LineIndices(row, n - pos + 1, n - row + pos)


def _check_line(index: int, n: int, family: str) -> None:
    from .errors import DomainError

    check_size(n)
    if not isinstance(index, int) or not 1 <= index <= n:
        raise DomainError(f"{family} length index must be in 1..{n}, got {index!r}")


def cells_of_row(i: int, n: int) -> list[Cell]:
    """The i cells of the row of length i, ascending pos."""
    _check_line(i, n, "row")
    return [Cell(i, b) for b in range(1, i + 1)]


def cells_of_col(j: int, n: int) -> list[Cell]:
    """The j cells of the column of length j (pos = n - j + 1), ascending row."""
    _check_line(j, n, "column")
    b = n - j + 1
    return [Cell(a, b) for a in range(b, n + 1)]


def cells_of_diag(k: int, n: int) -> list[Cell]:
    """The k cells of the standard diagonal of length k (row - pos = n - k), ascending row."""
    _check_line(k, n, "diagonal")
    return [Cell(a, a - n + k) for a in range(n - k + 1, n + 1)]
