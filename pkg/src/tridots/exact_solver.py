"""Independent brute-force oracle for the maximum dot count.

Row-by-row backtracking: each row contributes at most one dot, occupied
columns and diagonals are tracked in one packed bitmask (column of length
j at bit j, diagonal of length k at bit n + 1 + k), and a branch is cut
when the current count plus an optimistic remainder cannot beat the best
placement found so far.  The remainder is the minimum of the rows left and
the free columns / diagonals; nothing from the LP machinery is used, which
is the point: this module is the cross-check for everything else.

Within a row, cells are tried in ascending pos order and the "leave the
row empty" branch comes last; the first maximum reached under that fixed
order is the reported witness, so results are reproducible run to run.

The search is exponential; sizes above the cap (default 25) are refused
rather than attempted.
"""

from __future__ import annotations

from typing import NamedTuple

from .construction import Placement
from .errors import SizeCapError
from .geometry import Cell, check_size

DEFAULT_SEARCH_CAP = 25


class SearchResult(NamedTuple):
    count: int
    placement: Placement


def _check_cap(n: int, cap: int) -> None:
    check_size(n)
    if n > cap:
        raise SizeCapError(
            f"exhaustive search for n={n} exceeds the cap of {cap}; "
            "raise the cap explicitly to search anyway"
        )


def _row_masks(n: int) -> list[list[int]]:
    """Per row, the packed column+diagonal bit pair of each cell, pos ascending."""
    return [
        [(1 << (n - b + 1)) | (1 << (2 * n + 2 - a + b)) for b in range(1, a + 1)]
        for a in range(1, n + 1)
    ]


def max_dots(n: int, cap: int = DEFAULT_SEARCH_CAP) -> SearchResult:
    """Exact maximum dot count and the first witness found, by backtracking."""
    _check_cap(n, cap)
    rows = _row_masks(n)
    best = 0
    best_dots: tuple[tuple[int, int], ...] = ()
    path: list[tuple[int, int]] = []  # bare tuples: Cell construction is hot-path cost

    def descend(a: int, used: int, count: int, free_cols: int, free_diags: int) -> None:
        nonlocal best, best_dots
        remaining = n - a + 1
        if free_cols < remaining:
            remaining = free_cols
        if free_diags < remaining:
            remaining = free_diags
        if count + remaining <= best:
            return
        nxt = a + 1
        deeper = count + 1
        for b, bits in enumerate(rows[a - 1], start=1):
            if used & bits:
                continue
            path.append((a, b))
            if deeper > best:
                best = deeper
                best_dots = tuple(path)
            if nxt <= n:
                descend(nxt, used | bits, deeper, free_cols - 1, free_diags - 1)
            path.pop()
        if nxt <= n:
            descend(nxt, used, count, free_cols, free_diags)

    descend(1, 0, 0, n, n)
    return SearchResult(best, Placement(n, tuple(Cell(*d) for d in best_dots)))


def count_optima(n: int, cap: int = DEFAULT_SEARCH_CAP) -> int:
    """Number of distinct placements achieving the maximum count."""
    _check_cap(n, cap)
    target = max_dots(n, cap).count
    rows = _row_masks(n)
    total = 0

    def descend(a: int, used: int, count: int) -> None:
        nonlocal total
        if count + (n - a + 1) < target:
            return
        if a > n:
            if count == target:
                total += 1
            return
        for bits in rows[a - 1]:
            if used & bits:
                continue
            descend(a + 1, used | bits, count + 1)
        descend(a + 1, used, count)

    descend(1, 0, 0)
    return total
