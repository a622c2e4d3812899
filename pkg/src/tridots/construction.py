"""Explicit dot placements witnessing the lower bound nf(n).

The canonical placement is built from two dot chains.  With n = 3t + 1,
chain 1 starts at the leftmost cell of row 2t+1, chain 2 (for t >= 1) at
the (t+2)nd cell from the left of the bottom row, and each subsequent dot
sits two squares to the right and one square up from its predecessor.  In
this package's (row-from-top, pos-from-right) coordinates that step is
(-1, -2).  Boards with n = 3t + 2 reuse the 3t+1 placement unchanged (the
extra bottom row stays empty); boards with n = 3t take the 3t+1 placement
and drop its unique bottom-row dot (always the start of chain 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .closed_forms import residue_split
from .errors import DomainError
from .geometry import Cell, check_cell, check_size, line_indices


@dataclass(frozen=True)
class Placement:
    """A set of dots on the size-n board, stored sorted for stable output.

    The constructor checks that every dot is a cell of the board and that no
    cell repeats; whether the dots attack each other is validate_placement's
    job, so that invalid configurations can be reported rather than rejected.
    """

    n: int
    dots: tuple[Cell, ...]

    def __post_init__(self) -> None:
        check_size(self.n)
        cells = tuple(sorted(check_cell(Cell(*d), self.n) for d in self.dots))
        if len(set(cells)) != len(cells):
            raise DomainError("placement contains a repeated cell")
        object.__setattr__(self, "dots", cells)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "dots": [[c.row, c.pos] for c in self.dots]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Placement":
        try:
            n = data["n"]
            dots = [Cell(int(r), int(p)) for r, p in data["dots"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed placement JSON: {exc}") from exc
        return cls(n, tuple(dots))


class LineViolation(NamedTuple):
    """A line (family + length index) holding more than one dot."""

    family: str  # "row" | "col" | "diag"
    index: int
    cells: tuple[Cell, ...]


class PlacementReport(NamedTuple):
    """Outcome of validate_placement: ok, or the list of overloaded lines."""

    ok: bool
    violations: tuple[LineViolation, ...]


def _chain_dots(t: int) -> list[Cell]:
    """Both chains of the canonical placement on the board of size 3t + 1."""
    dots = [Cell(2 * t + 1 - s, 2 * t + 1 - 2 * s) for s in range(t + 1)]
    if t >= 1:
        dots += [Cell(3 * t + 1 - s, 2 * t - 2 * s) for s in range(t)]
    return dots


def build_placement(n: int) -> Placement:
    """The canonical non-attacking placement with nf(n) dots."""
    t, residue = residue_split(n)
    if residue == 1:
        dots = _chain_dots(t)
    elif residue == 2:
        dots = _chain_dots(t)  # extra bottom row stays empty
    else:
        big = 3 * t + 1
        dots = [c for c in _chain_dots(t) if c.row != big]
    return Placement(n, tuple(dots))


def validate_placement(placement: Placement) -> PlacementReport:
    """Check the at-most-one-dot-per-line rule, reporting every violated line."""
    by_line: dict[tuple[str, int], list[Cell]] = {}
    for cell in placement.dots:
        idx = line_indices(cell, placement.n)
        by_line.setdefault(("row", idx.row_len), []).append(cell)
        by_line.setdefault(("col", idx.col_len), []).append(cell)
        by_line.setdefault(("diag", idx.diag_len), []).append(cell)
    violations = tuple(
        LineViolation(family, index, tuple(cells))
        for (family, index), cells in sorted(by_line.items())
        if len(cells) > 1
    )
    return PlacementReport(not violations, violations)
