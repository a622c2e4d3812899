"""Text rendering shared by the service and the CLI.

Tables mirror the reference layout: exact values appear as mixed fractions
("4 2/7") in ascii and csv output, while JSON payloads carry plain "p/q"
strings.  Triangles are drawn with the right angle at the bottom right, so
row 1 is the single indented cell at the top and each row is right-aligned
against the vertical side.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .construction import Placement
from .errors import DomainError
from .geometry import Cell


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q" or integer text into an exact fraction."""
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad fraction {text!r}: {exc}") from exc


def mixed_fraction(q: Fraction) -> str:
    """Render q in mixed-number style: "4 2/7", "3", "1/4", "0"."""
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, part = divmod(q, 1)
    if part == 0:
        return f"{sign}{whole}"
    if whole == 0:
        return f"{sign}{part}"
    return f"{sign}{whole} {part}"


def triangle_ascii(n: int, cell_text: Callable[[Cell], str], min_width: int = 1) -> str:
    """Draw the board row by row, each row right-aligned (hypotenuse on the left)."""
    texts = {
        Cell(a, b): cell_text(Cell(a, b)) for a in range(1, n + 1) for b in range(1, a + 1)
    }
    width = max(min_width, *(len(t) for t in texts.values()))
    lines = []
    for a in range(1, n + 1):
        cells = [texts[Cell(a, b)].rjust(width) for b in range(a, 0, -1)]
        lines.append(" " * ((n - a) * (width + 1)) + " ".join(cells))
    return "\n".join(lines)


def placement_ascii(placement: Placement) -> str:
    """The board with '*' for dots and '.' for empty cells."""
    dots = set(placement.dots)
    return triangle_ascii(placement.n, lambda cell: "*" if cell in dots else ".")


def values_ascii(n: int, values: Mapping[Cell, Fraction]) -> str:
    """The board with one exact value per cell, zeros shown as 0."""
    return triangle_ascii(n, lambda cell: str(values.get(cell, Fraction(0))))


TABLE_HEADER = ("n", "N(n)", "LP(n)", "LP(n)-N(n)")


def table_csv(rows: Sequence[tuple[int, int, Fraction]]) -> str:
    """CSV table of exact results; LP values and gaps as mixed fractions."""
    lines = [",".join(TABLE_HEADER)]
    for n, dots, lp in rows:
        lines.append(f"{n},{dots},{mixed_fraction(lp)},{mixed_fraction(lp - dots)}")
    return "\n".join(lines)


def table_ascii(rows: Sequence[tuple[int, int, Fraction]]) -> str:
    """Aligned text table of the same data as table_csv."""
    body = [
        (str(n), str(dots), mixed_fraction(lp), mixed_fraction(lp - dots))
        for n, dots, lp in rows
    ]
    widths = [
        max(len(TABLE_HEADER[col]), *(len(r[col]) for r in body)) if body else len(TABLE_HEADER[col])
        for col in range(4)
    ]
    def fmt(cells: tuple[str, str, str, str]) -> str:
        left = [cells[0].rjust(widths[0]), cells[1].rjust(widths[1])]
        right = [cells[2].ljust(widths[2]), cells[3].ljust(widths[3])]
        return ("  ".join(left + right)).rstrip()
    return "\n".join([fmt(TABLE_HEADER)] + [fmt(r) for r in body])
