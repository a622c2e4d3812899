"""Closed-form dual feasible points and the machine-checked upper bound.

A certificate assigns a nonnegative rational price to every line of the
board (rows, columns and diagonals, indexed by length).  It is feasible
for the dual LP when the three prices covering each cell sum to at least
1; by weak duality its total price then bounds the LP optimum from above,
and flooring bounds the integer optimum.

The certificates built here have one closed form per residue class of
n = 3t + residue, all of shape max(0, (index - shift) / denominator):

    residue 1:  rows = cols: shift t+1, diagonals: shift t,  denominator 3t+1
    residue 2:  all three families: shift t+1,               denominator 3t+2
    residue 0:  all three families: shift t,                 denominator 3t+1

Their objective equals lpf(n) exactly, so the derived bound is
floor(lpf(n)) = nf(n), matching the constructive lower bound.

Verification is exact.  The fast path scales all prices to one common
denominator and checks the cell sums with int64 vectors (the board's
diagonal structure makes the per-cell price a reversed-and-shifted window
sum, so the whole board is a few numpy broadcasts); when the scaled values
would not safely fit in int64 it falls back to a plain Fraction loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm
from typing import Iterable, NamedTuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .closed_forms import residue_split
from .errors import DomainError, InfeasibleCertificateError
from .geometry import Cell, check_size

_INT64_SAFE = 2**31  # three summands of this size cannot overflow int64


class CellCheck(NamedTuple):
    """A violated dual constraint: the cell and its exact price sum."""

    cell: Cell
    lhs: Fraction


class CertificateReport(NamedTuple):
    ok: bool
    violations: tuple[CellCheck, ...]


@dataclass(frozen=True)
class DualCertificate:
    """Per-line prices, each vector indexed by line length (entry 0 is length 1)."""

    n: int
    row_prices: tuple[Fraction, ...]
    col_prices: tuple[Fraction, ...]
    diag_prices: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        check_size(self.n)
        for family, prices in self._families():
            if len(prices) != self.n:
                raise DomainError(f"{family} price vector must have length {self.n}")
            if any(p < 0 for p in prices):
                raise DomainError(f"{family} prices must be nonnegative")

    def _families(self):
        return (
            ("row", self.row_prices),
            ("col", self.col_prices),
            ("diag", self.diag_prices),
        )

    def to_json_dict(self) -> dict:
        """Full JSON form, including the recomputed objective and feasibility."""
        return {
            "n": self.n,
            "r": [str(p) for p in self.row_prices],
            "c": [str(p) for p in self.col_prices],
            "d": [str(p) for p in self.diag_prices],
            "objective": str(certificate_objective(self)),
            "feasible": verify_feasible(self).ok,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "DualCertificate":
        try:
            return cls(
                n=int(data["n"]),
                row_prices=_parse_prices(data["r"]),
                col_prices=_parse_prices(data["c"]),
                diag_prices=_parse_prices(data["d"]),
            )
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed certificate JSON: {exc}") from exc


def _parse_prices(items: Iterable[str]) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(str(item)) for item in items)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad price value: {exc}") from exc


def build_certificate(n: int) -> DualCertificate:
    """The closed-form dual feasible point for the size-n board."""
    t, residue = residue_split(n)
    if residue == 1:
        den = 3 * t + 1
        rows_cols = _truncated_ramp(n, t + 1, den)
        diags = _truncated_ramp(n, t, den)
        return DualCertificate(n, rows_cols, rows_cols, diags)
    if residue == 2:
        prices = _truncated_ramp(n, t + 1, 3 * t + 2)
    else:
        prices = _truncated_ramp(n, t, 3 * t + 1)
    return DualCertificate(n, prices, prices, prices)


def _truncated_ramp(n: int, shift: int, den: int) -> tuple[Fraction, ...]:
    """(max(0, 1-shift), ..., max(0, n-shift)) / den as exact fractions."""
    return tuple(Fraction(max(0, i - shift), den) for i in range(1, n + 1))


def certificate_objective(cert: DualCertificate) -> Fraction:
    """Exact total price: the dual objective at this certificate."""
    total = Fraction(0)
    for _, prices in cert._families():
        total += sum(prices, Fraction(0))
    return total


def verify_feasible(cert: DualCertificate) -> CertificateReport:
    """Exact check that the three prices covering each cell sum to >= 1."""
    n = cert.n
    den = lcm(*(p.denominator for prices in (cert.row_prices, cert.col_prices, cert.diag_prices) for p in prices))
    scaled = [
        [p.numerator * (den // p.denominator) for p in prices]
        for prices in (cert.row_prices, cert.col_prices, cert.diag_prices)
    ]
    if den < _INT64_SAFE and all(v < _INT64_SAFE for row in scaled for v in row):
        bad_cells = _scan_int64(n, den, scaled)
    else:
        bad_cells = _scan_fractions(cert)
    violations = tuple(CellCheck(cell, _cell_sum(cert, cell)) for cell in bad_cells)
    return CertificateReport(not violations, violations)


def _cell_sum(cert: DualCertificate, cell: Cell) -> Fraction:
    a, b = cell
    n = cert.n
    return (
        cert.row_prices[a - 1]
        + cert.col_prices[n - b]
        + cert.diag_prices[n - a + b - 1]
    )


def _scan_int64(n: int, den: int, scaled: list[list[int]], block: int = 1024) -> list[Cell]:
    """Vectorized scan; returns the cells whose scaled price sum is below den.

    Cell (a, b) needs rows[a-1] + cols[n-b] + diags[n-1 - (a-1) + (b-1)]; for a
    fixed row the diagonal term is a contiguous window of the diagonal vector,
    so all rows are windows of one padded array.  Padding cells (b > a) get a
    sentinel that always passes, which keeps every numpy op a full rectangle.
    """
    rnum = np.array(scaled[0], dtype=np.int64)
    crev = np.array(scaled[1][::-1], dtype=np.int64)
    dnum = np.array(scaled[2], dtype=np.int64)
    pad = np.full(n - 1, den, dtype=np.int64)  # sentinel: passes since prices >= 0
    windows = sliding_window_view(np.concatenate([dnum, pad]), n)[::-1]
    bad: list[Cell] = []
    for lo in range(0, n, block):
        hi = min(lo + block, n)
        sums = rnum[lo:hi, None] + crev[None, :] + windows[lo:hi]
        if sums.min() < den:
            for a0, b0 in np.argwhere(sums < den):
                bad.append(Cell(lo + int(a0) + 1, int(b0) + 1))
    return bad


def _scan_fractions(cert: DualCertificate) -> list[Cell]:
    """Plain exact scan, used when scaled prices could overflow int64."""
    n = cert.n
    one = Fraction(1)
    bad = []
    for a in range(1, n + 1):
        for b in range(1, a + 1):
            if _cell_sum(cert, Cell(a, b)) < one:
                bad.append(Cell(a, b))
    return bad


def upper_bound(n: int) -> int:
    """Proven upper bound on the maximum dot count, via the built certificate.

    Feasibility is re-verified on every call, so the returned bound never
    trusts the construction; an infeasible certificate is a library bug and
    raises instead of returning.
    """
    check_size(n)
    cert = build_certificate(n)
    report = verify_feasible(cert)
    if not report.ok:
        raise InfeasibleCertificateError(
            f"built certificate for n={n} failed verification at "
            f"{len(report.violations)} cells"
        )
    return floor(certificate_objective(cert))
