"""Closed-form target values for the board of size n.

nf(n) = floor((2n+1)/3) is the proven maximum number of non-attacking dots.
lpf(n) is the conjectured exact optimum of the LP relaxation; it is an
integer precisely when n = 1 (mod 3).  Both split into three cases by the
residue of n mod 3, with n = 3t + residue:

    nf(3t)   = 2t            lpf(3t)   = 2t + t/(3t+1)
    nf(3t+1) = 2t + 1        lpf(3t+1) = 2t + 1
    nf(3t+2) = 2t + 1        lpf(3t+2) = 2t + 1 + (2t+1)/(3t+2)

lpf always returns a Fraction, even when integral, so downstream exact
comparisons never mix numeric kinds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .geometry import check_size


class ResidueSplit(NamedTuple):
    """Decomposition n = 3t + residue with residue in {0, 1, 2}."""

    t: int
    residue: int


def residue_split(n: int) -> ResidueSplit:
    """Split a board size by its residue mod 3."""
    check_size(n)
    t, residue = divmod(n, 3)
    return ResidueSplit(t, residue)


def nf(n: int) -> int:
    """Maximum number of non-attacking dots on the size-n board."""
    check_size(n)
    return (2 * n + 1) // 3


def lpf(n: int) -> Fraction:
    """Conjectured exact LP relaxation optimum for the size-n board."""
    t, residue = residue_split(n)
    if residue == 0:
        return 2 * t + Fraction(t, 3 * t + 1)
    if residue == 1:
        return Fraction(2 * t + 1)
    return 2 * t + 1 + Fraction(2 * t + 1, 3 * t + 2)
