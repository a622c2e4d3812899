from itertools import combinations

import pytest

from tridots.closed_forms import nf
from tridots.construction import validate_placement
from tridots.errors import DomainError, SizeCapError
from tridots.exact_solver import count_optima, max_dots
from tridots.geometry import Cell, all_cells


def conflict(a: Cell, b: Cell) -> bool:
    """Definition-level attack test, independent of the line-index mapping."""
    return a.row == b.row or a.pos == b.pos or a.row - a.pos == b.row - b.pos


def enumerate_optima(n: int) -> tuple[int, int]:
    """(maximum size, number of maximum sets) by checking every subset."""
    cells = all_cells(n)
    best, count = 0, 1  # the empty placement
    for size in range(1, n + 1):
        hits = sum(
            1
            for subset in combinations(cells, size)
            if not any(conflict(a, b) for a, b in combinations(subset, 2))
        )
        if hits:
            best, count = size, hits
    return best, count


def test_against_exhaustive_subset_enumeration():
    for n in range(1, 6):
        best, optima = enumerate_optima(n)
        assert max_dots(n).count == best
        assert count_optima(n) == optima


@pytest.mark.parametrize("n,expected", [(3, 2), (1, 1), (10, 7)])
def test_known_maxima(n, expected):
    count, witness = max_dots(n)
    assert count == expected
    assert len(witness.dots) == expected
    assert validate_placement(witness).ok


def test_smallest_board_witness():
    assert max_dots(1).placement.dots == (Cell(1, 1),)


def test_counts_match_closed_form():
    for n in range(1, 13):
        assert max_dots(n).count == nf(n)


def test_count_is_monotone_nondecreasing():
    counts = [max_dots(n).count for n in range(1, 15)]
    assert all(a <= b for a, b in zip(counts, counts[1:]))


def test_optima_counts():
    assert count_optima(1) == 1
    assert count_optima(2) == 3  # three single-dot placements, no valid pair
    assert count_optima(5) == 23


def test_witness_is_deterministic():
    first = max_dots(9)
    second = max_dots(9)
    assert first == second
    assert first.placement.dots == second.placement.dots


def test_witness_never_below_construction():
    from tridots.construction import build_placement

    for n in range(1, 13):
        assert max_dots(n).count >= len(build_placement(n).dots)


def test_cap_refusal_and_domain_errors():
    with pytest.raises(SizeCapError):
        max_dots(26)
    with pytest.raises(SizeCapError):
        max_dots(10, cap=5)
    with pytest.raises(SizeCapError):
        count_optima(26)
    with pytest.raises(DomainError):
        max_dots(0)
    with pytest.raises(DomainError):
        count_optima(-2)
    assert max_dots(6, cap=6).count == 4  # explicit cap raise is honored
