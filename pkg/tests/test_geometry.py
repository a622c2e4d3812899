import pytest

from tridots.errors import DomainError
from tridots.geometry import (
    Cell,
    all_cells,
    cell_count,
    cell_index,
    cells_of_col,
    cells_of_diag,
    cells_of_row,
    check_cell,
    line_indices,
)


def brute_force_line_lengths(cell: Cell, n: int) -> tuple[int, int, int]:
    """Count, cell by cell, how long the three lines through a cell are.

    Two cells share a row iff their row coordinates agree, a column iff
    their pos coordinates agree, and a diagonal iff row - pos agrees.
    This is the definition, independent of the closed-form index map.
    """
    cells = all_cells(n)
    row = sum(1 for c in cells if c.row == cell.row)
    col = sum(1 for c in cells if c.pos == cell.pos)
    diag = sum(1 for c in cells if c.row - c.pos == cell.row - cell.pos)
    return row, col, diag


def test_all_cells_smallest_board():
    assert all_cells(1) == [Cell(1, 1)]


@pytest.mark.parametrize("n,count", [(6, 21), (7, 28)])
def test_all_cells_count(n, count):
    cells = all_cells(n)
    assert len(cells) == count == cell_count(n)
    assert len(set(cells)) == count


def test_all_cells_row_major_pos_ascending():
    assert all_cells(3) == [
        Cell(1, 1),
        Cell(2, 1),
        Cell(2, 2),
        Cell(3, 1),
        Cell(3, 2),
        Cell(3, 3),
    ]


@pytest.mark.parametrize("bad", [0, -1, -7, 1.5, "3", True])
def test_size_validation(bad):
    with pytest.raises(DomainError):
        all_cells(bad)


def test_cell_index_matches_enumeration():
    for n in (1, 2, 5, 9):
        for i, cell in enumerate(all_cells(n)):
            assert cell_index(cell, n) == i


@pytest.mark.parametrize(
    "cell,expected",
    [
        (Cell(1, 1), (1, 6, 6)),  # apex: full-length column and the long diagonal
        (Cell(6, 6), (6, 1, 6)),  # bottom-left corner
        (Cell(4, 2), (4, 5, 4)),
    ],
)
def test_line_indices_on_size_6(cell, expected):
    assert tuple(line_indices(cell, 6)) == expected


def test_line_indices_against_brute_force_counter():
    for n in range(1, 13):
        for cell in all_cells(n):
            assert tuple(line_indices(cell, n)) == brute_force_line_lengths(cell, n)


def test_index_sum_identity_up_to_200():
    for n in range(1, 201):
        for cell in all_cells(n):
            idx = line_indices(cell, n)
            assert idx.row_len + idx.col_len + idx.diag_len == 2 * n + 1


def test_cells_to_triples_is_a_bijection():
    for n in range(1, 31):
        triples = [tuple(line_indices(c, n)) for c in all_cells(n)]
        expected = {
            (i, j, k)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            for k in (2 * n + 1 - i - j,)
            if 1 <= k <= n
        }
        assert len(triples) == len(set(triples))
        assert set(triples) == expected


def test_line_indices_rejects_off_board_cells():
    for bad in (Cell(0, 1), Cell(3, 4), Cell(7, 1), Cell(2, 0)):
        with pytest.raises(DomainError):
            line_indices(bad, 6)
    with pytest.raises(DomainError):
        check_cell(Cell(1, 2), 3)


def test_line_families_partition_the_board():
    for n in range(1, 26):
        cells = all_cells(n)
        for of_line in (cells_of_row, cells_of_col, cells_of_diag):
            seen = [c for idx in range(1, n + 1) for c in of_line(idx, n)]
            assert sorted(seen) == cells
            assert len(seen) == len(set(seen))


def test_line_lengths_match_their_index():
    for n in range(1, 26):
        for idx in range(1, n + 1):
            assert len(cells_of_row(idx, n)) == idx
            assert len(cells_of_col(idx, n)) == idx
            assert len(cells_of_diag(idx, n)) == idx


def test_specific_lines_on_size_6():
    assert cells_of_row(1, 6) == [Cell(1, 1)]
    assert cells_of_col(6, 6) == [Cell(a, 1) for a in range(1, 7)]
    assert cells_of_diag(6, 6) == [Cell(a, a) for a in range(1, 7)]


def test_line_index_out_of_range():
    for fn in (cells_of_row, cells_of_col, cells_of_diag):
        with pytest.raises(DomainError):
            fn(0, 6)
        with pytest.raises(DomainError):
            fn(7, 6)
