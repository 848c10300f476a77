import pytest
from hypothesis import given, strategies as st

import oracles
from ferrotile.counting import (
    TooLarge,
    bareiss_determinant,
    count_brute,
    count_fkt,
    enumerate_tilings,
    kasteleyn_matrix,
)
from ferrotile.partitions import Cell, Partition, cells, generate_partitions
from ferrotile.tiler import validate_tiling


@pytest.mark.parametrize(
    "parts, expected", [((3, 3), 3), ((2, 2, 1, 1), 2), ((4, 3, 2, 1), 0)]
)
def test_enumerate_examples(parts, expected):
    p = Partition(parts)
    tilings = list(enumerate_tilings(p))
    assert len(tilings) == expected
    assert len({t.as_set() for t in tilings}) == expected
    assert all(validate_tiling(p, t) for t in tilings)


def test_enumerate_order_horizontal_first():
    first = next(enumerate_tilings(Partition(3, 3)))
    assert first.dominoes[0].horizontal


def test_enumerate_limit_is_prefix():
    p = Partition(4, 4, 4)
    full = list(enumerate_tilings(p))
    assert len(full) == 11
    for k in (1, 3, 11, 20):
        assert list(enumerate_tilings(p, limit=k)) == full[:k]


def test_enumerate_empty_board():
    assert [len(t) for t in enumerate_tilings(Partition())] == [0]


@pytest.mark.parametrize("n", range(13))
def test_enumerate_matches_naive_count(n):
    for p in generate_partitions(n):
        tilings = list(enumerate_tilings(p))
        assert len({t.as_set() for t in tilings}) == len(tilings)
        assert all(validate_tiling(p, t) for t in tilings)
        assert len(tilings) == oracles.count_tilings_naive(p.parts) == count_brute(p)


def test_count_brute_examples():
    assert count_brute(Partition(2, 2)) == 2
    assert count_brute(Partition()) == 1
    assert count_brute(Partition(4, 4)) == 5
    with pytest.raises(TooLarge):
        count_brute(Partition([7] * 6))


def test_kasteleyn_small():
    k = kasteleyn_matrix(Partition(2, 2))
    assert k.dimension == 4
    assert abs(k.determinant()) == 4
    assert kasteleyn_matrix(Partition(1)).entries == ((0,),)
    assert kasteleyn_matrix(Partition(1)).determinant() == 0
    assert kasteleyn_matrix(Partition(2, 1)).determinant() == 0


def _clockwise_count(k, index, r, c):
    # boundary of the unit square with top-left cell (r, c), walked clockwise
    loop = [Cell(r, c), Cell(r, c + 1), Cell(r + 1, c + 1), Cell(r + 1, c), Cell(r, c)]
    return sum(k[index[a], index[b]] == 1 for a, b in zip(loop, loop[1:]))


@pytest.mark.parametrize("n", range(1, 13))
def test_kasteleyn_structure(n):
    for p in generate_partitions(n):
        k = kasteleyn_matrix(p)
        board = cells(p)
        index = {c: i for i, c in enumerate(k.cells)}
        assert list(k.cells) == sorted(board)
        for u, a in enumerate(k.cells):
            assert k[u, u] == 0
            for v, b in enumerate(k.cells):
                assert k[u, v] == -k[v, u]
                adjacent = abs(a.row - b.row) + abs(a.col - b.col) == 1
                assert (k[u, v] != 0) == adjacent
                assert k[u, v] in (-1, 0, 1)
        for r, c in board:
            if {Cell(r, c + 1), Cell(r + 1, c), Cell(r + 1, c + 1)} <= board:
                assert _clockwise_count(k, index, r, c) % 2 == 1


@given(st.lists(st.lists(st.integers(-9, 9), min_size=6, max_size=6), min_size=6, max_size=6),
       st.integers(0, 6))
def test_bareiss_matches_rational_elimination(rows, size):
    matrix = [row[:size] for row in rows[:size]]
    assert bareiss_determinant(matrix) == oracles.det_fraction(matrix)


def test_bareiss_needs_pivoting():
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[0, 0], [1, 1]]) == 0
    assert bareiss_determinant([]) == 1


def test_fkt_examples():
    assert count_fkt(Partition(4, 4, 4, 4)) == 36
    assert count_fkt(Partition(4, 3, 2, 1)) == 0
    assert count_fkt(Partition(8, 6, 5, 4, 4, 1)) == 102


@pytest.mark.parametrize("n", range(15))
def test_fkt_equals_brute(n):
    for p in generate_partitions(n):
        assert count_fkt(p) == count_brute(p), p


def test_fkt_odd_boards_vanish():
    for n in (1, 3, 5, 7, 9, 11):
        for p in generate_partitions(n):
            assert count_fkt(p) == 0


def test_fibonacci_family():
    expected = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
    assert [count_brute(Partition(n, n)) for n in range(1, 11)] == expected
    assert [count_fkt(Partition(n, n)) for n in range(1, 11)] == expected


def test_fkt_large_exact():
    # 8x8 board has 12988816 tilings
    assert count_fkt(Partition([8] * 8)) == 12988816
