import collections
import random

import pytest
from scipy import stats

import oracles
from ferrotile.harness import (
    bench,
    check_board,
    partition_count,
    random_partition,
    sweep,
    worker_count,
)
from ferrotile.partitions import Partition, generate_partitions


def test_partition_count_table():
    for n in range(21):
        assert partition_count(n) == oracles.partition_count_dp(n)


def test_random_partition_trivial():
    for seed in range(5):
        assert random_partition(1, seed) == Partition(1)


def test_random_partition_deterministic():
    assert random_partition(30, 42) == random_partition(30, 42)
    with pytest.raises(ValueError):
        random_partition(0, 1)


def test_random_partition_uniform_on_five():
    rng = random.Random(2024)
    draws = collections.Counter(random_partition(5, rng) for _ in range(7000))
    assert set(draws) == set(generate_partitions(5))
    for p, k in draws.items():
        assert abs(k / 7000 - 1 / 7) <= 0.02, (p, k)
    assert stats.chisquare(list(draws.values())).pvalue > 0.001


def test_random_partition_valid():
    rng = random.Random(0)
    for n in range(1, 60):
        p = random_partition(n, rng)
        assert p.size == n


def test_check_board_reports_each_engine():
    c = check_board(Partition(8, 6, 5, 4, 4, 1))
    assert c.ok and c.balanced and c.tiled and c.perfect_matching
    assert c.brute == c.fkt == 102
    assert c.case4_entries >= 1
    c = check_board(Partition(4, 3, 2, 1))
    assert c.ok and not c.tiled and c.fkt == 0 and c.hall is None


def test_sweep_small_threaded(monkeypatch):
    monkeypatch.setenv("FERROTILE_THREADS", "3")
    assert worker_count() == 3
    threaded = sweep(9)
    serial = sweep(9, workers=1)
    assert threaded.ok
    assert [c.partition for c in threaded.checks] == [c.partition for c in serial.checks]
    assert [c.fkt for c in threaded.checks] == [c.fkt for c in serial.checks]


def test_worker_count_bad_env(monkeypatch):
    monkeypatch.setenv("FERROTILE_THREADS", "many")
    assert worker_count() >= 1


def test_bench_rows():
    rows = bench(6, seed=1)
    backends = {b for _, _, b, _ in rows}
    assert backends == {"recursive", "matching", "fkt", "brute"}
    assert all(us >= 0 for *_, us in rows)
    assert [n for n, *_ in rows] == sorted(n for n, *_ in rows)
    assert [r[:3] for r in bench(6, seed=1)] == [r[:3] for r in rows]


def test_bench_skips_brute_when_large():
    rows = bench(45, seed=3, backends=["brute", "fkt"])
    assert not any(b == "brute" and n > 40 for n, _, b, _ in rows)
