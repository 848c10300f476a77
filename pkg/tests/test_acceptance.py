"""Exit criteria. Each test prints one PASS/FAIL line; all are exact."""

import time

import oracles
from ferrotile.counting import count_brute, count_fkt, enumerate_tilings
from ferrotile.harness import case4_violations, sweep
from ferrotile.matching import (
    BipartiteGraph,
    build_graph,
    hall_check,
    is_perfect,
    max_matching,
    neighborhood,
)
from ferrotile.partitions import Partition, color_summary, generate_partitions, is_staircase
from ferrotile.tiler import Untileable, tile, validate_tiling


def test_equivalence_sweep(criterion):
    start = time.perf_counter()
    report = sweep(14)
    elapsed = time.perf_counter() - start
    expected_boards = sum(oracles.partition_count_dp(n) for n in range(15))
    disagreements = [
        c.partition
        for c in report.checks
        if len({c.balanced, c.tiled, c.perfect_matching, c.brute > 0}) != 1
    ]
    ok = (
        report.ok
        and not disagreements
        and report.boards == expected_boards
        and elapsed < 30
    )
    criterion(ok, f"boards={report.boards} failures={len(report.failures)} seconds={elapsed:.2f}")


def test_example_board_replay(criterion):
    p = Partition(8, 6, 5, 4, 4, 1)
    trace = []
    t = tile(p, trace)
    cases = [s.case_id for s in trace]
    ok = len(t) == 14 and validate_tiling(p, t) and cases[:2] == ["Left", "Bottom"]
    criterion(ok, f"dominoes={len(t)} first_cases={cases[:2]}")


def test_staircases_untileable(criterion):
    stairs = [p for n in range(21) for p in generate_partitions(n) if is_staircase(p)]
    bad = []
    for p in stairs:
        try:
            tile(p)
            bad.append((p, "tiled"))
        except Untileable:
            pass
        g = build_graph(p)
        if is_perfect(g, max_matching(g)):
            bad.append((p, "matching"))
        if count_brute(p) or count_fkt(p) or next(enumerate_tilings(p), None):
            bad.append((p, "count"))
    criterion(bool(stairs) and not bad, f"staircases={len(stairs)} violations={len(bad)}")


def test_fkt_equals_brute(criterion):
    boards = [p for n in range(15) for p in generate_partitions(n)]
    boards += [Partition(4, 4, 4, 4), Partition(8, 6, 5, 4, 4, 1)]
    bad = [p for p in boards if count_fkt(p) != count_brute(p)]
    extra = (count_fkt(boards[-2]), count_fkt(boards[-1]))
    criterion(not bad, f"boards={len(boards)} mismatches={len(bad)} 4^4={extra[0]} ex3={extra[1]}")


def test_fibonacci_family(criterion):
    expected = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89]
    brute = [count_brute(Partition(n, n)) for n in range(1, 11)]
    fkt = [count_fkt(Partition(n, n)) for n in range(1, 11)]
    criterion(brute == fkt == expected, f"counts={fkt}")


def _mutated_graphs():
    """Ferrers board graphs with a chosen left set squeezed onto too few rights."""
    made = []
    for n in range(4, 15, 2):
        for p in generate_partitions(n):
            g = build_graph(p)
            if color_summary(p).imbalance or len(g.left) < 3:
                continue
            adjacency = [set(a) for a in g.adjacency]
            k = 2 + len(made) % 2
            squeeze = list(range(len(g.left)))[-k:]
            target = sorted(set().union(*(adjacency[u] for u in squeeze)))[: k - 1]
            for u in squeeze:
                adjacency[u] = set(target)
            made.append((BipartiteGraph(g.left, g.right, adjacency), tuple(squeeze)))
            if len(made) == 30:
                return made
    return made


def test_hall_biconditional(criterion):
    ferrers_bad = []
    checked = 0
    for n in range(25):
        for p in generate_partitions(n):
            s = color_summary(p)
            if s.imbalance or s.black > 12:
                continue
            checked += 1
            if not hall_check(build_graph(p)).satisfied:
                ferrers_bad.append(p)

    mutated = _mutated_graphs()
    mutated_bad = []
    for g, deficient in mutated:
        report = hall_check(g)
        witness_slack = len(neighborhood(g, report.witness)) - len(report.witness)
        known_slack = len(neighborhood(g, deficient)) - len(deficient)
        ok = (
            known_slack < 0
            and report.min_slack < 0
            and not report.satisfied
            and witness_slack == report.min_slack
            and report.min_slack <= known_slack
            and report.min_slack == oracles.hall_min_slack([set(a) for a in g.adjacency])
            and not is_perfect(g, max_matching(g))
        )
        if not ok:
            mutated_bad.append(deficient)
    ok = not ferrers_bad and len(mutated) >= 20 and not mutated_bad
    criterion(
        ok,
        f"ferrers_checked={checked} ferrers_fail={len(ferrers_bad)} "
        f"mutated={len(mutated)} mutated_fail={len(mutated_bad)}",
    )


def test_partition_generator(criterion):
    listed = {(1, 1, 1, 1, 1), (2, 1, 1, 1), (2, 2, 1), (3, 1, 1), (3, 2), (4, 1), (5,)}
    five = [p.parts for p in generate_partitions(5)]
    counts = [len(generate_partitions(n)) for n in range(21)]
    dp = [oracles.partition_count_dp(n) for n in range(21)]
    ok = len(five) == 7 and set(five) == listed and counts == dp
    criterion(ok, f"p(5)={len(five)} p(20)={counts[20]}")


def test_case4_invariants(criterion):
    entries = 0
    violations = []
    for n in range(15):
        for p in generate_partitions(n):
            if color_summary(p).imbalance:
                continue
            trace = []
            tile(p, trace)
            for step in trace:
                if step.case_id == "OddSplit":
                    entries += 1
                    violations += case4_violations(step)
    criterion(entries > 0 and not violations, f"entries={entries} violations={len(violations)}")
