"""Cross-engine equivalence sweep, benchmark and random board generator."""

from __future__ import annotations

import logging
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from . import matching
from .counting import BRUTE_LIMIT, count_brute, count_fkt
from .partitions import (
    Cell,
    Color,
    Partition,
    color_of,
    color_summary,
    generate_partitions,
    row_labels,
)
from .tiler import StepOutcome, Untileable, tile, validate_tiling

__all__ = [
    "BoardCheck",
    "SweepReport",
    "bench",
    "case4_violations",
    "check_board",
    "partition_count",
    "random_partition",
    "sweep",
    "worker_count",
]

log = logging.getLogger(__name__)

THREADS_ENV = "FERROTILE_THREADS"


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            log.warning("ignoring non-integer %s=%r", THREADS_ENV, raw)
    return min(4, os.cpu_count() or 1)


def _ordered_map(fn: Callable, items: list, workers: int | None) -> list:
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@lru_cache(maxsize=None)
def partition_count(n: int, largest: int | None = None) -> int:
    """Partitions of ``n`` with every part at most ``largest``."""
    if largest is None or largest > n:
        largest = n
    if n == 0:
        return 1
    if largest == 0:
        return 0
    return partition_count(n, largest - 1) + partition_count(n - largest, largest)


def random_partition(n: int, seed: int | random.Random) -> Partition:
    """Exactly uniform random partition of ``n``.

    Parts are drawn largest first: with ``remaining`` cells left and parts
    capped at ``cap``, the next part is ``j`` with probability
    ``partition_count(remaining - j, j) / partition_count(remaining, cap)``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    parts = []
    remaining, cap = n, n
    while remaining:
        ticket = rng.randrange(partition_count(remaining, cap))
        for j in range(min(cap, remaining), 0, -1):
            weight = partition_count(remaining - j, j)
            if ticket < weight:
                break
            ticket -= weight
        parts.append(j)
        remaining -= j
        cap = j
    return Partition(parts)


def case4_violations(step: StepOutcome) -> list[str]:
    """Problems with an OddSplit step's input board, checked from scratch."""
    p = step.board
    parts = p.parts
    problems = []
    if len(parts) % 2 == 0:
        problems.append("left column even")
    if parts[0] % 2 == 0:
        problems.append("top row even")
    if parts[-1] != 1:
        problems.append("bottom row has more than one cell")
    elif color_of(Cell(len(parts), 1)) is not Color.BLACK:
        problems.append("bottom cell not black")
    labels = row_labels(p)
    if 0 not in labels[:-1]:
        problems.append("no zero-labelled row before the last")
    return problems


@dataclass
class BoardCheck:
    partition: Partition
    balanced: bool
    tiled: bool
    perfect_matching: bool
    brute: int | None
    fkt: int
    hall: bool | None
    case4_entries: int = 0
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


def check_board(p: Partition, hall_limit: int = matching.HALL_LIMIT) -> BoardCheck:
    """Run every engine on one board and record any disagreement."""
    problems: list[str] = []
    balanced = color_summary(p).imbalance == 0

    trace: list[StepOutcome] = []
    try:
        t = tile(p, trace)
        tiled = True
        if not validate_tiling(p, t):
            problems.append("recursive tiling invalid")
    except Untileable:
        tiled = False
    odd_steps = [s for s in trace if s.case_id == "OddSplit"]
    for step in odd_steps:
        problems.extend(f"case4 {step.board}: {v}" for v in case4_violations(step))

    g = matching.build_graph(p)
    m = matching.max_matching(g)
    perfect = matching.is_perfect(g, m)
    if perfect and not validate_tiling(p, matching.matching_to_tiling(p, m)):
        problems.append("matching tiling invalid")

    brute = count_brute(p) if p.size <= BRUTE_LIMIT else None
    fkt = count_fkt(p)
    if brute is not None and brute != fkt:
        problems.append(f"fkt {fkt} != brute {brute}")

    hall = None
    if balanced and len(g.left) <= hall_limit:
        hall = matching.hall_check(g, hall_limit).satisfied
        if not hall:
            problems.append("hall condition fails on a balanced board")

    verdicts = {
        "balanced": balanced,
        "tiled": tiled,
        "perfect": perfect,
        "fkt>0": fkt > 0,
    }
    if brute is not None:
        verdicts["brute>0"] = brute > 0
    if len(set(verdicts.values())) != 1:
        problems.append(
            "disagreement: " + " ".join(f"{k}={v}" for k, v in verdicts.items())
        )
    return BoardCheck(p, balanced, tiled, perfect, brute, fkt, hall, len(odd_steps), problems)


@dataclass
class SweepReport:
    max_n: int
    checks: list[BoardCheck]

    @property
    def boards(self) -> int:
        return len(self.checks)

    @property
    def failures(self) -> list[BoardCheck]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary_lines(self) -> list[str]:
        balanced = sum(c.balanced for c in self.checks)
        lines = [
            f"max_n={self.max_n} boards={self.boards} balanced={balanced} "
            f"case4_entries={sum(c.case4_entries for c in self.checks)} "
            f"hall_checked={sum(c.hall is not None for c in self.checks)} "
            f"failures={len(self.failures)}"
        ]
        for c in self.failures:
            lines.append(f"FAIL {c.partition}: {'; '.join(c.problems)}")
        return lines


def sweep(
    max_n: int,
    workers: int | None = None,
    hall_limit: int = matching.HALL_LIMIT,
) -> SweepReport:
    """Check every partition of every ``n <= max_n``, in generation order."""
    boards = [p for n in range(max_n + 1) for p in generate_partitions(n)]
    checks = _ordered_map(lambda p: check_board(p, hall_limit), boards, workers)
    return SweepReport(max_n, checks)


def _run_recursive(p: Partition):
    try:
        return tile(p)
    except Untileable:
        return None


def _run_matching(p: Partition):
    return matching.max_matching(matching.build_graph(p))


BACKENDS: dict[str, Callable[[Partition], object]] = {
    "recursive": _run_recursive,
    "matching": _run_matching,
    "fkt": count_fkt,
    "brute": count_brute,
}


def _time_us(fn: Callable, p: Partition) -> float:
    fn(p)  # warmup, discarded
    start = time.perf_counter_ns()
    fn(p)
    return (time.perf_counter_ns() - start) / 1000


def bench(
    max_n: int,
    seed: int,
    backends: Iterable[str] = BACKENDS,
    workers: int = 1,
) -> list[tuple[int, str, str, float]]:
    """Time each backend on one random partition per ``n`` in ``1..max_n``.

    Rows are ``(n, parts, backend, microseconds)``; brute force is skipped
    above its cell limit. Timings are serial unless ``workers`` > 1.
    """
    rng = random.Random(seed)
    boards = [(n, random_partition(n, rng)) for n in range(1, max_n + 1)]
    names = list(backends)

    def run(item):
        n, p = item
        rows = []
        for name in names:
            if name == "brute" and p.size > BRUTE_LIMIT:
                continue
            rows.append((n, str(p), name, _time_us(BACKENDS[name], p)))
        return rows

    return [row for rows in _ordered_map(run, boards, workers) for row in rows]
