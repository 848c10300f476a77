"""Command-line front end.

Exit codes: 0 success (or "yes, tileable"), 1 the domain answer "no",
2 bad input or an out-of-bound request.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import counting, harness, matching
from .partitions import PartitionError, color_summary, parse_partition
from .render import render_ascii
from .tiler import StepOutcome, Untileable, tile, tiling_to_json

__all__ = ["CommandOutcome", "main", "run"]

SWEEP_MAX_N = 30
BENCH_MAX_N = 100

OK, NO, USAGE = 0, 1, 2


@dataclass(frozen=True)
class CommandOutcome:
    exit_code: int
    stdout_payload: str


class _UsageError(Exception):
    pass


class _Help(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")

    def print_help(self, file=None):
        raise _Help(self.format_help())


def _partition(text: str):
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("ascii", "json"), default=argparse.SUPPRESS
    )
    parser = _Parser(prog="ferrotile", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def board_command(name, help):
        cmd = sub.add_parser(name, parents=[common], help=help)
        cmd.add_argument("partition", type=_partition)
        return cmd

    board_command("check", "report black/white counts")
    cmd = board_command("tile", "tile with the recursive algorithm")
    cmd.add_argument("--trace", action="store_true", help="print each step")
    cmd = board_command("count", "count tilings")
    cmd.add_argument("--method", choices=("fkt", "brute"), default="fkt")
    cmd = board_command("enumerate", "list tilings")
    cmd.add_argument("--limit", type=_positive)
    board_command("hall", "exhaustive Hall condition check")

    cmd = sub.add_parser("sweep", parents=[common], help="cross-engine equivalence")
    cmd.add_argument("--max-n", type=int, required=True)
    cmd = sub.add_parser("bench", parents=[common], help="time each backend")
    cmd.add_argument("--max-n", type=int, required=True)
    cmd.add_argument("--seed", type=int, required=True)
    return parser


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _check(args, as_json):
    s = color_summary(args.partition)
    code = OK if s.imbalance == 0 else NO
    if as_json:
        payload = {
            "partition": str(args.partition),
            "black": s.black,
            "white": s.white,
            "imbalance": s.imbalance,
            "tileable": s.imbalance == 0,
        }
        return code, [_dumps(payload)]
    lines = [f"black={s.black} white={s.white} imbalance={s.imbalance}"]
    lines.append("tileable" if code == OK else "untileable")
    return code, lines


def _tile(args, as_json):
    p = args.partition
    trace: list[StepOutcome] = []
    try:
        t = tile(p, trace)
    except Untileable as exc:
        if as_json:
            return NO, [_dumps({"partition": str(p), "imbalance": exc.imbalance})]
        return NO, [f"untileable imbalance={exc.imbalance}"]
    if as_json:
        return OK, [_dumps(tiling_to_json(t))]
    lines = render_ascii(p, t)
    if args.trace:
        lines += [s.trace_line() for s in trace]
    return OK, lines


def _count(args, as_json):
    p = args.partition
    if args.method == "brute":
        try:
            value = counting.count_brute(p)
        except counting.TooLarge as exc:
            raise _UsageError(str(exc)) from None
    else:
        value = counting.count_fkt(p)
    if as_json:
        payload = {"partition": str(p), "method": args.method, "count": str(value)}
        return OK, [_dumps(payload)]
    return OK, [str(value)]


def _enumerate(args, as_json):
    p = args.partition
    lines: list[str] = []
    found = 0
    for t in counting.enumerate_tilings(p, args.limit):
        found += 1
        if as_json:
            lines.append(_dumps(tiling_to_json(t)))
        else:
            if found > 1:
                lines.append("")
            lines += render_ascii(p, t)
    return (OK if found else NO), lines


def _hall(args, as_json):
    g = matching.build_graph(args.partition)
    try:
        report = matching.hall_check(g)
    except matching.Unbalanced as exc:
        if as_json:
            return NO, [_dumps({"partition": str(args.partition), "error": str(exc)})]
        return NO, [f"unbalanced: {exc}"]
    except matching.TooLarge as exc:
        raise _UsageError(str(exc)) from None
    code = OK if report.satisfied else NO
    if as_json:
        payload = {
            "partition": str(args.partition),
            "satisfied": report.satisfied,
            "min_slack": report.min_slack,
            "witness": [list(g.left[u]) for u in report.witness],
        }
        return code, [_dumps(payload)]
    return code, [report.describe(g)]


def _sweep(args, as_json):
    if not 0 <= args.max_n <= SWEEP_MAX_N:
        raise _UsageError(f"--max-n must be in 0..{SWEEP_MAX_N}")
    report = harness.sweep(args.max_n)
    code = OK if report.ok else NO
    if as_json:
        payload = {
            "max_n": report.max_n,
            "boards": report.boards,
            "failures": [
                {"partition": str(c.partition), "problems": c.problems}
                for c in report.failures
            ],
            "ok": report.ok,
        }
        return code, [_dumps(payload)]
    return code, report.summary_lines()


def _bench(args, as_json):
    if not 1 <= args.max_n <= BENCH_MAX_N:
        raise _UsageError(f"--max-n must be in 1..{BENCH_MAX_N}")
    workers = harness.worker_count() if harness.THREADS_ENV in os.environ else 1
    rows = harness.bench(args.max_n, args.seed, workers=workers)
    if as_json:
        return OK, [
            _dumps({"n": n, "parts": parts, "backend": b, "us": round(us, 3)})
            for n, parts, b, us in rows
        ]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "parts", "backend", "us"])
    for n, parts, b, us in rows:
        writer.writerow([n, parts, b, f"{us:.3f}"])
    return OK, buf.getvalue().splitlines()


_COMMANDS = {
    "check": _check,
    "tile": _tile,
    "count": _count,
    "enumerate": _enumerate,
    "hall": _hall,
    "sweep": _sweep,
    "bench": _bench,
}


def run(argv: Sequence[str]) -> CommandOutcome:
    """Execute one command and capture its output instead of printing it."""
    try:
        args = _build_parser().parse_args(list(argv))
        as_json = getattr(args, "format", "ascii") == "json"
        code, lines = _COMMANDS[args.command](args, as_json)
    except _Help as exc:
        return CommandOutcome(OK, str(exc))
    except _UsageError as exc:
        return CommandOutcome(USAGE, f"{exc}\n")
    payload = "".join(f"{line}\n" for line in lines)
    return CommandOutcome(code, payload)


def main(argv: Sequence[str] | None = None) -> int:
    outcome = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if outcome.exit_code == USAGE else sys.stdout
    stream.write(outcome.stdout_payload)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
