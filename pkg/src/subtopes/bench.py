"""Timing of the closed-form coordinates against an exact solve over ``W(R)``."""

from __future__ import annotations

import csv
import io
import math
import random
import statistics
import time
from dataclasses import dataclass

from .closedform import canonical_intervals, closed_form_xbar
from .cycles import distinguished_cycle, matrix_W
from .errors import DomainError
from .oracle import exact_solve
from .signs import tope_from_negative_part

DEFAULT_SOLVE_CAP = 128
CSV_HEADER = ("t", "rho", "closed_ns", "solve_ns", "speedup")


@dataclass
class BenchRow:
    t: int
    rho: int
    closed_ns: int
    closed_mean_ns: float
    solve_ns: int | None = None
    solve_mean_ns: float | None = None

    @property
    def speedup(self) -> float | None:
        if self.solve_ns is None:
            return None
        return self.solve_ns / max(self.closed_ns, 1)


def random_negative_part(t: int, rng: random.Random) -> set[int]:
    while True:
        A = {e for e in range(1, t + 1) if rng.random() < 0.5}
        if A:
            return A


def _best_of(fn, reps: int) -> tuple[int, float]:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - t0)
    return min(times), statistics.fmean(times)


def run_bench(ts, reps: int = 5, seed: int = 0, solve_cap: int = DEFAULT_SOLVE_CAP) -> list[BenchRow]:
    """Best-of-``reps`` timings per ``t`` on one random negative part each.

    The solve side is skipped (``None``) above ``solve_cap``.
    """
    rng = random.Random(seed)
    rows = []
    for t in ts:
        if t < 2 or t % 2:
            raise DomainError(f"bench needs even t >= 2, got {t}")
        A = random_negative_part(t, rng)
        rho = canonical_intervals(A, t).rho
        best, mean = _best_of(lambda: closed_form_xbar(A, t), reps)
        row = BenchRow(t, rho, best, mean)
        if t <= solve_cap:
            W = matrix_W(distinguished_cycle(t))
            T = tope_from_negative_part(A, t).entries
            expected = closed_form_xbar(A, t)
            if tuple(exact_solve(T, W)) != expected:
                raise AssertionError(f"closed form and exact solve disagree at t={t}")
            row.solve_ns, row.solve_mean_ns = _best_of(lambda: exact_solve(T, W), reps)
        rows.append(row)
    return rows


def loglog_slope(rows: list[BenchRow]) -> float | None:
    """Slope of log(closed_ns) against log(t * rho); about 1 for linear growth."""
    pts = [(math.log(r.t * r.rho), math.log(r.closed_ns)) for r in rows if r.closed_ns > 0]
    if len(pts) < 2 or len({x for x, _ in pts}) < 2:
        return None
    xs, ys = zip(*pts)
    return statistics.linear_regression(xs, ys).slope


def to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        sp = r.speedup
        w.writerow([r.t, r.rho, r.closed_ns, "" if r.solve_ns is None else r.solve_ns, "" if sp is None else f"{sp:.1f}"])
    return buf.getvalue()


def to_text(rows: list[BenchRow], solve_cap: int = DEFAULT_SOLVE_CAP) -> str:
    head = f"{'t':>6} {'rho':>5} {'closed_min_us':>14} {'closed_mean_us':>15} {'solve_min_us':>14} {'speedup':>9}"
    lines = [head]
    for r in rows:
        solve = "-" if r.solve_ns is None else f"{r.solve_ns / 1e3:.1f}"
        sp = "-" if r.speedup is None else f"{r.speedup:.1f}x"
        lines.append(f"{r.t:>6} {r.rho:>5} {r.closed_ns / 1e3:>14.1f} {r.closed_mean_ns / 1e3:>15.1f} {solve:>14} {sp:>9}")
    if any(r.solve_ns is None for r in rows):
        lines.append(f"notice: exact solve omitted for t > {solve_cap}")
    slope = loglog_slope(rows)
    if slope is not None:
        lines.append(f"closed-form log-log slope vs t*rho: {slope:.2f}")
    return "\n".join(lines)
