"""Timing of the all-pairs sweep and a log-log growth fit."""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .eisenstein import Generator
from .network import build
from .panconnectivity import panconnectivity_list, prepare

DEFAULT_ALPHAS = ((2, 3), (3, 4), (4, 5), (5, 6), (6, 7))


@dataclass(frozen=True)
class BenchRow:
    a: int
    b: int
    n: int
    seconds: float


def time_sweep(g: Generator, repeat: int = 1, threads: int = 1) -> BenchRow:
    """Best-of-``repeat`` wall time for ``panconnectivity_list``.

    Network construction and the per-edge candidate table are excluded;
    each repeat uses a fresh network so no cached BFS rows carry over.
    """
    best = float("inf")
    for _ in range(max(1, repeat)):
        net = build(g)
        prepare(net)
        t0 = time.perf_counter()
        panconnectivity_list(net, threads=threads)
        best = min(best, time.perf_counter() - t0)
    return BenchRow(g.a, g.b, g.norm, best)


def loglog_slope(rows: list[BenchRow]) -> float | None:
    if len(rows) < 2:
        return None
    x = np.log([r.n for r in rows])
    y = np.log([r.seconds for r in rows])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def run(alphas, repeat: int = 1, threads: int = 1) -> tuple[list[BenchRow], float | None]:
    rows = [time_sweep(Generator(a, b), repeat, threads) for a, b in alphas]
    return rows, loglog_slope(rows)
