"""Execution-time measurement of the peelers and fitted growth exponents."""

from __future__ import annotations

import gc
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence, TextIO

import numpy as np

from .decompositions import METHODS, decompose
from .generators import random_gnp

MIN_FIT_POINTS = 4


@dataclass(frozen=True)
class TimingRow:
    n: int
    method: str
    mean_seconds: float
    samples: int

    @property
    def per_n2(self) -> float:
        return self.mean_seconds / self.n**2

    @property
    def per_n3(self) -> float:
        return self.mean_seconds / self.n**3


@dataclass
class TimingTable:
    rows: list[TimingRow] = field(default_factory=list)

    def methods(self) -> list[str]:
        return list(dict.fromkeys(r.method for r in self.rows))

    def series(self, method: str) -> tuple[np.ndarray, np.ndarray]:
        rows = sorted((r for r in self.rows if r.method == method), key=lambda r: r.n)
        return np.array([r.n for r in rows], float), np.array([r.mean_seconds for r in rows])

    def write_csv(self, fh: TextIO) -> None:
        fh.write("n,method,mean_seconds,per_n2,per_n3\n")
        for r in self.rows:
            fh.write(f"{r.n},{r.method},{r.mean_seconds!r},{r.per_n2!r},{r.per_n3!r}\n")


def _time_one(fn: Callable, *args) -> float:
    start = time.perf_counter()
    fn(*args)
    return time.perf_counter() - start


def time_methods(
    n_values: Sequence[int],
    samples: int,
    p: float = 0.5,
    seed: int = 0,
    methods: Sequence[str] = METHODS,
    rounds: int | None = None,
) -> TimingTable:
    """Mean wall time of each method on ``samples`` random G(n, p) graphs per ``n``.

    Graph ``i`` at size ``n`` uses seed ``seed + i``. Samples are split into
    ``rounds`` slices and every (n, method) cell gets one slice per round, so
    slow drift of the machine spreads evenly over the table instead of
    skewing the largest ``n``. Only the decomposition call is inside the timed
    region; garbage collection is paused while timing.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if not n_values:
        raise ValueError("n_values must be non-empty")
    rounds = max(1, min(samples, rounds if rounds is not None else 10))
    bounds = np.linspace(0, samples, rounds + 1).astype(int)
    totals = {(n, m): 0.0 for n in n_values for m in methods}

    for n in n_values:
        warm = random_gnp(n, p, seed)
        for m in methods:
            decompose(warm, m)

    for r in range(rounds):
        for n in n_values:
            graphs = [random_gnp(n, p, seed + i) for i in range(bounds[r], bounds[r + 1])]
            for m in methods:
                gc.collect()
                gc.disable()
                try:
                    totals[n, m] += sum(_time_one(decompose, g, m) for g in graphs)
                finally:
                    gc.enable()

    return TimingTable(
        [TimingRow(n, m, totals[n, m] / samples, samples) for n in n_values for m in methods]
    )


def fit_exponent(ns: Sequence[float], times: Sequence[float]) -> float:
    """Least-squares slope of log(time) against log(n)."""
    ns = np.asarray(ns, float)
    times = np.asarray(times, float)
    if len(np.unique(ns)) < MIN_FIT_POINTS:
        raise ValueError(f"need at least {MIN_FIT_POINTS} distinct n values to fit an exponent")
    if np.any(times <= 0):
        raise ValueError("times must be positive")
    slope, _ = np.polyfit(np.log(ns), np.log(times), 1)
    return float(slope)


def complexity_check(table: TimingTable) -> dict[str, float]:
    return {m: fit_exponent(*table.series(m)) for m in table.methods()}


def write_exponents_csv(exponents: dict[str, float], fh: TextIO) -> None:
    fh.write("method,exponent\n")
    for m, e in exponents.items():
        fh.write(f"{m},{e!r}\n")
