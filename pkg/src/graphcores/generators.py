"""Graph populations: every labelled graph on n vertices, seeded G(n, p), or a SNAP file.

Random graphs use numpy's PCG64 generator seeded with the integer seed; each
of the C(n, 2) edge slots, in lexicographic order, consumes one uniform draw.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

from .graph import Graph, read_snap

EXHAUSTIVE_CAP = 6
EXHAUSTIVE_HARD_CAP = 7


def edge_slots(n: int) -> list[tuple[int, int]]:
    """The C(n, 2) vertex pairs in lexicographic order (0,1), (0,2), ..., (n-2, n-1)."""
    return list(combinations(range(n), 2))


def population_size(n: int) -> int:
    return 2 ** (n * (n - 1) // 2)


def graph_from_mask(n: int, mask: int, slots: list[tuple[int, int]] | None = None) -> Graph:
    """Graph whose edge slot ``i`` is present iff bit ``i`` of ``mask`` is set."""
    slots = edge_slots(n) if slots is None else slots
    return Graph.from_edges(n, (e for i, e in enumerate(slots) if mask >> i & 1))


def exhaustive_stream(n: int, cap: int = EXHAUSTIVE_CAP) -> Iterator[Graph]:
    """Yield all 2^C(n,2) labelled graphs on ``n`` vertices, graph ``i`` built from bitmask ``i``."""
    _check_exhaustive(n, cap)
    slots = edge_slots(n)
    for mask in range(population_size(n)):
        yield graph_from_mask(n, mask, slots)


def _check_exhaustive(n: int, cap: int) -> None:
    if cap > EXHAUSTIVE_HARD_CAP:
        raise ValueError(f"exhaustive cap may be raised to at most {EXHAUSTIVE_HARD_CAP}")
    if n < 1:
        raise ValueError("exhaustive enumeration needs n >= 1")
    if n > cap:
        raise ValueError(
            f"exhaustive n={n} refused: {population_size(n):,} graphs exceeds cap n <= {cap}"
        )
    if n > EXHAUSTIVE_CAP:
        warnings.warn(
            f"enumerating {population_size(n):,} graphs on {n} vertices; this takes a long time",
            stacklevel=3,
        )


def random_gnp(n: int, p: float, seed: int) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    if n < 1:
        raise ValueError("random graph needs n >= 1")
    slots = edge_slots(n)
    draws = np.random.default_rng(seed).random(len(slots))
    return Graph.from_edges(n, (e for e, x in zip(slots, draws) if x < p))


@dataclass(frozen=True)
class SampleSpec:
    kind: str  # "exhaustive" | "random" | "file"
    n: int = 0
    p: float = 0.5
    count: int = 1
    seed: int = 0
    path: str | None = None
    cap: int = EXHAUSTIVE_CAP

    def __post_init__(self):
        if self.kind == "exhaustive":
            _check_exhaustive(self.n, self.cap)
        elif self.kind == "random":
            if not 0.0 <= self.p <= 1.0:
                raise ValueError(f"edge probability {self.p} outside [0, 1]")
            if self.count < 1:
                raise ValueError("sample count must be >= 1")
            if self.n < 1:
                raise ValueError("random graphs need n >= 1")
        elif self.kind == "file":
            if not self.path:
                raise ValueError("file sample needs a path")
        else:
            raise ValueError(f"unknown sample kind {self.kind!r}")

    @classmethod
    def exhaustive(cls, n: int, cap: int = EXHAUSTIVE_CAP) -> SampleSpec:
        return cls("exhaustive", n=n, cap=cap)

    @classmethod
    def random(cls, n: int, p: float, count: int, seed: int) -> SampleSpec:
        return cls("random", n=n, p=p, count=count, seed=seed)

    @classmethod
    def file(cls, path: str) -> SampleSpec:
        return cls("file", path=path)

    def __len__(self) -> int:
        if self.kind == "exhaustive":
            return population_size(self.n)
        return self.count if self.kind == "random" else 1

    def describe(self) -> dict:
        if self.kind == "exhaustive":
            return {"kind": "exhaustive", "n": self.n}
        if self.kind == "random":
            return {"kind": "random", "n": self.n, "p": self.p, "count": self.count, "seed": self.seed}
        return {"kind": "file", "path": self.path}


def sample_graph(spec: SampleSpec, graph_id: int) -> Graph:
    """Regenerate a single member of the population by id."""
    if spec.kind == "exhaustive":
        return graph_from_mask(spec.n, graph_id)
    if spec.kind == "random":
        return random_gnp(spec.n, spec.p, spec.seed + graph_id)
    return read_snap(spec.path)


def sample_stream(spec: SampleSpec) -> Iterator[tuple[int, Graph]]:
    if spec.kind == "exhaustive":
        yield from enumerate(exhaustive_stream(spec.n, spec.cap))
    elif spec.kind == "random":
        for i in range(spec.count):
            yield i, random_gnp(spec.n, spec.p, spec.seed + i)
    else:
        yield 0, read_snap(spec.path)
