"""Quality measures of a decomposition: best community and core-size decrease.

``rms`` uses per-level counts (vertices whose core number is exactly k) and
core sizes count vertices with core number >= k, so curves decrease with k.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .decompositions import CoreAssignment
from .graph import Graph, induced_edge_count

Curve = list[tuple[int, float]]


def _require_nonempty(a: CoreAssignment) -> None:
    if len(a) == 0:
        raise ValueError("metric undefined on the empty graph")


def best_level(a: CoreAssignment) -> set[int]:
    _require_nonempty(a)
    top = a.highest
    return {v for v, c in enumerate(a.core_number) if c == top}


def best_level_clique_density(g: Graph, s: Iterable[int]) -> float:
    """Edges inside ``s`` over C(|s|, 2); equals 1 exactly when ``s`` is a clique."""
    s = set(s)
    if len(s) < 2:
        raise ValueError("clique-density needs at least 2 vertices")
    return induced_edge_count(g, s) / (len(s) * (len(s) - 1) // 2)


def level_sizes(a: CoreAssignment) -> dict[int, int]:
    """Number of vertices at each non-empty level, keyed by core number."""
    return dict(sorted(Counter(a.core_number).items()))


def level_number(a: CoreAssignment) -> int:
    _require_nonempty(a)
    return len(set(a.core_number))


def rms(a: CoreAssignment) -> float:
    _require_nonempty(a)
    n = len(a)
    return math.sqrt(sum((c / n) ** 2 for c in level_sizes(a).values()))


def core_size_curve(a: CoreAssignment, distinct_only: bool = False) -> list[tuple[int, int]]:
    """``(k, |{v : core(v) >= k}|)`` for k = 0..highest.

    With ``distinct_only`` the k values that have no vertex at exactly k are
    skipped.
    """
    if len(a) == 0:
        return []
    sizes = level_sizes(a)
    curve = []
    above = len(a)
    for k in range(a.highest + 1):
        if not distinct_only or k in sizes:
            curve.append((k, above))
        above -= sizes.get(k, 0)
    return curve


@dataclass
class DecompositionReport:
    method: str
    best_level_size: float
    best_level_clique_density: float | None  # None when the best level has one vertex
    highest_core_number: float
    level_number: float
    rms: float
    core_size_curve: Curve
    distinct_core_size_curve: Curve

    SCALARS = (
        "best_level_size",
        "best_level_clique_density",
        "highest_core_number",
        "level_number",
        "rms",
    )


def report(g: Graph, a: CoreAssignment) -> DecompositionReport:
    _require_nonempty(a)
    best = best_level(a)
    return DecompositionReport(
        method=a.method,
        best_level_size=len(best),
        best_level_clique_density=best_level_clique_density(g, best) if len(best) >= 2 else None,
        highest_core_number=a.highest,
        level_number=level_number(a),
        rms=rms(a),
        core_size_curve=core_size_curve(a),
        distinct_core_size_curve=core_size_curve(a, distinct_only=True),
    )


def _mean_curve(curves: Sequence[Curve]) -> Curve:
    # a graph peeled before k contributes size 0 at k
    top = max((k for c in curves for k, _ in c), default=-1)
    totals = [0.0] * (top + 1)
    for c in curves:
        for k, size in c:
            totals[k] += size
    return [(k, t / len(curves)) for k, t in enumerate(totals)]


def aggregate_means(reports: Sequence[DecompositionReport]) -> dict[str, DecompositionReport]:
    """Mean report per method.

    Clique-density is averaged over the reports where it is defined; it stays
    ``None`` if it is defined for none of them. Only the full core-size curve
    is averaged; the distinct-only curve of a mean report is left empty.
    """
    if not reports:
        raise ValueError("cannot aggregate an empty list of reports")
    by_method: dict[str, list[DecompositionReport]] = {}
    for r in reports:
        by_method.setdefault(r.method, []).append(r)
    out = {}
    for method, group in by_method.items():
        means = {}
        for name in DecompositionReport.SCALARS:
            values = [getattr(r, name) for r in group if getattr(r, name) is not None]
            means[name] = sum(values) / len(values) if values else None
        out[method] = DecompositionReport(
            method=method,
            core_size_curve=_mean_curve([r.core_size_curve for r in group]),
            distinct_core_size_curve=[],
            **means,
        )
    return out


def _fmt(x) -> str:
    return "" if x is None else repr(x)


REPORT_HEADER = "graph_id,method," + ",".join(DecompositionReport.SCALARS)


def write_reports_csv(rows: Iterable[tuple[object, DecompositionReport]], fh: TextIO) -> None:
    """One row per (graph, method); an undefined clique-density is written as an empty field."""
    fh.write(REPORT_HEADER + "\n")
    for graph_id, r in rows:
        values = ",".join(_fmt(getattr(r, name)) for name in DecompositionReport.SCALARS)
        fh.write(f"{graph_id},{r.method},{values}\n")


def write_curves_csv(
    rows: Iterable[tuple[object, DecompositionReport]], fh: TextIO, distinct: bool = False
) -> None:
    fh.write("graph_id,method,k,size\n")
    for graph_id, r in rows:
        curve = r.distinct_core_size_curve if distinct else r.core_size_curve
        for k, size in curve:
            fh.write(f"{graph_id},{r.method},{k},{_fmt(size)}\n")
