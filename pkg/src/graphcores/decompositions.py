"""Peeling decompositions: k-core, triangle k-core (k-truss), vertex triangle k-core.

The three peelers follow the same worklist shape: an outer loop raising the
threshold ``k``, a queue of unprocessed elements seeded with everything still
alive, and counters that are decremented when a neighbor is removed. The queue
deduplicates: an element already pending is not enqueued a second time.

:func:`p_core_decompose` is the generic engine for any monotone vertex
property function, and :func:`oracle_core_numbers` recomputes every core by
brute-force rescans so the peelers can be checked against it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence, TextIO

from .graph import Edge, Graph

KCORE = "kcore"
TRICORE = "tricore"
VTRICORE = "vtricore"
METHODS = (KCORE, TRICORE, VTRICORE)

ORACLE_CAP = 12


@dataclass(frozen=True)
class CoreAssignment:
    method: str
    core_number: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.core_number)

    def __getitem__(self, v: int) -> int:
        return self.core_number[v]

    @property
    def highest(self) -> int:
        return max(self.core_number)

    def core(self, k: int) -> set[int]:
        """Vertices whose core number is at least ``k``."""
        return {v for v, c in enumerate(self.core_number) if c >= k}

    def write_csv(self, g: Graph, fh: TextIO) -> None:
        fh.write("vertex,core_number\n")
        for label, v in _by_label(g):
            fh.write(f"{label},{self.core_number[v]}\n")


@dataclass(frozen=True)
class EdgeLevelAssignment:
    """Triangle-core level of every edge; the edge's trussness is ``level + 2``."""

    level: dict[Edge, int]

    def edges_at_least(self, k: int) -> set[Edge]:
        return {e for e, lv in self.level.items() if lv >= k}

    def write_csv(self, g: Graph, fh: TextIO) -> None:
        fh.write("u,v,level\n")
        rows = []
        for (u, v), lv in self.level.items():
            a, b = g.label(u), g.label(v)
            if _label_key(b) < _label_key(a):
                a, b = b, a
            rows.append((_label_key(a), _label_key(b), a, b, lv))
        for *_, a, b, lv in sorted(rows):
            fh.write(f"{a},{b},{lv}\n")


def _label_key(label) -> tuple:
    # ints sort numerically, everything else by its string form after them
    return (0, label, "") if isinstance(label, int) else (1, 0, str(label))


def _by_label(g: Graph) -> list[tuple[object, int]]:
    return sorted(((g.label(v), v) for v in range(g.n)), key=lambda t: _label_key(t[0]))


# -- worklist peelers ------------------------------------------------------
#
# Live adjacency is kept as ascending lists; common neighbors come from a
# linear merge, so one intersection costs O(d(u) + d(v)).


def _common(a: list[int], b: list[int]) -> list[int]:
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return out


def _edge_degrees(n: int, edges: list[Edge]) -> list[int]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def k_core_decompose(g: Graph) -> CoreAssignment:
    n = g.n
    adj = g.adjacency
    deg = _edge_degrees(n, g.edges())
    alive = [True] * n
    core = [0] * n
    # queue drains fully each round, so pending is all False between rounds
    pending = [False] * n
    queue: deque[int] = deque()
    remaining = list(range(n))
    k = 0
    while remaining:
        k += 1
        queue.extend(remaining)
        for v in remaining:
            pending[v] = True
        while queue:
            v = queue.popleft()
            pending[v] = False
            if not alive[v] or deg[v] >= k:
                continue
            for w in adj[v]:
                if alive[w]:
                    deg[w] -= 1
                    if not pending[w]:
                        pending[w] = True
                        queue.append(w)
            core[v] = k - 1
            alive[v] = False
        remaining = [v for v in remaining if alive[v]]
    return CoreAssignment(KCORE, tuple(core))


def triangle_core_decompose(g: Graph) -> tuple[CoreAssignment, EdgeLevelAssignment]:
    """Peel edges by triangle support.

    Returns vertex core numbers (the highest level among incident edges, 0 for
    isolated vertices) together with the per-edge levels.
    """
    n = g.n
    edges = g.edges()
    m = len(edges)
    eid: list[dict[int, int]] = [{} for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        eid[u][v] = i
        eid[v][u] = i
    nbrs = [list(row) for row in g.adjacency]
    deg = _edge_degrees(n, edges)
    support = [0] * m
    for e, (u, v) in enumerate(edges):
        a, b = nbrs[u], nbrs[v]
        i = j = c = 0
        la, lb = len(a), len(b)
        while i < la and j < lb:
            x, y = a[i], b[j]
            if x == y:
                c += 1
                i += 1
                j += 1
            elif x < y:
                i += 1
            else:
                j += 1
        support[e] = c
    alive = [True] * m
    level = [0] * m
    core = [0] * n
    pending = [False] * m
    queue: deque[int] = deque()
    remaining = list(range(m))
    k = 0
    while remaining:
        k += 1
        queue.extend(remaining)
        for e in remaining:
            pending[e] = True
        while queue:
            e = queue.popleft()
            pending[e] = False
            if not alive[e] or support[e] >= k:
                continue
            u, v = edges[e]
            for w in _common(nbrs[u], nbrs[v]):
                for f in (eid[u][w], eid[v][w]):
                    support[f] -= 1
                    if not pending[f]:
                        pending[f] = True
                        queue.append(f)
            for x in (u, v):
                deg[x] -= 1
                if deg[x] == 0:
                    core[x] = k - 1
            nbrs[u].remove(v)
            nbrs[v].remove(u)
            level[e] = k - 1
            alive[e] = False
        remaining = [e for e in remaining if alive[e]]
    return (
        CoreAssignment(TRICORE, tuple(core)),
        EdgeLevelAssignment(dict(zip(edges, level))),
    )


def vertex_triangle_core_decompose(g: Graph) -> CoreAssignment:
    n = g.n
    nbrs = [list(row) for row in g.adjacency]
    tri = [0] * n
    for v in range(n):
        tri[v] = sum(len(_common(nbrs[v], nbrs[a])) for a in nbrs[v]) // 2
    alive = [True] * n
    core = [0] * n
    pending = [False] * n
    queue: deque[int] = deque()
    remaining = list(range(n))
    k = 0
    while remaining:
        k += 1
        queue.extend(remaining)
        for v in remaining:
            pending[v] = True
        while queue:
            v = queue.popleft()
            pending[v] = False
            if not alive[v] or tri[v] >= k:
                continue
            nv = nbrs[v]
            for a in nv:
                for b in _common(nv, nbrs[a]):
                    if b < a:
                        continue
                    for w in (a, b):
                        tri[w] -= 1
                        if not pending[w]:
                            pending[w] = True
                            queue.append(w)
            for a in nv:
                nbrs[a].remove(v)
            nbrs[v] = []
            core[v] = k - 1
            alive[v] = False
        remaining = [v for v in remaining if alive[v]]
    return CoreAssignment(VTRICORE, tuple(core))


def decompose(g: Graph, method: str) -> CoreAssignment:
    if method == KCORE:
        return k_core_decompose(g)
    if method == TRICORE:
        return triangle_core_decompose(g)[0]
    if method == VTRICORE:
        return vertex_triangle_core_decompose(g)
    if method.startswith("pcore:"):
        p = PROPERTY_FUNCTIONS[method.split(":", 1)[1]]
        return p_core_decompose(g, p, default_levels(g, p))
    raise ValueError(f"unknown method {method!r}")


def truss_edges(g: Graph, k: int) -> set[Edge]:
    """Edge set of the k-truss: every edge whose endpoints keep ``k - 2`` common neighbors."""
    if k < 2:
        raise ValueError(f"k-truss needs k >= 2, got {k}")
    return triangle_core_decompose(g)[1].edges_at_least(k - 2)


# -- generalized p-cores ---------------------------------------------------


@dataclass(frozen=True)
class PropertyFunction:
    """Vertex property function ``p(v, U)`` for ``U`` a subset of the vertices.

    ``evaluate(g, v, members)`` must only look at the subgraph induced by
    ``members``. ``max_level`` gives the largest value ``p`` can take on ``g``
    and is used to build the default integer level grid.
    """

    name: str
    evaluate: Callable[[Graph, int, frozenset[int] | set[int]], float]
    monotone: bool
    max_level: Callable[[Graph], int] | None = None


def _degree_in(g: Graph, v: int, members) -> int:
    return len(g.neighbor_set(v) & members)


def _triangles_in(g: Graph, v: int, members) -> int:
    inner = g.neighbor_set(v) & members
    return sum(len(g.neighbor_set(a) & inner) for a in inner) // 2


DEGREE = PropertyFunction("degree", _degree_in, True, lambda g: max(g.n - 1, 0))
TRIANGLES = PropertyFunction(
    "triangles", _triangles_in, True, lambda g: max((g.n - 1) * (g.n - 2) // 2, 0)
)
PROPERTY_FUNCTIONS = {DEGREE.name: DEGREE, TRIANGLES.name: TRIANGLES}


def default_levels(g: Graph, p: PropertyFunction) -> list[int]:
    if p.max_level is None:
        raise ValueError(f"property function {p.name!r} has no default level grid")
    return list(range(p.max_level(g) + 1))


def p_core_decompose(g: Graph, p: PropertyFunction, levels: Sequence[float]) -> CoreAssignment:
    """Core numbers for the p-cores at each threshold in ``levels``.

    A vertex's core number is the index into ``levels`` of the highest
    threshold whose p-core still contains it. Because monotone p-cores are
    nested, each level is peeled starting from the previous level's core.
    The first threshold must keep every vertex.
    """
    if not p.monotone:
        raise ValueError(f"property function {p.name!r} is not monotone; p-cores would not nest")
    levels = list(levels)
    if not levels:
        raise ValueError("empty level grid")
    if any(b <= a for a, b in zip(levels, levels[1:])):
        raise ValueError("levels must be strictly ascending")
    members = set(range(g.n))
    core = [0] * g.n
    for i, t in enumerate(levels):
        changed = True
        while changed:
            doomed = [v for v in sorted(members) if p.evaluate(g, v, members) < t]
            changed = bool(doomed)
            members.difference_update(doomed)
        if i == 0 and len(members) != g.n:
            raise ValueError(f"lowest level {t} already excludes vertices; extend the grid downward")
        if not members:
            break
        for v in members:
            core[v] = i
    return CoreAssignment(f"pcore:{p.name}", tuple(core))


# -- brute-force oracle ----------------------------------------------------


def _oracle_edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset((u, v)) for u in range(g.n) for v in range(g.n) if u < v and g.has_edge(u, v)}


def _oracle_vertex_fixpoint(n: int, edges: set[frozenset[int]], k: int, score) -> set[int]:
    members = set(range(n))
    while True:
        doomed = {v for v in members if score(v, members, edges) < k}
        if not doomed:
            return members
        members -= doomed


def _oracle_degree(v: int, members: set[int], edges) -> int:
    return sum(1 for w in members if frozenset((v, w)) in edges)


def _oracle_vertex_triangles(v: int, members: set[int], edges) -> int:
    others = [w for w in members if w != v]
    return sum(
        1
        for a, b in combinations(others, 2)
        if frozenset((v, a)) in edges and frozenset((v, b)) in edges and frozenset((a, b)) in edges
    )


def _oracle_edge_fixpoint(n: int, edges: set[frozenset[int]], k: int) -> set[frozenset[int]]:
    kept = set(edges)
    while True:
        doomed = set()
        for e in kept:
            u, v = tuple(e)
            support = sum(
                1 for w in range(n) if frozenset((u, w)) in kept and frozenset((v, w)) in kept
            )
            if support < k:
                doomed.add(e)
        if not doomed:
            return kept
        kept -= doomed


def oracle_triangle_core_edges(g: Graph, k: int, cap: int = ORACLE_CAP) -> set[Edge]:
    """Edges of the triangle k-core, found by brute-force rescans."""
    if g.n > cap:
        raise ValueError(f"oracle refused: {g.n} vertices exceeds cap {cap}")
    return {tuple(sorted(e)) for e in _oracle_edge_fixpoint(g.n, _oracle_edge_set(g), k)}


def oracle_edge_levels(g: Graph, cap: int = ORACLE_CAP) -> dict[Edge, int]:
    """Brute-force triangle-core level of each edge, by rescanning to a fixpoint per ``k``."""
    if g.n > cap:
        raise ValueError(f"oracle refused: {g.n} vertices exceeds cap {cap}")
    edges = _oracle_edge_set(g)
    levels = {}
    k = 0
    while True:
        kept = _oracle_edge_fixpoint(g.n, edges, k)
        if not kept:
            break
        for e in kept:
            levels[tuple(sorted(e))] = k
        k += 1
    return levels


def oracle_core_numbers(g: Graph, method: str, cap: int = ORACLE_CAP) -> CoreAssignment:
    """Core numbers recomputed from scratch for every ``k`` by full rescans.

    Shares no bookkeeping with the peelers: each k-level core is rebuilt from
    the whole graph, counting degrees and triangles directly on an edge set.
    """
    if g.n > cap:
        raise ValueError(f"oracle refused: {g.n} vertices exceeds cap {cap}")
    n = g.n
    core = [0] * n
    if method == TRICORE:
        for (u, v), lv in oracle_edge_levels(g, cap).items():
            core[u] = max(core[u], lv)
            core[v] = max(core[v], lv)
        return CoreAssignment(method, tuple(core))
    if method == KCORE:
        score = _oracle_degree
    elif method == VTRICORE:
        score = _oracle_vertex_triangles
    else:
        raise ValueError(f"oracle does not support method {method!r}")
    edges = _oracle_edge_set(g)
    k = 0
    while True:
        members = _oracle_vertex_fixpoint(n, edges, k, score)
        if not members:
            break
        for v in members:
            core[v] = k
        k += 1
    return CoreAssignment(method, tuple(core))


def nested_chain(sets: Iterable[set]) -> bool:
    """True when each set contains the next one."""
    sets = list(sets)
    return all(b <= a for a, b in zip(sets, sets[1:]))
