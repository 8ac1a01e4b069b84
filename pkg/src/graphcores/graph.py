"""Immutable simple undirected graphs and the triangle/degree queries built on them."""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence, TextIO

Edge = tuple[int, int]


class SnapParseError(ValueError):
    """Malformed line in a SNAP edge-list file."""

    def __init__(self, lineno: int, line: str, reason: str):
        self.lineno = lineno
        self.line = line
        self.reason = reason
        super().__init__(f"line {lineno}: {reason}: {line.rstrip()!r}")


class MissingEdgeError(KeyError):
    """The queried vertex pair is not an edge of the graph."""

    def __str__(self) -> str:
        return f"no edge {self.args[0]}"


class Graph:
    """Simple undirected graph over dense vertex indices ``0..n-1``.

    Adjacency lists are strictly ascending tuples. Instances are never mutated
    after construction, so they can be shared freely between threads.
    """

    __slots__ = ("_adj", "_nbr_sets", "_m", "_labels", "_index")

    def __init__(self, adjacency: Sequence[Sequence[int]], labels: Sequence[Hashable] | None = None):
        adj = tuple(tuple(row) for row in adjacency)
        n = len(adj)
        total = 0
        for v, row in enumerate(adj):
            for i, w in enumerate(row):
                if not 0 <= w < n:
                    raise ValueError(f"neighbor {w} of vertex {v} out of range")
                if w == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if i and row[i - 1] >= w:
                    raise ValueError(f"adjacency of vertex {v} is not strictly ascending")
            total += len(row)
        nbr_sets = tuple(frozenset(row) for row in adj)
        for v, row in enumerate(adj):
            for w in row:
                if v not in nbr_sets[w]:
                    raise ValueError(f"edge ({v}, {w}) is not symmetric")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("label count does not match vertex count")
            index = {lab: i for i, lab in enumerate(labels)}
            if len(index) != n:
                raise ValueError("labels are not unique")
        else:
            index = None
        self._adj = adj
        self._nbr_sets = nbr_sets
        self._m = total // 2
        self._labels = labels
        self._index = index

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Graph:
        """Build a graph on ``n`` dense vertices from index pairs (duplicates and loops dropped)."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                continue
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls([sorted(s) for s in nbrs])

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    n = vertex_count

    @property
    def edge_count(self) -> int:
        return self._m

    m = edge_count

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < len(self._adj) and v in self._nbr_sets[u]

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u, row in enumerate(self._adj) for v in row if u < v]

    def label(self, v: int) -> Hashable:
        return v if self._labels is None else self._labels[v]

    @property
    def labels(self) -> tuple[Hashable, ...]:
        return tuple(range(len(self._adj))) if self._labels is None else self._labels

    def index_of(self, label: Hashable) -> int:
        if self._index is None:
            if isinstance(label, int) and 0 <= label < len(self._adj):
                return label
            raise KeyError(label)
        return self._index[label]

    def __len__(self) -> int:
        return len(self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(pairs: Iterable[tuple[Hashable, Hashable]]) -> Graph:
    """Normalize raw labelled pairs into a :class:`Graph`.

    Labels get dense indices in order of first appearance. Self-loops and
    repeated edges (in either orientation) are dropped, but a label seen only
    in a self-loop still becomes an isolated vertex.
    """
    index: dict[Hashable, int] = {}
    labels: list[Hashable] = []
    nbrs: list[set[int]] = []

    def idx(label: Hashable) -> int:
        i = index.get(label)
        if i is None:
            i = index[label] = len(labels)
            labels.append(label)
            nbrs.append(set())
        return i

    for a, b in pairs:
        u, v = idx(a), idx(b)
        if u != v:
            nbrs[u].add(v)
            nbrs[v].add(u)
    return Graph([sorted(s) for s in nbrs], labels)


def to_edge_list(g: Graph, keep_order: bool = False) -> list[tuple[Hashable, Hashable]]:
    """Edges of ``g`` in terms of the original labels.

    With ``keep_order`` every vertex is first listed as a self-loop, which
    :func:`from_edge_list` turns back into the same dense index (isolated
    vertices included), so the rebuilt graph is identical.
    """
    pairs = [(g.label(v), g.label(v)) for v in range(g.n)] if keep_order else []
    pairs += [(g.label(u), g.label(v)) for u, v in g.edges()]
    return pairs


def parse_snap(text: str | Iterable[str]) -> list[tuple[int, int]]:
    """Parse a SNAP edge list: ``#`` comments, one ``u<ws>v`` integer pair per line.

    Pairs are returned verbatim; blank lines are skipped.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    pairs = []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise SnapParseError(lineno, line, f"expected 2 tokens, found {len(tokens)}")
        try:
            pairs.append((int(tokens[0]), int(tokens[1])))
        except ValueError:
            raise SnapParseError(lineno, line, "non-integer vertex label") from None
    return pairs


def read_snap(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return from_edge_list(parse_snap(fh))


def write_snap(g: Graph, fh: TextIO) -> None:
    fh.write(f"# Nodes: {g.n} Edges: {g.m}\n")
    for a, b in to_edge_list(g):
        fh.write(f"{a}\t{b}\n")


def _count_common(a: Sequence[int], b: Sequence[int]) -> int:
    # merge of two ascending lists
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
    return c


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for graph with {g.n} vertices")


def triangles_through_vertex(g: Graph, v: int) -> int:
    """Number of triangles containing ``v``."""
    _check_vertex(g, v)
    adj = g.adjacency
    row = adj[v]
    # each triangle {v, a, b} is seen once from a and once from b
    return sum(_count_common(row, adj[a]) for a in row) // 2


def edge_ref(g: Graph, u: int, v: int) -> Edge:
    """Normalize ``(u, v)`` to ``u < v`` and check that it is an edge of ``g``."""
    if u > v:
        u, v = v, u
    if u == v or not g.has_edge(u, v):
        raise MissingEdgeError((u, v))
    return (u, v)


def triangles_through_edge(g: Graph, e: Edge) -> int:
    """Number of triangles containing edge ``e`` (its support)."""
    u, v = edge_ref(g, *e)
    return _count_common(g.neighbors(u), g.neighbors(v))


def triangle_count(g: Graph) -> int:
    return sum(triangles_through_vertex(g, v) for v in range(g.n)) // 3


def _check_subset(g: Graph, s: Iterable[int]) -> list[int]:
    members = sorted(set(s))
    for v in members:
        _check_vertex(g, v)
    return members


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by ``s``; vertices are reindexed in ascending order of ``s``."""
    members = _check_subset(g, s)
    pos = {v: i for i, v in enumerate(members)}
    adj = [[pos[w] for w in g.neighbors(v) if w in pos] for v in members]
    return Graph(adj, [g.label(v) for v in members])


def induced_edge_count(g: Graph, s: Iterable[int]) -> int:
    members = set(_check_subset(g, s))
    return sum(len(g.neighbor_set(v) & members) for v in members) // 2


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    members = _check_subset(g, s)
    k = len(members)
    return induced_edge_count(g, members) == k * (k - 1) // 2
