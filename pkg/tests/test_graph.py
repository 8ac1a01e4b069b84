from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphcores.graph import (
    Graph,
    MissingEdgeError,
    SnapParseError,
    from_edge_list,
    induced_subgraph,
    is_clique,
    parse_snap,
    to_edge_list,
    triangle_count,
    triangles_through_edge,
    triangles_through_vertex,
    write_snap,
)

from conftest import complete, cycle, diamond, graphs


def assert_invariants(g: Graph):
    total = 0
    for v, row in enumerate(g.adjacency):
        assert v not in row
        assert list(row) == sorted(set(row))
        for w in row:
            assert v in g.adjacency[w]
        total += len(row)
    assert g.edge_count * 2 == total


class TestFromEdgeList:
    def test_dedupe_and_self_loop(self):
        g = from_edge_list([(0, 1), (1, 0), (2, 2)])
        assert g.n == 3
        assert g.edges() == [(0, 1)]
        assert g.degree(2) == 0

    def test_empty(self):
        g = from_edge_list([])
        assert (g.n, g.m) == (0, 0)

    def test_triangle_labels(self):
        g = from_edge_list([("a", "b"), ("b", "c"), ("a", "c")])
        assert (g.n, g.m) == (3, 3)
        assert g.labels == ("a", "b", "c")
        assert g.index_of("c") == 2

    def test_first_appearance_order(self):
        g = from_edge_list([(10, 3), (3, 7)])
        assert g.labels == (10, 3, 7)
        assert g.edges() == [(0, 1), (1, 2)]

    @given(st.lists(st.tuples(st.integers(0, 15), st.integers(0, 15)), max_size=60))
    def test_invariants_hold(self, pairs):
        assert_invariants(from_edge_list(pairs))

    @given(st.lists(st.tuples(st.integers(0, 15), st.integers(0, 15)), max_size=60))
    def test_rebuild_is_identity(self, pairs):
        g = from_edge_list(pairs)
        assert from_edge_list(to_edge_list(g, keep_order=True)) == g
        again = from_edge_list(to_edge_list(g))
        assert {frozenset(e) for e in to_edge_list(again)} == {frozenset(e) for e in to_edge_list(g)}

    def test_constructor_rejects_broken_adjacency(self):
        with pytest.raises(ValueError):
            Graph([[1], []])
        with pytest.raises(ValueError):
            Graph([[0]])
        with pytest.raises(ValueError):
            Graph([[2, 1], [0], [0]])


class TestParseSnap:
    def test_comments_and_tabs(self):
        assert parse_snap("# hi\n3\t5\n5\t3\n") == [(3, 5), (5, 3)]

    def test_spaces(self):
        assert parse_snap("1 2\n") == [(1, 2)]

    def test_arity_error(self):
        with pytest.raises(SnapParseError) as info:
            parse_snap("1 2 3\n")
        assert info.value.lineno == 1
        assert "line 1" in str(info.value)

    def test_non_integer_names_line(self):
        with pytest.raises(SnapParseError) as info:
            parse_snap("# c\n1 2\nx 4\n")
        assert info.value.lineno == 3

    def test_round_trip_through_writer(self, tmp_path):
        g = from_edge_list([(5, 9), (9, 2), (2, 5), (7, 5)])
        path = tmp_path / "g.txt"
        with open(path, "w") as fh:
            write_snap(g, fh)
        assert from_edge_list(parse_snap(path.read_text())) == g


class TestTriangles:
    @pytest.mark.parametrize("n,expected", [(4, 3), (5, 6)])
    def test_vertex_complete(self, n, expected):
        g = complete(n)
        assert all(triangles_through_vertex(g, v) == expected for v in range(n))

    def test_vertex_cycle(self):
        g = cycle(6)
        assert all(triangles_through_vertex(g, v) == 0 for v in range(6))

    def test_vertex_out_of_range(self):
        with pytest.raises(IndexError):
            triangles_through_vertex(cycle(6), 6)

    def test_edge_k5_and_c6(self):
        assert all(triangles_through_edge(complete(5), e) == 3 for e in complete(5).edges())
        assert all(triangles_through_edge(cycle(6), e) == 0 for e in cycle(6).edges())

    def test_edge_diamond(self):
        g = diamond()
        # oracle: count common neighbors by looking at every third vertex
        for u, v in g.edges():
            brute = sum(1 for w in range(g.n) if g.has_edge(u, w) and g.has_edge(v, w))
            assert triangles_through_edge(g, (u, v)) == brute
        assert triangles_through_edge(g, (0, 1)) == 2
        assert triangles_through_edge(g, (1, 0)) == 2
        assert [triangles_through_edge(g, e) for e in [(0, 2), (1, 2), (0, 3), (1, 3)]] == [1] * 4

    def test_missing_edge(self):
        with pytest.raises(MissingEdgeError):
            triangles_through_edge(cycle(6), (0, 2))
        with pytest.raises(MissingEdgeError):
            triangles_through_edge(cycle(6), (1, 1))

    @settings(max_examples=150)
    @given(graphs(max_n=9))
    def test_vertex_and_edge_sums_agree(self, g):
        brute = sum(
            1
            for a, b, c in combinations(range(g.n), 3)
            if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        )
        assert sum(triangles_through_vertex(g, v) for v in range(g.n)) == 3 * brute
        assert sum(triangles_through_edge(g, e) for e in g.edges()) == 3 * brute
        assert triangle_count(g) == brute


class TestInducedSubgraph:
    def test_k5_to_k3(self):
        sub = induced_subgraph(complete(5), {0, 2, 4})
        assert (sub.n, sub.m) == (3, 3)
        assert sub.labels == (0, 2, 4)

    def test_empty_set(self):
        sub = induced_subgraph(cycle(6), set())
        assert (sub.n, sub.m) == (0, 0)

    def test_independent_set(self):
        sub = induced_subgraph(cycle(6), {0, 2, 4})
        assert (sub.n, sub.m) == (3, 0)

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            induced_subgraph(cycle(6), {1, 9})

    def test_is_clique(self):
        assert is_clique(complete(5), range(5))
        assert is_clique(cycle(6), {0, 1})
        assert not is_clique(cycle(6), {0, 1, 2})
        with pytest.raises(IndexError):
            is_clique(cycle(6), {-1})
