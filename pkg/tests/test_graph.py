import json

import pytest
from hypothesis import given, settings, strategies as st

from lllcert import (Graph, GraphFormatError, closed_neighborhood, complete_graph, empty_graph,
                     enumerate_independent_subsets, induced_components, is_independent, members,
                     parse_graph, path_graph, petersen_graph, vset)
from lllcert.graph import MAX_VERTICES, submasks

import oracles

K2 = complete_graph(2)
P3 = path_graph(3)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, edges)


class TestParse:
    def test_k2_json(self):
        G = parse_graph('{"n": 2, "edges": [[1, 2]]}')
        assert G.n == 2 and G.adj == (0b10, 0b01)

    def test_edgeless(self):
        G = parse_graph({"n": 3, "edges": []})
        assert G.adj == (0, 0, 0)

    def test_duplicates_collapse(self):
        G = parse_graph({"n": 3, "edges": [[1, 2], [2, 3], [1, 2]]})
        assert G == P3

    def test_edge_list(self):
        text = "# a path\nn 3\n1 2\n\n2 3\n2 1\n"
        assert parse_graph(text) == P3

    @pytest.mark.parametrize("doc, where", [
        ('{"n": 2, "edges": [[1, 3]]}', "edge #0"),
        ('{"n": 2, "edges": [[1, 2], [2, 2]]}', "edge #1"),
        ("n 2\n1 2\n1 1\n", "line 3"),
        ("n 2\n1 5\n", "line 2"),
        ("n 2\n1 x\n", "line 2"),
        ("1 2\n", "line 1"),
        ('{"n": 2, "edges": [[1, 2]', "line 1"),
    ])
    def test_rejections_carry_position(self, doc, where):
        with pytest.raises(GraphFormatError, match=where):
            parse_graph(doc)

    def test_vertex_cap(self):
        with pytest.raises(GraphFormatError):
            parse_graph({"n": MAX_VERTICES + 1, "edges": []})
        assert parse_graph({"n": 24, "edges": []}).n == 24

    def test_roundtrip(self):
        G = petersen_graph()
        assert parse_graph(json.dumps(G.to_json())) == G


def test_closed_neighborhood():
    assert closed_neighborhood(K2, 0) == vset([0, 1])
    assert closed_neighborhood(empty_graph(3), 1) == vset([1])
    assert closed_neighborhood(P3, 1) == vset([0, 1, 2])
    with pytest.raises(IndexError):
        closed_neighborhood(P3, 3)


def test_is_independent():
    assert not is_independent(K2, vset([0, 1]))
    assert is_independent(P3, 0)
    assert is_independent(P3, vset([0, 2]))


def test_enumerate_independent_subsets():
    assert enumerate_independent_subsets(K2, 0b11) == [0, 0b01, 0b10]
    assert enumerate_independent_subsets(empty_graph(2), 0b11) == [0, 1, 2, 3]
    # brute-force filter of all 8 subsets of P3
    expected = [I for I in range(8) if oracles.independent(P3.edges(), I)]
    assert enumerate_independent_subsets(P3, 0b111) == expected == [0, 1, 2, 4, 5]


def test_induced_components():
    assert induced_components(P3, vset([0, 2])) == [vset([0]), vset([2])]
    assert induced_components(K2, 0b11) == [0b11]
    assert induced_components(P3, 0b111) == [0b111]
    assert induced_components(P3, 0) == []


def test_submasks_order():
    assert list(submasks(0b1010)) == [0, 0b10, 0b1000, 0b1010]
    assert members(0b1011) == [0, 1, 3]


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_closed_neighborhood_contains_vertex(G):
    for i in range(G.n):
        N = closed_neighborhood(G, i)
        assert N == G.adj[i] | 1 << i and N >> i & 1


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_enumeration_counts_match_filter(G, data):
    S = data.draw(st.integers(0, (1 << G.n) - 1))
    got = enumerate_independent_subsets(G, S)
    brute = [I for I in range(1 << G.n) if I & ~S == 0 and oracles.independent(G.edges(), I)]
    assert got == brute
    assert len(set(got)) == len(got)


@settings(max_examples=60, deadline=None)
@given(graphs(), st.data())
def test_components_partition_and_independence(G, data):
    S = data.draw(st.integers(0, (1 << G.n) - 1))
    parts = induced_components(G, S)
    union = 0
    for P in parts:
        assert P and union & P == 0
        union |= P
    assert union == S
    for a in parts:
        for b in parts:
            if a != b:
                assert all(G.adj[i] & b == 0 for i in members(a))
    for I in submasks(S):
        assert is_independent(G, I) == all(is_independent(G, I & P) for P in parts)
