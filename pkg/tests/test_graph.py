from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given

from conftest import graphs
from domcomplex.bits import full, popcount, to_mask
from domcomplex.errors import ParseError
from domcomplex.graph import (Graph, closed_neighborhood, connected_components, domination_number,
                              encode_graph6, generate, is_chordal, is_cycle, is_dominating,
                              is_forest, max_independent_set, parse_edge_list, parse_graph6,
                              vertex_cover_number)
from oracles import brute_alpha, brute_vertex_cover

K2 = Graph.from_edges(2, [(0, 1)])
K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize("text,expected", [("A_", K2), ("@", Graph.empty(1)), ("Bw", K3),
                                           (">>graph6<<Bw", K3)])
def test_parse_graph6_examples(text, expected):
    assert parse_graph6(text) == expected


def test_graph6_matches_networkx_encoder():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(0, 20)
        g = generate("gnp", n, p=rng.random(), seed=rng.randrange(10**6)) if n else Graph.empty(0)
        ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert encode_graph6(g) == ref
        assert parse_graph6(ref) == g


@given(graphs(max_n=20))
def test_graph6_roundtrip(g):
    assert parse_graph6(encode_graph6(g)) == g


@pytest.mark.parametrize("text,offset", [
    ("B", 1),          # too short for n=3
    ("Bww", 2),        # trailing garbage
    ("B w", 1),        # character out of range
    ("Bx", 1),         # nonzero padding
    ("~", 0),          # long form
])
def test_parse_graph6_errors_name_offset(text, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset
    assert f"byte {offset}" in str(info.value)


def test_parse_edge_list_examples():
    assert parse_edge_list("3\n0 1\n1 2") == P3
    assert parse_edge_list("2\n") == Graph.empty(2)
    assert parse_edge_list("4\n0 1\n1 2\n2 3\n3 0") == C4
    assert parse_edge_list("3\n0 1\n1 0\n0 1\n") == Graph.from_edges(3, [(0, 1)])


@pytest.mark.parametrize("text,line", [("3\n0 3", 2), ("3\n0 1\n2 2", 3), ("3\n0 x", 2),
                                       ("x\n", 1), ("3\n0 1 2", 2)])
def test_parse_edge_list_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_generate_examples():
    assert generate("cycle", 4) == C4
    assert generate("path", 1) == Graph.empty(1)
    t = generate("random_tree", 8, seed=7)
    assert t.num_edges == 7 and len(connected_components(t)) == 1
    assert generate("random_tree", 8, seed=7) == t
    assert generate("complete", 4).num_edges == 6
    assert generate("star", 5).degree(0) == 4


@pytest.mark.parametrize("family,n,kw", [("cycle", 2, {}), ("path", 0, {}), ("gnp", 4, {"p": 1.5}),
                                         ("gnp", 4, {}), ("wheel", 4, {})])
def test_generate_rejects_bad_params(family, n, kw):
    with pytest.raises(ValueError):
        generate(family, n, **kw)


@pytest.mark.parametrize("seed", range(30))
def test_random_trees_and_chordal(seed):
    n = 1 + seed % 12
    t = generate("random_tree", n, seed=seed)
    assert is_forest(t) and len(connected_components(t)) == 1
    c = generate("random_chordal", n, seed=seed)
    assert is_chordal(c)
    assert nx.is_chordal(to_nx(c))


def test_closed_neighborhood_examples():
    assert closed_neighborhood(C4, 0) == to_mask([0, 1, 3])
    assert closed_neighborhood(Graph.empty(1), 0) == 1
    assert closed_neighborhood(P3, 1) == 0b111
    with pytest.raises(ValueError):
        closed_neighborhood(P3, 3)


def test_is_dominating_examples():
    assert is_dominating(P3, to_mask([1]))
    assert not is_dominating(P3, to_mask([0]))
    assert is_dominating(Graph.empty(0), 0)


@given(graphs(min_n=1))
def test_whole_set_dominates_empty_does_not(g):
    assert is_dominating(g, full(g.n))
    assert not is_dominating(g, 0)


def test_max_independent_set_examples():
    assert max_independent_set(C4) == to_mask([0, 2])
    assert popcount(max_independent_set(generate("complete", 6))) == 1
    assert max_independent_set(Graph.empty(5)) == 0b11111


def test_vertex_cover_examples():
    assert vertex_cover_number(generate("cycle", 5)) == 3
    assert vertex_cover_number(C4) == 2
    assert vertex_cover_number(Graph.empty(5)) == 0


@given(graphs(max_n=10))
def test_vertex_cover_matches_brute_force(g):
    s = max_independent_set(g)
    assert all(not (g.adj[v] & s) for v in range(g.n) if s >> v & 1)
    assert popcount(s) == brute_alpha(g)
    assert vertex_cover_number(g) == brute_vertex_cover(g)


@pytest.mark.parametrize("n", range(3, 12))
def test_cycle_cover_number_is_half_ceiling(n):
    assert vertex_cover_number(generate("cycle", n)) == (n + 1) // 2


def test_domination_number_and_family_predicates():
    assert domination_number(generate("cycle", 5)) == 2
    assert domination_number(generate("star", 6)) == 1
    assert is_cycle(C4) and not is_cycle(P3)
    assert is_forest(P3) and not is_forest(K3)
    assert is_chordal(K3) and not is_chordal(C4)


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
