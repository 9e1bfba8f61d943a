from __future__ import annotations

import random

import pytest
from hypothesis import given

from conftest import graphs
from domcomplex.bits import full, to_mask
from domcomplex.errors import ParseError
from domcomplex.graph import Graph, generate, is_dominating
from domcomplex.hypergraph import (Hypergraph, associated_bipartite, bowtie, bowtie_involution,
                                   dominance_hypergraph, format_hypergraph, is_graph_automorphism,
                                   is_independent, is_transversal, minimal_edges, parse_hypergraph,
                                   random_hypergraph)

K2 = Graph.from_edges(2, [(0, 1)])
P3 = Graph.from_edges(3, [(0, 1), (1, 2)])


def test_dominance_hypergraph_examples():
    assert dominance_hypergraph(K2).edges == (0b11, 0b11)
    assert dominance_hypergraph(P3).edges == (0b011, 0b111, 0b110)
    assert dominance_hypergraph(Graph.empty(2)).edges == (0b01, 0b10)


def test_is_independent_examples():
    d = dominance_hypergraph(P3)
    # oracle: {0,2} contains none of [{0,1},{0,1,2},{1,2}]; {0,1} contains N[0]
    edges = [{0, 1}, {0, 1, 2}, {1, 2}]
    assert is_independent(d, to_mask([0, 2])) == (not any(e <= {0, 2} for e in edges)) is True
    assert is_independent(d, to_mask([0, 1])) == (not any(e <= {0, 1} for e in edges)) is False
    assert not is_independent(Hypergraph(2, (0,)), 0)
    assert is_independent(Hypergraph(2, ()), 0)


def test_is_transversal_examples():
    assert not is_transversal(Hypergraph(2, (0b01, 0b10)), 0b01)
    assert is_transversal(Hypergraph(3, ()), 0)


@given(graphs(max_n=8))
def test_transversal_iff_dominating_and_independent_iff_complement_dominates(g):
    d = dominance_hypergraph(g)
    ground = full(g.n)
    for s in range(1 << g.n):
        assert is_transversal(d, s) == is_dominating(g, s)
        assert is_independent(d, s) == is_dominating(g, ground ^ s)


def test_associated_bipartite_examples():
    assert associated_bipartite(Hypergraph(2, (0b11,))) == Graph.from_edges(3, [(0, 2), (1, 2)])
    b = associated_bipartite(Hypergraph(2, (0b01, 0)))
    assert b.degree(3) == 0
    k22 = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert associated_bipartite(dominance_hypergraph(K2)) == k22


def test_bowtie_examples():
    assert bowtie(Graph.empty(1)) == K2
    assert bowtie(K2) == Graph.from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)])


@given(graphs(max_n=8))
def test_bowtie_is_associated_bipartite_of_dominance_hypergraph(g):
    b = bowtie(g)
    assert b == associated_bipartite(dominance_hypergraph(g))
    plus, minus = full(g.n), full(g.n) << g.n
    for v in range(g.n):
        assert b.adj[v] & plus == 0 and b.adj[g.n + v] & minus == 0
        assert b.degree(v) >= 1
    gamma = bowtie_involution(g.n)
    assert is_graph_automorphism(b, gamma)
    assert all(gamma[gamma[x]] == x and gamma[x] != x for x in range(2 * g.n))


def test_bowtie_involution_examples():
    assert bowtie_involution(1) == (1, 0)
    assert bowtie_involution(3) == (3, 4, 5, 0, 1, 2)


def test_minimal_edges_examples():
    assert minimal_edges(dominance_hypergraph(P3)).edges == (0b011, 0b110)
    assert minimal_edges(Hypergraph(2, (0b01, 0b01, 0b11))).edges == (0b01,)
    assert minimal_edges(Hypergraph(2, ())).edges == ()


def test_minimal_edges_against_pairwise_scan():
    rng = random.Random(11)
    for _ in range(200):
        h = random_hypergraph(rng.randint(1, 6), rng.randint(0, 6), rng)
        sets = [frozenset(i for i in range(h.n) if e >> i & 1) for e in h.edges]
        want = []
        for s in sets:
            if not any(t < s for t in sets) and s not in want:
                want.append(s)
        assert minimal_edges(h).edges == tuple(to_mask(s) for s in want)


def test_hypergraph_text_roundtrip():
    h = Hypergraph(4, (0b0011, 0, 0b1100, 0b0011))
    text = format_hypergraph(h)
    assert text == "4 4\n0 1\n\n2 3\n0 1\n"
    assert parse_hypergraph(text) == h


@pytest.mark.parametrize("text,line", [("3\n0 1", 1), ("3 1\n0 5", 2), ("3 2\n0 1", 2),
                                       ("3 1\n0 a", 2), ("3 1\n0\n1 2", 3)])
def test_hypergraph_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_hypergraph(text)
    assert info.value.line == line


def test_dominance_hypergraph_of_generated_families_has_n_edges():
    for fam in ("path", "cycle", "star"):
        g = generate(fam, 6)
        assert len(dominance_hypergraph(g).edges) == 6
