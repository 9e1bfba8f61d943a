"""Hypergraphs with multiset hyperedges, the dominance hypergraph, and bipartite doubles."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .bits import full, iter_members, members, to_mask
from .errors import ParseError
from .graph import Graph


@dataclass(frozen=True)
class Hypergraph:
    """Ground set {0..n-1} plus an ordered list of hyperedges (bitsets).

    Duplicates are allowed and the position of an edge is its identity; this is what
    gives repeated edges distinct vertices in :func:`associated_bipartite`.
    """

    n: int
    edges: tuple[int, ...]

    def __post_init__(self):
        ground = full(self.n)
        for j, e in enumerate(self.edges):
            if e & ~ground:
                raise ValueError(f"hyperedge {j} leaves the ground set 0..{self.n - 1}")

    @classmethod
    def from_lists(cls, n: int, edges) -> Hypergraph:
        return cls(n, tuple(to_mask(e) for e in edges))


def dominance_hypergraph(g: Graph) -> Hypergraph:
    """Hyperedges N[0], ..., N[n-1] in vertex order, duplicates kept."""
    return Hypergraph(g.n, tuple(g.adj[v] | 1 << v for v in range(g.n)))


def is_independent(h: Hypergraph, sigma: int) -> bool:
    """True iff no hyperedge is contained in ``sigma``."""
    return all(e & ~sigma for e in h.edges)


def is_transversal(h: Hypergraph, s: int) -> bool:
    return all(e & s for e in h.edges)


def associated_bipartite(h: Hypergraph) -> Graph:
    """Ground vertex i stays i; hyperedge j becomes vertex n + j, adjacent to its members."""
    m = len(h.edges)
    adj = [0] * (h.n + m)
    for j, e in enumerate(h.edges):
        adj[h.n + j] = e
        for v in iter_members(e):
            adj[v] |= 1 << (h.n + j)
    return Graph(h.n + m, tuple(adj))


def bowtie(g: Graph) -> Graph:
    """Bipartite double: vertex v is (+, v), vertex n + w is (-, w); (+,v) ~ (-,w) iff v in N[w]."""
    n = g.n
    adj = [0] * (2 * n)
    for w in range(n):
        closed = g.adj[w] | 1 << w
        adj[n + w] = closed
        for v in iter_members(closed):
            adj[v] |= 1 << (n + w)
    return Graph(2 * n, tuple(adj))


def bowtie_involution(n: int) -> tuple[int, ...]:
    """The swap (+,v) <-> (-,v) as a permutation of 0..2n-1."""
    return tuple(range(n, 2 * n)) + tuple(range(n))


def is_graph_automorphism(g: Graph, perm: tuple[int, ...]) -> bool:
    if sorted(perm) != list(range(g.n)):
        return False
    return all(g.has_edge(perm[u], perm[v]) for u, v in g.edges())


def minimal_edges(h: Hypergraph) -> Hypergraph:
    """Inclusion-minimal hyperedges, deduplicated, in first-occurrence order."""
    kept: list[int] = []
    for j, e in enumerate(h.edges):
        if e in kept:
            continue
        if any(f & ~e == 0 and f != e for f in h.edges):
            continue
        kept.append(e)
    return Hypergraph(h.n, tuple(kept))


def random_hypergraph(n: int, m: int, rng: random.Random) -> Hypergraph:
    """``m`` uniformly random subsets of {0..n-1}; repeats and the empty set may occur."""
    return Hypergraph(n, tuple(rng.randrange(1 << n) for _ in range(m)))


def parse_hypergraph(text: str) -> Hypergraph:
    """First line ``n m``, then exactly m lines of space-separated vertices (blank = empty edge)."""
    lines = text.split("\n")
    header = lines[0].split() if lines else []
    if len(header) != 2:
        raise ParseError("expected header 'n m'", line=1)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("non-integer header", line=1) from None
    if n < 0 or m < 0:
        raise ParseError("negative header value", line=1)
    body = lines[1:]
    if len(body) < m:
        raise ParseError(f"expected {m} hyperedge lines, found {len(body)}", line=len(lines))
    if any(ln.strip() for ln in body[m:]):
        raise ParseError("trailing content after hyperedges", line=m + 2)
    edges = []
    for lineno, raw in enumerate(body[:m], start=2):
        try:
            verts = [int(t) for t in raw.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {raw.strip()!r}", line=lineno) from None
        if any(not 0 <= v < n for v in verts):
            raise ParseError(f"vertex out of range for n={n}", line=lineno)
        edges.append(to_mask(verts))
    return Hypergraph(n, tuple(edges))


def format_hypergraph(h: Hypergraph) -> str:
    rows = [f"{h.n} {len(h.edges)}"]
    rows += [" ".join(map(str, members(e))) for e in h.edges]
    return "\n".join(rows) + "\n"
