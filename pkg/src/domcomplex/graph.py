"""Simple undirected graphs on {0..n-1}, their text formats, generators and invariants."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .bits import full, iter_members, members, popcount
from .errors import ParseError

GRAPH6_HEADER = ">>graph6<<"
FAMILIES = ("path", "cycle", "complete", "star", "random_tree", "random_chordal", "gnp")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbour bitset of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        ground = full(self.n)
        for v, nb in enumerate(self.adj):
            if nb & ~ground:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in iter_members(nb):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)


# ---------------------------------------------------------------- graph6


def parse_graph6(line: str) -> Graph:
    """Decode a short-form (n <= 62) graph6 string."""
    text = line.rstrip("\r\n")
    base = 0
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not text:
        raise ParseError("empty graph6 string", offset=base)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} outside graph6 range 63..126", offset=base + i)
    n = ord(text[0]) - 63
    if n > 62:
        raise ParseError("long-form graph6 (n > 62) is not supported", offset=base)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(text) != expected:
        offset = base + min(len(text), expected)
        raise ParseError(f"graph6 length {len(text)} does not match n={n} (expected {expected})",
                         offset=offset)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            ch = ord(text[1 + k // 6]) - 63
            if ch >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = (ord(text[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise ParseError("nonzero padding bits", offset=base + len(text) - 1)
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    if g.n > 62:
        raise ValueError("only short-form graph6 (n <= 62) is supported")
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------------------------------------------------------------- edge list


def parse_edge_list(text: str) -> Graph:
    """First line ``n``, then one ``u v`` pair per line (0-indexed)."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise ParseError("missing vertex count", line=1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"vertex count {lines[0].strip()!r} is not an integer", line=1) from None
    if n < 0:
        raise ParseError("negative vertex count", line=1)
    adj = [0] * n
    for lineno, raw in enumerate(lines[1:], start=2):
        tokens = raw.split()
        if not tokens:
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", line=lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer token in {raw.strip()!r}", line=lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range for n={n}", line=lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# ---------------------------------------------------------------- generators


def generate(family: str, n: int, *, p: float | None = None, seed: int | None = None) -> Graph:
    """Build a graph from one of :data:`FAMILIES`.

    Random families are deterministic for a fixed ``seed``. ``random_tree`` decodes a
    random Pruefer sequence; ``random_chordal`` adds each new vertex adjacent to a random
    subset of an existing clique, so every vertex is simplicial when added.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    if family == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        if n < 3:
            raise ValueError("cycle requires n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        return Graph.from_edges(n, combinations(range(n), 2))
    if family == "star":
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if family == "random_tree":
        return _pruefer_tree(n, rng)
    if family == "random_chordal":
        return _random_chordal(n, rng)
    if p is None or not 0.0 <= p <= 1.0:
        raise ValueError("gnp requires p in [0, 1]")
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def _pruefer_tree(n: int, rng: random.Random) -> Graph:
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def _random_chordal(n: int, rng: random.Random) -> Graph:
    adj = [0] * n
    cliques: list[int] = []
    for v in range(1, n):
        # cliques holds N[u] as it was when u was added, plus singleton {0}
        pool = cliques + [1]
        base = pool[rng.randrange(len(pool))]
        chosen = 0
        for u in iter_members(base):
            if rng.random() < 0.5:
                chosen |= 1 << u
        if not chosen:
            chosen = 1 << rng.choice(members(base))
        for u in iter_members(chosen):
            adj[u] |= 1 << v
        adj[v] = chosen
        cliques.append(chosen | 1 << v)
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------- invariants


def closed_neighborhood(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return g.adj[v] | 1 << v


def is_dominating(g: Graph, s: int) -> bool:
    """True iff every closed neighbourhood meets ``s``."""
    return all((g.adj[v] | 1 << v) & s for v in range(g.n))


def max_independent_set(g: Graph) -> int:
    """One maximum independent set, by branch and bound on the highest-degree vertex.

    The vertex branched on is the one of largest degree inside the remaining candidate
    set, ties going to the lowest index; the include branch is explored first, so the
    result is a deterministic function of the graph.
    """
    adj = g.adj
    best = [0, -1]  # mask, size

    def search(cand: int, chosen: int, size: int) -> None:
        if size + popcount(cand) <= best[1]:
            return
        # strip vertices of degree <= 1 inside cand; taking them is always optimal
        while True:
            pick = -1
            top, top_deg = -1, -1
            for v in iter_members(cand):
                d = popcount(adj[v] & cand)
                if d <= 1:
                    pick = v
                    break
                if d > top_deg:
                    top, top_deg = v, d
            if pick < 0:
                break
            chosen |= 1 << pick
            size += 1
            cand &= ~(adj[pick] | 1 << pick)
        if not cand:
            if size > best[1]:
                best[0], best[1] = chosen, size
            return
        if size + popcount(cand) <= best[1]:
            return
        search(cand & ~(adj[top] | 1 << top), chosen | 1 << top, size + 1)
        search(cand & ~(1 << top), chosen, size)

    search(full(g.n), 0, 0)
    return best[0]


def independence_number(g: Graph) -> int:
    return popcount(max_independent_set(g))


def vertex_cover_number(g: Graph) -> int:
    return g.n - independence_number(g)


def domination_number(g: Graph) -> int:
    """Smallest dominating set size by exhaustive search over subsets of increasing size."""
    nbhd = [g.adj[v] | 1 << v for v in range(g.n)]
    for k in range(g.n + 1):
        for combo in combinations(range(g.n), k):
            s = 0
            for v in combo:
                s |= 1 << v
            if all(nb & s for nb in nbhd):
                return k
    return g.n


def connected_components(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp, frontier = 1 << v, 1 << v
        while frontier:
            nxt = 0
            for u in iter_members(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_forest(g: Graph) -> bool:
    return g.num_edges == g.n - len(connected_components(g))


def is_cycle(g: Graph) -> bool:
    """Connected and 2-regular on at least 3 vertices."""
    return (g.n >= 3 and all(popcount(nb) == 2 for nb in g.adj)
            and len(connected_components(g)) == 1)


def is_chordal(g: Graph) -> bool:
    """Greedy simplicial-vertex elimination; succeeds iff the graph is chordal."""
    alive = full(g.n)
    while alive:
        for v in iter_members(alive):
            nb = g.adj[v] & alive
            if all((g.adj[u] | 1 << u) & nb == nb for u in iter_members(nb)):
                alive &= ~(1 << v)
                break
        else:
            return False
    return True
