"""Brute-force reference computations, deliberately independent of the package internals.

Sets are Python frozensets here (not bitsets) and everything is found by scanning all
subsets, so these stay simple enough to trust at n <= 10.
"""

from __future__ import annotations

from itertools import combinations


def subsets(ground):
    ground = list(ground)
    for k in range(len(ground) + 1):
        for c in combinations(ground, k):
            yield frozenset(c)


def edge_set(g):
    return {frozenset(e) for e in g.edges()}


def brute_alpha(g) -> int:
    edges = edge_set(g)
    best = 0
    for s in subsets(range(g.n)):
        if all(not e <= s for e in edges):
            best = max(best, len(s))
    return best


def brute_vertex_cover(g) -> int:
    edges = edge_set(g)
    return min(len(s) for s in subsets(range(g.n)) if all(e & s for e in edges))


def brute_dominating(g, s) -> bool:
    s = set(s)
    edges = edge_set(g)
    return all(v in s or any(frozenset((v, w)) in edges for w in s) for v in range(g.n))


def brute_dominance_faces(g) -> set[frozenset]:
    ground = frozenset(range(g.n))
    return {s for s in subsets(ground) if brute_dominating(g, ground - s)}


def faces_of(facets) -> set[frozenset]:
    out = set()
    for f in facets:
        out.update(subsets(f))
    return out


def brute_dual_faces(faces: set[frozenset], n: int) -> set[frozenset]:
    ground = frozenset(range(n))
    return {s for s in subsets(ground) if (ground - s) not in faces}


def maximal(faces: set[frozenset]) -> set[frozenset]:
    return {f for f in faces if not any(f < g for g in faces)}


def naive_rank_mod2(rows: list[list[int]]) -> int:
    """Textbook row reduction on a list-of-lists copy, entries reduced mod 2."""
    m = [[x % 2 for x in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(nrows):
            if r != rank and m[r][col]:
                m[r] = [(a + b) % 2 for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def naive_reduced_betti(faces: set[frozenset]) -> dict[int, int]:
    """Nonzero reduced Z2 Betti numbers from an explicit face set (including the empty face)."""
    if not faces:
        return {}
    top = max(len(f) for f in faces) - 1
    by_dim = {d: sorted((f for f in faces if len(f) == d + 1), key=sorted) for d in range(-1, top + 1)}

    def rank(d):
        if d < 0 or d > top:
            return 0
        cols, rows = by_dim[d], by_dim[d - 1]
        idx = {f: i for i, f in enumerate(rows)}
        mat = [[0] * len(cols) for _ in rows]
        for j, f in enumerate(cols):
            for v in f:
                mat[idx[f - {v}]][j] = 1
        return naive_rank_mod2(mat)

    out = {}
    for d in range(-1, top + 1):
        b = len(by_dim[d]) - rank(d) - rank(d + 1)
        if b:
            out[d] = b
    return out
