"""Abstract simplicial complexes stored by facets over an explicit ground set.

Faces are vertex bitsets. The ground-set size ``n`` is carried separately from the
support of the facets, since Alexander duality is taken relative to it. Two degenerate
complexes are kept apart: VOID has no faces at all, EMPTY has the single face ``0``
(the empty set).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .bits import full, iter_members, lex_key, members, popcount, to_mask
from .errors import ContractError, EmbeddingError, ParseError
from .graph import Graph, max_independent_set
from .hypergraph import Hypergraph, bowtie, bowtie_involution, dominance_hypergraph, minimal_edges

MAX_NONFACE_SCAN_N = 24


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[int, ...]

    def __post_init__(self):
        ground = full(self.n)
        for f in self.facets:
            if f & ~ground:
                raise ValueError(f"facet {members(f)} leaves the ground set 0..{self.n - 1}")
        for i, f in enumerate(self.facets):
            for g in self.facets[i + 1:]:
                if f & ~g == 0 or g & ~f == 0:
                    raise ValueError(f"facets {members(f)} and {members(g)} are comparable")

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[int]) -> SimplicialComplex:
        """Complex generated by ``faces``: keep the inclusion-maximal ones, sorted."""
        uniq = sorted(set(faces), key=popcount, reverse=True)
        kept: list[int] = []
        for f in uniq:
            if not any(f & ~g == 0 for g in kept):
                kept.append(f)
        return cls(n, tuple(sorted(kept, key=lex_key)))

    @classmethod
    def from_lists(cls, n: int, facets) -> SimplicialComplex:
        return cls.from_faces(n, (to_mask(f) for f in facets))

    @classmethod
    def void(cls, n: int) -> SimplicialComplex:
        return cls(n, ())

    @classmethod
    def empty(cls, n: int) -> SimplicialComplex:
        return cls(n, (0,))

    @classmethod
    def simplex(cls, n: int) -> SimplicialComplex:
        return cls(n, (full(n),))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty(self) -> bool:
        return self.facets == (0,)

    @property
    def is_full_simplex(self) -> bool:
        return self.facets == (full(self.n),)

    @property
    def kind(self) -> str:
        return "void" if self.is_void else "empty" if self.is_empty else "complex"

    @cached_property
    def dim(self) -> int | None:
        """Top dimension; -1 for EMPTY and ``None`` for VOID."""
        if self.is_void:
            return None
        return max(popcount(f) for f in self.facets) - 1

    def contains(self, face: int) -> bool:
        return any(face & ~f == 0 for f in self.facets)

    def levels(self) -> Iterator[tuple[int, list[int]]]:
        """Yield ``(d, faces of dimension d)`` from the top dimension down to -1.

        Each level is derived from the one above, so only two are alive at a time. Faces
        within a level come in increasing integer order.
        """
        if self.is_void:
            return
        by_size: dict[int, list[int]] = {}
        for f in self.facets:
            by_size.setdefault(popcount(f), []).append(f)
        top = max(by_size)
        current: set[int] = set(by_size.get(top, ()))
        for size in range(top, -1, -1):
            yield size - 1, sorted(current)
            below: set[int] = set(by_size.get(size - 1, ()))
            for f in current:
                rest = f
                while rest:
                    low = rest & -rest
                    below.add(f ^ low)
                    rest ^= low
            current = below

    def faces(self, d: int) -> list[int]:
        """All faces of dimension ``d`` in lexicographic order of their vertex lists."""
        for dd, level in self.levels():
            if dd == d:
                return sorted(level, key=lex_key)
            if dd < d:
                break
        return []

    def all_faces(self) -> set[int]:
        out: set[int] = set()
        for _, level in self.levels():
            out.update(level)
        return out


@dataclass(frozen=True)
class SimplicialVertexMap:
    """Vertex map between complexes; ``mapping[i]`` is the image of domain vertex i."""

    domain: SimplicialComplex
    codomain: SimplicialComplex
    mapping: tuple[int, ...]

    def image(self, face: int) -> int:
        out = 0
        for v in iter_members(face):
            out |= 1 << self.mapping[v]
        return out

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def bad_facet(self) -> int | None:
        """First domain facet whose image is not a face of the codomain, if any."""
        for f in self.domain.facets:
            if not self.codomain.contains(self.image(f)):
                return f
        return None

    def is_equivariant(self, dom_action: tuple[int, ...], cod_action: tuple[int, ...]) -> bool:
        return all(self.mapping[dom_action[x]] == cod_action[self.mapping[x]]
                   for x in range(self.domain.n))


# ---------------------------------------------------------------- constructions


def independence_complex_graph(g: Graph) -> SimplicialComplex:
    """Facets are the maximal independent sets (Bron-Kerbosch with pivoting on the complement)."""
    adj = g.adj
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        # pivot maximises |P minus N[u]| in the complement graph, i.e. |P & N[u]| here
        best, pivot = -1, 0
        for u in iter_members(p | x):
            c = popcount(p & (adj[u] | 1 << u))
            if c > best:
                best, pivot = c, u
        for v in iter_members(p & (adj[pivot] | 1 << pivot)):
            bit = 1 << v
            keep = ~(adj[v] | bit)
            expand(r | bit, p & keep, x & keep)
            p &= ~bit
            x |= bit

    expand(0, full(g.n), 0)
    return SimplicialComplex(g.n, tuple(sorted(out, key=lex_key)))


def independence_complex_hyper(h: Hypergraph) -> SimplicialComplex:
    """Facets are the maximal subsets containing no hyperedge.

    Backtracks over vertices in index order. An excluded vertex must end up blocked
    (adding it would complete some hyperedge), and branches where that has become
    impossible are cut early.
    """
    edges = minimal_edges(h).edges
    n = h.n
    if 0 in edges:
        return SimplicialComplex.void(n)
    if not edges:
        return SimplicialComplex.simplex(n)
    inc = [[e for e in edges if e >> v & 1] for v in range(n)]
    out: list[int] = []

    def blockable(u: int, avail: int) -> bool:
        return any(e & ~avail == 0 for e in inc[u])

    def rec(i: int, cur: int, pending: tuple[int, ...]) -> None:
        rest = full(n) & ~full(i)
        for u in pending:
            if not blockable(u, cur | 1 << u | rest):
                return
        if i == n:
            out.append(cur)
            return
        bit = 1 << i
        free = all(e & ~(cur | bit) for e in inc[i])
        if free:
            rec(i + 1, cur | bit, pending)
            if blockable(i, cur | rest):  # rest still includes i
                rec(i + 1, cur, pending + (i,))
        else:
            rec(i + 1, cur, pending)

    rec(0, 0, ())
    return SimplicialComplex(n, tuple(sorted(out, key=lex_key)))


def dominance_complex(g: Graph) -> SimplicialComplex:
    """Subsets of V whose complement is dominating."""
    return independence_complex_hyper(dominance_hypergraph(g))


def minimal_nonfaces(k: SimplicialComplex) -> list[int]:
    """Inclusion-minimal non-faces, found level by level (a candidate needs all facets of it present)."""
    if k.is_void:
        raise ContractError("the void complex has the empty set as its only minimal non-face")
    if k.n > MAX_NONFACE_SCAN_N:
        raise ContractError(f"generic non-face scan is capped at n <= {MAX_NONFACE_SCAN_N}")
    found: list[int] = []
    level = [0]
    for _ in range(k.n):
        present = set(level)
        nxt: list[int] = []
        for f in level:
            start = f.bit_length()
            for v in range(start, k.n):
                c = f | 1 << v
                if not all(c ^ (1 << u) in present for u in iter_members(f)):
                    continue
                if k.contains(c):
                    nxt.append(c)
                else:
                    found.append(c)
        level = nxt
        if not level:
            break
    return sorted(found, key=lex_key)


def alexander_dual(k: SimplicialComplex) -> SimplicialComplex:
    """Sets whose complement in the ground set is a non-face; same ground set."""
    if k.is_void:
        return SimplicialComplex.simplex(k.n)
    ground = full(k.n)
    return SimplicialComplex.from_faces(k.n, (ground ^ m for m in minimal_nonfaces(k)))


def independence_dual(h: Hypergraph) -> SimplicialComplex:
    """Alexander dual of the independence complex of ``h``: the non-transversal sets.

    Uses the fact that the minimal non-faces of that complex are the minimal hyperedges.
    """
    edges = minimal_edges(h).edges
    if 0 in edges:
        return SimplicialComplex.simplex(h.n)
    ground = full(h.n)
    return SimplicialComplex.from_faces(h.n, (ground ^ e for e in edges))


def suspension(k: SimplicialComplex) -> SimplicialComplex:
    """Join with two new apex vertices ``n`` and ``n + 1``."""
    if k.is_void:
        raise ContractError("suspension of the void complex is not defined")
    a0, a1 = 1 << k.n, 1 << (k.n + 1)
    return SimplicialComplex.from_faces(k.n + 2, [f | a for f in k.facets for a in (a0, a1)])


def cross_polytope_boundary(m: int) -> SimplicialComplex:
    """Boundary of the (m+1)-dimensional cross-polytope; vertex 2i is +(i+1), 2i+1 is -(i+1)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    facets = []
    for choice in range(1 << (m + 1)):
        facets.append(sum(1 << (2 * i + (choice >> i & 1)) for i in range(m + 1)))
    return SimplicialComplex(2 * m + 2, tuple(sorted(facets, key=lex_key)))


def antipodal_swap(m: int) -> tuple[int, ...]:
    """The involution of the cross-polytope boundary exchanging +i and -i."""
    return tuple(x ^ 1 for x in range(2 * m + 2))


def lemma7_embedding(g: Graph) -> SimplicialVertexMap:
    """Equivariant embedding of a cross-polytope sphere into I(G^bowtie).

    With a maximum independent set v_1 < ... < v_a, vertex +i goes to (+, v_i) and -i to
    (-, v_i). The map is checked to be injective, simplicial and to intertwine the
    antipodal swap with the bowtie involution; any failure raises.
    """
    sigma = members(max_independent_set(g))
    alpha = len(sigma)
    if alpha < 1:
        raise ContractError("the embedding needs an independent set of size at least 1")
    domain = cross_polytope_boundary(alpha - 1)
    codomain = independence_complex_graph(bowtie(g))
    mapping = []
    for v in sigma:
        mapping += [v, g.n + v]
    f = SimplicialVertexMap(domain, codomain, tuple(mapping))
    if not f.is_injective():
        raise EmbeddingError("vertex map is not injective", face=0)
    bad = f.bad_facet()
    if bad is not None:
        raise EmbeddingError(f"image of facet {members(bad)} is not independent in G^bowtie", face=bad)
    if not f.is_equivariant(antipodal_swap(alpha - 1), bowtie_involution(g.n)):
        raise EmbeddingError("vertex map is not equivariant", face=0)
    return f


def free_involution_witness(k: SimplicialComplex, gamma: tuple[int, ...]) -> int | None:
    """First facet that is not carried to a disjoint face by ``gamma``, or ``None``."""
    if len(gamma) != k.n or any(gamma[gamma[i]] != i for i in range(k.n)):
        raise ValueError("gamma is not an involution of the ground set")
    for f in k.facets:
        image = 0
        for v in iter_members(f):
            image |= 1 << gamma[v]
        if image & f or not k.contains(image):
            return f
    return None


def is_free_involution(k: SimplicialComplex, gamma: tuple[int, ...]) -> bool:
    return free_involution_witness(k, gamma) is None


def f_vector(k: SimplicialComplex) -> list[int]:
    """Face counts in dimensions 0..dim (the empty face is implied, not listed)."""
    if k.is_void:
        raise ContractError("the void complex has no f-vector")
    counts = {d: len(level) for d, level in k.levels()}
    return [counts[d] for d in range(0, k.dim + 1)]


# ---------------------------------------------------------------- facet text format


def parse_facets(text: str) -> SimplicialComplex:
    """First line ``n k``, then k facet lines; a blank line is the empty facet."""
    lines = text.split("\n")
    header = lines[0].split() if lines else []
    if len(header) != 2:
        raise ParseError("expected header 'n k'", line=1)
    try:
        n, k = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("non-integer header", line=1) from None
    if n < 0 or k < 0:
        raise ParseError("negative header value", line=1)
    body = lines[1:]
    if len(body) < k:
        raise ParseError(f"expected {k} facet lines, found {len(body)}", line=len(lines))
    if any(ln.strip() for ln in body[k:]):
        raise ParseError("trailing content after facets", line=k + 2)
    facets = []
    for lineno, raw in enumerate(body[:k], start=2):
        try:
            verts = [int(t) for t in raw.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {raw.strip()!r}", line=lineno) from None
        if any(not 0 <= v < n for v in verts):
            raise ParseError(f"vertex out of range for n={n}", line=lineno)
        facets.append(to_mask(verts))
    return SimplicialComplex.from_faces(n, facets)


def format_facets(k: SimplicialComplex) -> str:
    rows = [f"{k.n} {len(k.facets)}"]
    rows += [" ".join(map(str, members(f))) for f in k.facets]
    return "\n".join(rows) + "\n"
