"""Reduced simplicial homology over Z2 from boundary-matrix ranks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bits import iter_members
from .errors import ContractError
from .simplicial import SimplicialComplex

INF = math.inf


@dataclass(frozen=True)
class GF2Matrix:
    """Dense GF(2) matrix; ``rows[i]`` has bit j set iff entry (i, j) is 1."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError(f"row {r:#b} wider than {self.ncols} columns")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_lists(cls, data: list[list[int]]) -> GF2Matrix:
        ncols = len(data[0]) if data else 0
        rows = []
        for row in data:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            rows.append(sum(1 << j for j, x in enumerate(row) if x & 1))
        return cls(tuple(rows), ncols)

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.ncols)] for r in self.rows]

    def __matmul__(self, other: GF2Matrix) -> GF2Matrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.rows:
            acc = 0
            for k in iter_members(r):
                acc ^= other.rows[k]
            out.append(acc)
        return GF2Matrix(tuple(out), other.ncols)


def _rank_of_vectors(vectors) -> int:
    """Rank of a family of bit-vectors; pivots keyed by leading bit."""
    pivots: dict[int, int] = {}
    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = v
                break
            v ^= p
    return len(pivots)


def rank_gf2(m: GF2Matrix) -> int:
    return _rank_of_vectors(m.rows)


def boundary_matrix(k: SimplicialComplex, d: int) -> GF2Matrix:
    """Boundary map from d-chains to (d-1)-chains; rows and columns in lexicographic face order.

    For d = 0 this is the augmentation, a single all-ones row indexed by the empty face.
    """
    if k.is_void:
        raise ContractError("the void complex has no chain complex")
    if not 0 <= d <= k.dim:
        raise ValueError(f"dimension {d} outside 0..{k.dim}")
    cols = k.faces(d)
    rows = k.faces(d - 1)
    index = {f: i for i, f in enumerate(rows)}
    out = [0] * len(rows)
    for j, f in enumerate(cols):
        for v in iter_members(f):
            out[index[f ^ (1 << v)]] |= 1 << j
    return GF2Matrix(tuple(out), len(cols))


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Z2 Betti numbers; ``betti[i]`` is the value in dimension ``i - 1``."""

    betti: tuple[int, ...]
    face_counts: tuple[int, ...] = field(default=())  # f_{-1}, f_0, ..., f_dim

    @property
    def dim(self) -> int | None:
        return len(self.betti) - 2 if self.betti else None

    def __getitem__(self, d: int) -> int:
        i = d + 1
        return self.betti[i] if 0 <= i < len(self.betti) else 0

    def nonzero(self) -> dict[int, int]:
        return {i - 1: b for i, b in enumerate(self.betti) if b}

    def euler_ok(self) -> bool:
        lhs = sum((-1) ** (i - 1) * b for i, b in enumerate(self.betti))
        rhs = sum((-1) ** (i - 1) * f for i, f in enumerate(self.face_counts))
        return lhs == rhs

    def same_homology(self, other: BettiProfile) -> bool:
        return self.nonzero() == other.nonzero()

    def as_dict(self) -> dict[str, int]:
        return {str(i - 1): b for i, b in enumerate(self.betti)}


def reduced_betti(k: SimplicialComplex) -> BettiProfile:
    """Betti numbers b_d = f_d - rank(d_d) - rank(d_{d+1}), dimension -1 through dim.

    Levels are visited top-down, so at most two consecutive face lists are alive.
    """
    if k.is_void:
        return BettiProfile((), ())
    counts: dict[int, int] = {}
    ranks: dict[int, int] = {}
    upper: list[int] | None = None
    upper_dim = None
    for d, level in k.levels():
        counts[d] = len(level)
        if upper is not None and d >= 0:
            index = {f: i for i, f in enumerate(level)}
            vectors = []
            for f in upper:
                vec = 0
                rest = f
                while rest:
                    low = rest & -rest
                    vec |= 1 << index[f ^ low]
                    rest ^= low
                vectors.append(vec)
            ranks[upper_dim] = _rank_of_vectors(vectors)
        upper, upper_dim = level, d
    # augmentation: rank 1 whenever there is at least one vertex
    ranks[0] = 1 if counts.get(0, 0) else 0
    top = k.dim
    betti = []
    for d in range(-1, top + 1):
        betti.append(counts[d] - ranks.get(d, 0) - ranks.get(d + 1, 0))
    face_counts = tuple(counts[d] for d in range(-1, top + 1))
    profile = BettiProfile(tuple(betti), face_counts)
    if not profile.euler_ok():
        raise AssertionError(f"Euler characteristic mismatch for {profile}")
    return profile


def conn_z2(profile: BettiProfile) -> float | int:
    """Largest c with every reduced Betti number in dimensions <= c zero; ``inf`` if all vanish."""
    nz = profile.nonzero()
    return min(nz) - 1 if nz else INF


def hdim_z2(profile: BettiProfile) -> float | int:
    """Largest dimension with nonzero reduced Betti number; ``-inf`` if all vanish."""
    nz = profile.nonzero()
    return max(nz) if nz else -INF


def boundary_squares_to_zero(k: SimplicialComplex) -> bool:
    if k.is_void or k.dim < 1:
        return True
    for d in range(1, k.dim + 1):
        prod = boundary_matrix(k, d - 1) @ boundary_matrix(k, d)
        if any(prod.rows):
            return False
    return True


__all__ = [
    "BettiProfile",
    "GF2Matrix",
    "INF",
    "boundary_matrix",
    "boundary_squares_to_zero",
    "conn_z2",
    "hdim_z2",
    "rank_gf2",
    "reduced_betti",
]
