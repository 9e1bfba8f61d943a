"""Vertex sets as Python ints: bit ``v`` set iff vertex ``v`` is a member."""

from __future__ import annotations

from typing import Iterable, Iterator


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Sorted list of the vertices in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def full(n: int) -> int:
    return (1 << n) - 1


def lex_key(mask: int) -> tuple[int, ...]:
    """Sort key giving the lexicographic order of sorted vertex lists."""
    return tuple(members(mask))


def fmt(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"
