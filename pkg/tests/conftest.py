from __future__ import annotations

import os
import sys
from itertools import combinations

from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from domcomplex.graph import Graph  # noqa: E402
from domcomplex.simplicial import SimplicialComplex  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def complexes(draw, min_n: int = 0, max_n: int = 7, allow_void: bool = True):
    n = draw(st.integers(min_n, max_n))
    faces = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=0 if allow_void else 1, max_size=8))
    return SimplicialComplex.from_faces(n, faces)
