"""Executable checks relating the dominance complex to the vertex cover number.

Every check returns a :class:`Verdict` holding the numbers it compared, so a pass is
never vacuous and a failure always names a witness. Homotopy equivalences are checked
only at the level of reduced Z2 Betti numbers.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Iterable

from .bits import members, popcount
from .errors import EmbeddingError
from .graph import Graph, is_chordal, is_cycle, is_forest, max_independent_set
from .homology import BettiProfile, conn_z2, hdim_z2, reduced_betti
from .hypergraph import (Hypergraph, associated_bipartite, bowtie, bowtie_involution,
                         dominance_hypergraph)
from .simplicial import (SimplicialComplex, alexander_dual, dominance_complex,
                         free_involution_witness, independence_complex_graph,
                         independence_complex_hyper, independence_dual, lemma7_embedding,
                         suspension)

PASS, FAIL, SKIP = "pass", "fail", "skip"
DEFAULT_MAX_N = 18
DEFAULT_MAX_BOWTIE_N = 9

GRAPH_CHECKS = ("main", "contractible", "duality", "nagel_reiner", "bowtie", "free", "lemma7",
                "known")
BOWTIE_CHECKS = frozenset({"nagel_reiner", "bowtie", "free", "lemma7"})


@dataclass
class Verdict:
    verdict: str
    data: dict[str, Any] = field(default_factory=dict)
    witness: Any = None
    reason: str | None = None
    ms: float | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"verdict": self.verdict, "data": jsonable(self.data)}
        if self.witness is not None:
            out["witness"] = jsonable(self.witness)
        if self.reason is not None:
            out["reason"] = self.reason
        if self.ms is not None:
            out["ms"] = round(self.ms, 3)
        return out


def jsonable(x: Any) -> Any:
    """Infinities become the strings "inf" / "-inf"; containers are converted recursively."""
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def _verdict(ok: bool, data: dict, witness: Any = None) -> Verdict:
    return Verdict(PASS if ok else FAIL, data, None if ok else witness)


class GraphAnalysis:
    """Lazily computed objects shared by the checks for one graph."""

    def __init__(self, g: Graph):
        self.g = g

    @cached_property
    def mis(self) -> int:
        return max_independent_set(self.g)

    @cached_property
    def alpha(self) -> int:
        return popcount(self.mis)

    @cached_property
    def tau(self) -> int:
        return self.g.n - self.alpha

    @cached_property
    def dom(self) -> SimplicialComplex:
        return dominance_complex(self.g)

    @cached_property
    def dom_profile(self) -> BettiProfile:
        return reduced_betti(self.dom)

    @cached_property
    def conn(self) -> float | int:
        return conn_z2(self.dom_profile)

    @cached_property
    def dom_dual(self) -> SimplicialComplex:
        return independence_dual(dominance_hypergraph(self.g))

    @cached_property
    def susp_dual(self) -> SimplicialComplex:
        return suspension(self.dom_dual)

    @cached_property
    def susp_dual_profile(self) -> BettiProfile:
        return reduced_betti(self.susp_dual)

    @cached_property
    def bowtie_ind(self) -> SimplicialComplex:
        return independence_complex_graph(bowtie(self.g))

    @cached_property
    def bowtie_profile(self) -> BettiProfile:
        return reduced_betti(self.bowtie_ind)


def _ctx(g: Graph, ctx: GraphAnalysis | None) -> GraphAnalysis:
    return ctx if ctx is not None else GraphAnalysis(g)


# ---------------------------------------------------------------- checks


def check_main_theorem(g: Graph, ctx: GraphAnalysis | None = None) -> Verdict:
    """conn_Z2(D(G)) + 2 <= tau(G); a Z2-acyclic D(G) is reported as a falsification."""
    c = _ctx(g, ctx)
    k, tau = c.conn, c.tau
    if math.isinf(k):
        return Verdict(FAIL, {"k": k, "tau": tau}, witness={"acyclic_dominance_complex": True})
    data = {"k": k, "tau": tau, "gap": tau - (k + 2)}
    return _verdict(k + 2 <= tau, data, witness={"k_plus_2": k + 2, "tau": tau})


def check_not_contractible(g: Graph, ctx: GraphAnalysis | None = None) -> Verdict:
    c = _ctx(g, ctx)
    nz = c.dom_profile.nonzero()
    return _verdict(bool(nz), {"betti": nz}, witness={"betti": c.dom_profile.as_dict()})


def duality_mismatch(pk: BettiProfile, pd: BettiProfile, n: int) -> int | None:
    """First i in -1..n where b_i(dual) != b_{n-i-3}(primal), or None."""
    for i in range(-1, n + 1):
        if pd[i] != pk[n - i - 3]:
            return i
    return None


def check_alexander_duality(k: SimplicialComplex, dual: SimplicialComplex | None = None) -> Verdict:
    """b_i(K^dual) = b_{n-i-3}(K) for all i."""
    if k.is_void or k.is_full_simplex:
        return Verdict(SKIP, {"kind": k.kind}, reason="void or full simplex")
    if dual is None:
        dual = alexander_dual(k)
    pk, pd = reduced_betti(k), reduced_betti(dual)
    bad = duality_mismatch(pk, pd, k.n)
    data = {"n": k.n, "betti": pk.nonzero(), "dual_betti": pd.nonzero()}
    return _verdict(bad is None, data,
                    witness={"i": bad, "dual": pd[bad] if bad is not None else None,
                             "primal": pk[k.n - bad - 3] if bad is not None else None})


def check_nagel_reiner(h: Hypergraph) -> Verdict:
    """Suspension of the dual of I(H) against I(B_H), compared Betti number by Betti number."""
    ind = independence_complex_hyper(h)
    dual = alexander_dual(ind)
    if dual.is_void:
        return Verdict(SKIP, {"edges": len(h.edges)}, reason="dual of I(H) is void (no hyperedges)")
    left = reduced_betti(suspension(dual))
    right = reduced_betti(independence_complex_graph(associated_bipartite(h)))
    data = {"suspended_dual": left.nonzero(), "bipartite_ind": right.nonzero()}
    return _verdict(left.same_homology(right), data,
                    witness={"left": left.as_dict(), "right": right.as_dict()})


def check_bowtie_chain(g: Graph, ctx: GraphAnalysis | None = None) -> Verdict:
    """alpha-1 <= hdim I(G^bowtie) = hdim Sigma D^dual(G) = n - k - 3."""
    c = _ctx(g, ctx)
    h_bow = hdim_z2(c.bowtie_profile)
    h_susp = hdim_z2(c.susp_dual_profile)
    k = c.conn
    target = g.n - k - 3
    facts = {
        "alpha_bound": c.alpha - 1 <= h_bow,
        "suspension_equal": h_bow == h_susp,
        "duality_equal": h_susp == target,
    }
    data = {"alpha": c.alpha, "hdim_bowtie": h_bow, "hdim_suspended_dual": h_susp,
            "n_minus_k_minus_3": target, **facts}
    return _verdict(all(facts.values()), data,
                    witness={name: False for name, ok in facts.items() if not ok})


def check_free_action(g: Graph, ctx: GraphAnalysis | None = None) -> Verdict:
    c = _ctx(g, ctx)
    bad = free_involution_witness(c.bowtie_ind, bowtie_involution(g.n))
    return _verdict(bad is None, {"facets": len(c.bowtie_ind.facets)},
                    witness={"facet": members(bad) if bad is not None else None})


def check_lemma7_embedding(g: Graph, ctx: GraphAnalysis | None = None) -> Verdict:
    c = _ctx(g, ctx)
    if c.alpha < 1:
        return Verdict(SKIP, {"alpha": c.alpha}, reason="alpha < 1")
    try:
        f = lemma7_embedding(g)
    except EmbeddingError as err:
        return Verdict(FAIL, {"alpha": c.alpha}, witness={"face": members(err.face), "error": str(err)})
    return Verdict(PASS, {"alpha": c.alpha, "sphere_dim": c.alpha - 1,
                          "image_facets": len(f.domain.facets)})


def detect_family(g: Graph) -> str | None:
    if is_cycle(g):
        return "cycle"
    if is_forest(g):
        return "forest"
    if is_chordal(g):
        return "chordal"
    return None


def expected_profile(g: Graph, family: str, tau: int) -> dict[int, int]:
    """Nonzero reduced Betti numbers predicted for D(G) of a known family."""
    if family == "cycle":
        t, i = divmod(g.n, 4)
        return {2 * t - 1: 3} if i == 0 else {2 * t + i - 2: 1}
    # S^{tau-1}; for tau = 0 this is the EMPTY complex with b_{-1} = 1
    return {tau - 1: 1}


def check_known_types(g: Graph, family: str | None = None, ctx: GraphAnalysis | None = None) -> Verdict:
    """Sphere / wedge types of D(G) for forests, chordal graphs and cycles."""
    c = _ctx(g, ctx)
    actual = detect_family(g)
    if family is None:
        family = actual
    if family is None:
        return Verdict(SKIP, {"family": None}, reason="not a forest, chordal graph or cycle")
    members_ok = {"cycle": is_cycle, "forest": is_forest, "chordal": is_chordal}
    if family not in members_ok:
        raise ValueError(f"unknown family {family!r}")
    if not members_ok[family](g):
        return Verdict(SKIP, {"family": family}, reason=f"graph is not a {family}")
    want = expected_profile(g, family, c.tau)
    got = c.dom_profile.nonzero()
    return _verdict(got == want, {"family": family, "tau": c.tau, "expected": want, "betti": got},
                    witness={"expected": want, "betti": got})


# ---------------------------------------------------------------- reports and corpus


@dataclass
class VerificationReport:
    id: str
    n: int
    alpha: int | None = None
    tau: int | None = None
    conn_d: float | int | None = None
    hdim_bowtie: float | int | None = None
    checks: dict[str, Verdict] = field(default_factory=dict)
    error: str | None = None

    @property
    def failed(self) -> bool:
        return any(v.verdict == FAIL for v in self.checks.values())

    def to_json(self) -> dict[str, Any]:
        if self.error is not None:
            return {"id": self.id, "error": self.error}
        return {
            "id": self.id, "n": self.n, "alpha": self.alpha, "tau": self.tau,
            "conn_d": jsonable(self.conn_d), "hdim_bowtie": jsonable(self.hdim_bowtie),
            "checks": {name: v.to_json() for name, v in self.checks.items()},
        }


@dataclass(frozen=True)
class Caps:
    max_n: int = DEFAULT_MAX_N
    max_bowtie_n: int = DEFAULT_MAX_BOWTIE_N


def _timed(fn: Callable[[], Verdict], timings: bool) -> Verdict:
    t0 = time.perf_counter()
    v = fn()
    if timings:
        v.ms = (time.perf_counter() - t0) * 1000.0
    return v


def verify_graph(gid: str, g: Graph, checks: Iterable[str] = GRAPH_CHECKS, caps: Caps = Caps(),
                 timings: bool = False) -> VerificationReport:
    checks = list(checks)
    unknown = set(checks) - set(GRAPH_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    rep = VerificationReport(gid, g.n)
    if g.n < 1:
        for name in checks:
            rep.checks[name] = Verdict(SKIP, {"n": 0}, reason="n must be at least 1")
        return rep
    if g.n > caps.max_n:
        for name in checks:
            rep.checks[name] = Verdict(SKIP, {"n": g.n}, reason=f"refused: n > max-n {caps.max_n}")
        return rep
    c = GraphAnalysis(g)
    rep.alpha, rep.tau, rep.conn_d = c.alpha, c.tau, c.conn
    runners: dict[str, Callable[[], Verdict]] = {
        "main": lambda: check_main_theorem(g, c),
        "contractible": lambda: check_not_contractible(g, c),
        "duality": lambda: check_alexander_duality(c.dom, c.dom_dual),
        "nagel_reiner": lambda: check_nagel_reiner(dominance_hypergraph(g)),
        "bowtie": lambda: check_bowtie_chain(g, c),
        "free": lambda: check_free_action(g, c),
        "lemma7": lambda: check_lemma7_embedding(g, c),
        "known": lambda: check_known_types(g, None, c),
    }
    for name in checks:
        if name in BOWTIE_CHECKS and g.n > caps.max_bowtie_n:
            rep.checks[name] = Verdict(SKIP, {"n": g.n},
                                       reason=f"refused: n > max-bowtie-n {caps.max_bowtie_n}")
            continue
        rep.checks[name] = _timed(runners[name], timings)
    if g.n <= caps.max_bowtie_n and any(name in BOWTIE_CHECKS for name in checks):
        rep.hdim_bowtie = hdim_z2(c.bowtie_profile)
    return rep


def verify_hypergraph(hid: str, h: Hypergraph, timings: bool = False) -> VerificationReport:
    rep = VerificationReport(hid, h.n)
    rep.checks["nagel_reiner"] = _timed(lambda: check_nagel_reiner(h), timings)
    return rep


def _run_item(args) -> VerificationReport:
    item_id, obj, checks, caps, timings = args
    if isinstance(obj, Exception):
        return VerificationReport(item_id, 0, error=str(obj))
    if isinstance(obj, Hypergraph):
        return verify_hypergraph(item_id, obj, timings)
    return verify_graph(item_id, obj, checks, caps, timings)


def summarize(reports: list[VerificationReport], timings: bool = False) -> dict[str, Any]:
    counts: dict[str, dict[str, int]] = {}
    failures = []
    max_gap = None
    worst = None
    for rep in reports:
        for name, v in rep.checks.items():
            counts.setdefault(name, {PASS: 0, FAIL: 0, SKIP: 0})[v.verdict] += 1
            if v.verdict == FAIL:
                failures.append({"id": rep.id, "check": name})
            if name == "main" and "gap" in v.data:
                max_gap = v.data["gap"] if max_gap is None else max(max_gap, v.data["gap"])
            if v.ms is not None and (worst is None or v.ms > worst["ms"]):
                worst = {"id": rep.id, "check": name, "ms": round(v.ms, 3)}
    out: dict[str, Any] = {
        "graphs": len(reports),
        "parse_errors": sum(1 for r in reports if r.error is not None),
        "checks": {k: counts[k] for k in sorted(counts)},
        "failures": len(failures),
        "failed": failures[:50],
        "max_gap": max_gap,
    }
    if timings:
        out["worst_runtime"] = worst
    return out


def run_corpus(items: Iterable[tuple[str, Any]], checks: Iterable[str] = GRAPH_CHECKS,
               workers: int = 1, caps: Caps = Caps(),
               timings: bool = False) -> tuple[list[VerificationReport], dict[str, Any]]:
    """Verify every item (a Graph, a Hypergraph, or a parse error) and summarize.

    Reports come back in input order whatever the worker count.
    """
    checks = tuple(checks)
    jobs = [(item_id, obj, checks, caps, timings) for item_id, obj in items]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_item, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    else:
        reports = [_run_item(j) for j in jobs]
    return reports, summarize(reports, timings)


def all_labeled_graphs(n: int):
    """Every labeled simple graph on n vertices; index bit j selects the j-th pair (i<k)."""
    pairs = [(i, k) for k in range(n) for i in range(k)]
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for j, (i, k) in enumerate(pairs):
            if code >> j & 1:
                adj[i] |= 1 << k
                adj[k] |= 1 << i
        yield code, Graph(n, tuple(adj))


__all__ = [
    "Caps", "GRAPH_CHECKS", "GraphAnalysis", "VerificationReport", "Verdict",
    "all_labeled_graphs", "check_alexander_duality", "check_bowtie_chain", "check_free_action",
    "check_known_types", "check_lemma7_embedding", "check_main_theorem", "check_nagel_reiner",
    "check_not_contractible", "detect_family", "duality_mismatch", "expected_profile",
    "run_corpus", "summarize", "verify_graph", "verify_hypergraph",
]
