"""Command-line entry point: ``domcomplex {invariants,complex,homology,verify}``."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import tempfile
from pathlib import Path
from typing import Any, Iterator

from .errors import ParseError
from .graph import (Graph, domination_number, generate, independence_number, parse_edge_list,
                    parse_graph6)
from .homology import conn_z2, hdim_z2, reduced_betti
from .hypergraph import bowtie, dominance_hypergraph, parse_hypergraph, random_hypergraph
from .simplicial import (SimplicialComplex, alexander_dual, dominance_complex, format_facets,
                         independence_complex_graph, independence_dual, parse_facets, suspension)
from .verify import (DEFAULT_MAX_BOWTIE_N, DEFAULT_MAX_N, GRAPH_CHECKS, Caps, all_labeled_graphs,
                     jsonable, run_corpus)

WORKERS_ENV = "DOMCOMPLEX_WORKERS"
WHICH = ("dominance", "dual", "bowtie_ind", "suspension_dual")
COMPLEX_WHICH = ("as_is", "dual", "suspension")

# CLI family name -> generator family (None marks the exhaustive enumeration)
FAMILY_ALIASES = {
    "path": "path", "paths": "path",
    "cycle": "cycle", "cycles": "cycle",
    "complete": "complete",
    "star": "star", "stars": "star",
    "tree": "random_tree", "trees": "random_tree", "random_tree": "random_tree",
    "chordal": "random_chordal", "random_chordal": "random_chordal",
    "gnp": "gnp",
    "all-labeled": None,
    "hypergraphs": "hypergraphs",
}
RANDOM_FAMILIES = {"random_tree", "random_chordal", "gnp", "hypergraphs"}


class Refusal(Exception):
    """A size cap would be exceeded; nothing is written."""


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"range must look like 'a..b', got {text!r}")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-integer range {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


# ---------------------------------------------------------------- input sources


def _read_graph_file(path: Path, fmt: str) -> Iterator[tuple[str, Any]]:
    text = path.read_text()
    if fmt == "auto":
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        fmt = "edgelist" if first.isdigit() else "graph6"
    if fmt == "edgelist":
        try:
            yield str(path), parse_edge_list(text)
        except ParseError as err:
            yield str(path), err
        return
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            yield f"{path}:{lineno}", parse_graph6(line.strip())
        except ParseError as err:
            yield f"{path}:{lineno}", ParseError(str(err), line=lineno)


def _graphs_from_input(path: Path, fmt: str) -> Iterator[tuple[str, Any]]:
    if path.is_dir():
        for child in sorted(p for p in path.iterdir() if p.is_file()):
            yield from _read_graph_file(child, "edgelist" if fmt == "auto" else fmt)
    else:
        yield from _read_graph_file(path, fmt)


def _sizes(args, default: tuple[int, int]) -> tuple[int, int]:
    if args.n is not None:
        return args.n, args.n
    return args.range or default


def _graphs_from_family(args) -> Iterator[tuple[str, Any]]:
    fam = FAMILY_ALIASES[args.family]
    if fam is None:
        lo, hi = _sizes(args, (1, 5))
        for n in range(lo, hi + 1):
            for code, g in all_labeled_graphs(n):
                yield f"all-labeled:n={n}:{code}", g
        return
    if fam not in RANDOM_FAMILIES:
        lo, hi = _sizes(args, (3, 10))
        for n in range(lo, hi + 1):
            yield f"{fam}:n={n}", generate(fam, n)
        return
    base = args.seed if args.seed is not None else 0
    lo, hi = _sizes(args, (1, 6) if fam == "hypergraphs" else (1, 10))
    for i in range(args.count):
        seed = base + i
        rng = random.Random(seed)
        n = rng.randint(lo, hi)
        if fam == "hypergraphs":
            m = rng.randint(1, args.max_edges)
            yield f"hypergraphs:n={n}:m={m}:seed={seed}", random_hypergraph(n, m, rng)
        elif fam == "gnp":
            p = 0.5 if args.p is None else args.p
            yield f"gnp:n={n}:p={p}:seed={seed}", generate(fam, n, p=p, seed=seed)
        else:
            yield f"{fam}:n={n}:seed={seed}", generate(fam, n, seed=seed)


def _items(args) -> Iterator[tuple[str, Any]]:
    if getattr(args, "hypergraph", None):
        path = Path(args.hypergraph)
        try:
            yield str(path), parse_hypergraph(path.read_text())
        except ParseError as err:
            yield str(path), err
    if args.input:
        yield from _graphs_from_input(Path(args.input), args.format)
    if args.family:
        yield from _graphs_from_family(args)


# ---------------------------------------------------------------- subcommands


def build_complex(g: Graph, which: str, caps: Caps) -> SimplicialComplex:
    if which == "bowtie_ind":
        if g.n > caps.max_bowtie_n:
            raise Refusal(f"n={g.n} exceeds --max-bowtie-n {caps.max_bowtie_n}; "
                          f"rerun with --max-bowtie-n {g.n}")
        return independence_complex_graph(bowtie(g))
    if g.n > caps.max_n:
        raise Refusal(f"n={g.n} exceeds --max-n {caps.max_n}; rerun with --max-n {g.n}")
    if which == "dominance":
        return dominance_complex(g)
    dual = independence_dual(dominance_hypergraph(g))
    return dual if which == "dual" else suspension(dual)


def _ingested(args) -> SimplicialComplex:
    k = parse_facets(Path(args.complex).read_text())
    if args.transform == "dual":
        return alexander_dual(k)
    if args.transform == "suspension":
        return suspension(k)
    return k


def cmd_invariants(args, caps: Caps) -> tuple[str, int]:
    rows = ["id\tn\tm\talpha\ttau\tgamma"]
    status = 0
    for gid, g in _items(args):
        if isinstance(g, Exception):
            rows.append(f"{gid}\terror: {g}")
            status = 1
            continue
        alpha = independence_number(g)
        gamma = domination_number(g) if g.n <= caps.max_n else "-"
        rows.append(f"{gid}\t{g.n}\t{g.num_edges}\t{alpha}\t{g.n - alpha}\t{gamma}")
    return "\n".join(rows) + "\n", status


def cmd_complex(args, caps: Caps) -> tuple[str, int]:
    if args.complex:
        return format_facets(_ingested(args)), 0
    blocks = []
    items = list(_items(args))
    status = 0
    for gid, g in items:
        if isinstance(g, Exception):
            print(f"{gid}: {g}", file=sys.stderr)
            status = 1
            continue
        text = format_facets(build_complex(g, args.which, caps))
        blocks.append(text if len(items) == 1 else f"# {gid}\n{text}")
    return "".join(blocks), status


def cmd_homology(args, caps: Caps) -> tuple[str, int]:
    rows = ["id\twhich\tn\tkind\tbetti\tnonzero\tconn\thdim"]
    if args.complex:
        targets = [(args.complex, args.transform, _ingested(args))]
    else:
        targets = []
        for gid, g in _items(args):
            if isinstance(g, Exception):
                rows.append(f"{gid}\terror: {g}")
                continue
            targets.append((gid, args.which, build_complex(g, args.which, caps)))
    for gid, which, k in targets:
        p = reduced_betti(k)
        betti = ",".join(map(str, p.betti)) or "-"
        nonzero = " ".join(f"{d}:{b}" for d, b in p.nonzero().items()) or "-"
        rows.append(f"{gid}\t{which}\t{k.n}\t{k.kind}\t{betti}\t{nonzero}\t"
                    f"{jsonable(conn_z2(p))}\t{jsonable(hdim_z2(p))}")
    return "\n".join(rows) + "\n", 1 if any("\terror: " in r for r in rows) else 0


def _parse_checks(text: str) -> tuple[str, ...]:
    if text == "all":
        return GRAPH_CHECKS
    aliases = {"nagel-reiner": "nagel_reiner", "duals": "duality", "embedding": "lemma7"}
    names = tuple(aliases.get(c.strip(), c.strip()) for c in text.split(",") if c.strip())
    unknown = [c for c in names if c not in GRAPH_CHECKS]
    if unknown:
        raise SystemExit(f"unknown checks {unknown}; choose from {', '.join(GRAPH_CHECKS)} or 'all'")
    return names


def cmd_verify(args, caps: Caps) -> tuple[str, int]:
    checks = _parse_checks(args.checks)
    reports, summary = run_corpus(_items(args), checks, args.workers, caps, args.timings)
    lines = [json.dumps(r.to_json(), sort_keys=True) for r in reports]
    lines.append(json.dumps({"summary": jsonable(summary)}, sort_keys=True))
    bad = summary["failures"] > 0 or summary["parse_errors"] > 0
    return "\n".join(lines) + "\n", 1 if bad else 0


# ---------------------------------------------------------------- argument parsing


def _add_sources(p: argparse.ArgumentParser, hyper: bool = False) -> None:
    src = p.add_argument_group("input")
    src.add_argument("--input", help="graph6 file (one graph per line), edge-list file, "
                     "or directory of edge-list files")
    src.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    src.add_argument("--family", choices=sorted(FAMILY_ALIASES),
                     help="generate graphs instead of (or in addition to) reading --input")
    src.add_argument("--n", type=int, help="fixed vertex count for --family")
    src.add_argument("--range", type=_parse_range, help="vertex-count range a..b for --family")
    src.add_argument("--count", type=int, default=1, help="number of random graphs")
    src.add_argument("--seed", type=int, help="base seed; graph i uses seed+i")
    src.add_argument("--p", type=float, help="edge probability for gnp")
    src.add_argument("--max-edges", type=int, default=6, help="edge cap for random hypergraphs")
    if hyper:
        src.add_argument("--hypergraph", help="hypergraph file ('n m' header, one edge per line)")


def _add_common(p: argparse.ArgumentParser, top: bool) -> None:
    # accepted before or after the subcommand; the subparser copy must not clobber the global one
    dflt = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p.add_argument("--out", default=dflt(None), help="write output here instead of stdout")
    p.add_argument("--max-n", type=int, default=dflt(DEFAULT_MAX_N),
                   help=f"largest n for dominance-complex work (default {DEFAULT_MAX_N})")
    p.add_argument("--max-bowtie-n", type=int, default=dflt(DEFAULT_MAX_BOWTIE_N),
                   help=f"largest n for bipartite-double work (default {DEFAULT_MAX_BOWTIE_N})")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="domcomplex", description=__doc__)
    _add_common(ap, top=True)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="n, edges, alpha, tau and domination number per graph")
    _add_sources(p)
    _add_common(p, top=False)

    for name, helptext in (("complex", "emit a complex in facet format"),
                           ("homology", "reduced Z2 Betti numbers, conn and h-dim")):
        p = sub.add_parser(name, help=helptext)
        _add_sources(p)
        _add_common(p, top=False)
        p.add_argument("--which", choices=WHICH, default="dominance")
        p.add_argument("--complex", help="read a complex in facet format instead of graphs")
        p.add_argument("--transform", choices=COMPLEX_WHICH, default="as_is",
                       help="applied to a --complex input")

    p = sub.add_parser("verify", help="run checks, JSON-lines report plus summary")
    _add_sources(p, hyper=True)
    _add_common(p, top=False)
    p.add_argument("--checks", default="all",
                   help=f"comma list from {','.join(GRAPH_CHECKS)}, or 'all'")
    default_workers = int(os.environ.get(WORKERS_ENV, "1"))
    p.add_argument("--workers", type=int, default=default_workers,
                   help=f"worker processes (default from ${WORKERS_ENV}, else 1)")
    p.add_argument("--timings", action="store_true",
                   help="add per-check milliseconds (output is then no longer byte-stable)")
    return ap


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    target = Path(out)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, target)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    caps = Caps(args.max_n, args.max_bowtie_n)
    has_source = any(getattr(args, a, None) for a in ("input", "family", "hypergraph", "complex"))
    if not has_source:
        print("no input: give --input, --family" +
              (", --hypergraph" if args.command == "verify" else "") +
              (" or --complex" if args.command in ("complex", "homology") else ""),
              file=sys.stderr)
        return 2
    if args.family == "hypergraphs" and args.command != "verify":
        print("--family hypergraphs is only available for verify", file=sys.stderr)
        return 2
    handler = {"invariants": cmd_invariants, "complex": cmd_complex,
               "homology": cmd_homology, "verify": cmd_verify}[args.command]
    try:
        text, status = handler(args, caps)
    except Refusal as err:
        print(f"refused: {err}", file=sys.stderr)
        return 2
    except (ParseError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    _write(text, args.out)
    return status


if __name__ == "__main__":
    sys.exit(main())
