"""Command-line interface.

Exit status: 0 success, 1 violation found by ``verify``, 2 parse or input
error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .atlas import (ImplicationGraph, build_corpus, named_graph, parse_corpus_spec, parse_edge,
                    search_strictness, to_dot, verify_implications)
from .canon import iso_class_id
from .catalog import (CatalogFilter, catalog_items, catalog_load, catalog_store,
                      default_catalog_dir)
from .enumeration import enumerate_unital_rings, invariant_factor_decompositions
from .errors import BudgetExceeded, ParseError, RingAtlasError, VersionMismatch
from .poly import DEFAULT_BUDGET
from .predicates import (ALL_PROPERTIES, check, classify,
                         classify_skew, default_degree)
from .recipes import parse_alpha, parse_ring_source, ring_to_json
from .replicate import EXAMPLES, graph_replication
from .ring import is_commutative

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


def _emit(lines) -> None:
    for line in lines:
        print(line)


def _ring(args):
    return parse_ring_source(args.ring)


def cmd_check(args) -> int:
    R = _ring(args)
    if args.prop not in ALL_PROPERTIES:
        raise ParseError(f"unknown property {args.prop!r}", 0)
    alphas = parse_alpha(R, args.alpha) if args.alpha else [None]
    for a in alphas:
        v = check(R, args.prop, a, degree_bound=args.degree, cofactor_bound=args.cofactor,
                  budget=args.budget)
        prefix = f"[alpha={a.describe()}] " if a is not None and len(alphas) > 1 else ""
        print(prefix + v.line(R))
        if args.narrative and v.witness is not None:
            print("  " + v.witness.narrative)
    return EXIT_OK


def cmd_classify(args) -> int:
    R = _ring(args)
    D = default_degree(R.order) if args.degree is None else args.degree
    print(f"ring {R.label} order {R.order} degree-bound {D}")
    if args.alpha:
        for a in parse_alpha(R, args.alpha):
            c = classify_skew(R, a, D, budget=args.budget)
            print(f"alpha {a.describe()} unital={str(a.unital).lower()}")
            _emit("  " + line for line in c.lines(R))
    else:
        c = classify(R, D, budget=args.budget)
        if args.json:
            print(json.dumps(c.to_dict(), sort_keys=True))
        else:
            _emit(c.lines(R))
    return EXIT_OK


def cmd_construct(args) -> int:
    R = _ring(args)
    if args.out:
        Path(args.out).write_text(json.dumps(ring_to_json(R), sort_keys=True) + "\n")
    print(f"ring {R.label} order {R.order} zero {R.name(R.zero)} one {R.name(R.one)} "
          f"commutative={str(is_commutative(R)).lower()} iso {iso_class_id(R)[:16]}")
    if args.tables:
        width = max(len(R.name(x)) for x in range(R.order))
        for title, T in (("+", R.add), ("*", R.mul)):
            print(title)
            for row in T:
                print(" ".join(f"{R.name(int(x)):>{width}}" for x in row))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    rings = enumerate_unital_rings(args.order, up_to_iso=not args.all, cap=args.cap)
    groups = ", ".join("x".join(f"Z{d}" for d in g) or "0"
                       for g in invariant_factor_decompositions(args.order))
    print(f"order {args.order}: {len(rings)} rings "
          f"({'up to isomorphism' if not args.all else 'all structures'}); groups {groups}")
    if not args.all:
        for R in rings:
            print(f"{R.label} commutative={str(is_commutative(R)).lower()} "
                  f"iso {iso_class_id(R)[:16]}")
    return EXIT_OK


def _corpus(args, skew: bool = True):
    if getattr(args, "catalog", None):
        return catalog_load(args.catalog, degree_bound=args.degree)
    return build_corpus(parse_corpus_spec(args.corpus), workers=args.workers,
                        degree_bound=args.degree, skew=skew)


def cmd_verify(args) -> int:
    g = named_graph(args.graph)
    report = verify_implications(_corpus(args, skew=g.skew), g)
    _emit(report.lines())
    if args.graph == "observations":
        return EXIT_OK
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_search(args) -> int:
    if args.edge:
        edges = [parse_edge(args.edge)]
        skew = ImplicationGraph("", edges).skew
    else:
        g = named_graph(args.graph)
        edges, skew = g.edges, g.skew
    entries = _corpus(args, skew=skew)
    for e in edges:
        w = search_strictness(entries, e)
        print(w.line() if w else f"{e}: none within corpus bounds")
    return EXIT_OK


def cmd_catalog(args) -> int:
    path = Path(args.dir) if args.dir else default_catalog_dir()
    if args.action == "store":
        entries = build_corpus(parse_corpus_spec(args.corpus), workers=args.workers,
                               degree_bound=args.degree)
        catalog_store(entries, path, args.degree)
        print(f"stored {len(entries)} entries in {path}")
        return EXIT_OK
    if args.action == "refresh":
        entries = build_corpus(catalog_items(path), workers=args.workers,
                               degree_bound=args.degree)
        catalog_store(entries, path, args.degree)
        print(f"reclassified {len(entries)} entries in {path}")
        return EXIT_OK
    flt = CatalogFilter.parse(args.filter) if args.filter else None
    try:
        entries = catalog_load(path, flt, args.degree)
    except VersionMismatch as e:
        print(f"version mismatch: {e}; reclassifying", file=sys.stderr)
        catalog_store(build_corpus(catalog_items(path), workers=args.workers,
                                   degree_bound=args.degree), path, args.degree)
        entries = catalog_load(path, flt, args.degree)
    if not entries:
        print("none within bounds")
    for e in entries:
        print(f"{e.recipe} order {e.ring.order} kind {e.kind} iso {e.iso_class_id[:16]} "
              f"skew-pairs {len(e.skew)}")
        if args.verbose:
            _emit("  " + line for line in e.classification.lines(e.ring))
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = named_graph(args.graph)
    report = strict = None
    if args.corpus or args.catalog:
        entries = _corpus(args, skew=g.skew)
        report = verify_implications(entries, g)
        strict = {str(e): search_strictness(entries, e) for e in g.edges}
    text = to_dot(g, report, strict)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_replicate(args) -> int:
    reps = []
    if args.example:
        keys = list(EXAMPLES) if args.example == "all" else [args.example]
        for k in keys:
            if k not in EXAMPLES:
                raise ParseError(f"unknown example {k!r}", 0)
            reps.append((f"example {k}", EXAMPLES[k]()))
    if args.figure:
        which = ["classical", "skew"] if args.figure == "all" else [args.figure]
        for w in which:
            if w not in ("classical", "skew"):
                raise ParseError(f"unknown graph {w!r}", 0)
            reps.append((f"graph {w}", graph_replication(w, args.corpus, args.workers)))
    if not reps:
        raise ParseError("replicate needs --example or --figure", 0)
    ok = True
    for name, r in reps:
        print(f"== {name}")
        _emit(r.lines())
        ok = ok and r.ok
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=1, help="worker processes")
    common.add_argument("--budget", type=float, default=DEFAULT_BUDGET,
                        help="maximum estimated search cost")
    common.add_argument("--degree", type=int, default=None,
                        help="polynomial degree bound (default: 2, or 1 above order 64)")

    p = argparse.ArgumentParser(prog="ringatlas", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("check", parents=[common], help="decide one property")
    s.add_argument("--ring", required=True)
    s.add_argument("--prop", required=True)
    s.add_argument("--alpha")
    s.add_argument("--cofactor", type=int, default=None, help="McCoy cofactor degree bound")
    s.add_argument("--narrative", action="store_true", help="print the witness equation")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("classify", parents=[common], help="full verdict vector")
    s.add_argument("--ring", required=True)
    s.add_argument("--alpha")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("construct", parents=[common], help="build a ring")
    s.add_argument("--ring", required=True)
    s.add_argument("--out")
    s.add_argument("--tables", action="store_true")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("enumerate", parents=[common], help="unital rings of one order")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--all", action="store_true", help="every structure, not up to isomorphism")
    s.add_argument("--cap", type=int, default=None)
    s.set_defaults(func=cmd_enumerate)

    for verb, func, hlp in (("verify", cmd_verify, "check an implication graph"),
                            ("search", cmd_search, "find separating rings"),
                            ("export-dot", cmd_export_dot, "write a graph as DOT")):
        s = sub.add_parser(verb, parents=[common], help=hlp)
        s.add_argument("--corpus", default=None if verb == "export-dot" else "default")
        s.add_argument("--catalog", help="read entries from a catalog directory")
        s.add_argument("--graph", default="classical")
        if verb == "search":
            s.add_argument("--edge", help='e.g. "reduced -> symmetric"')
        if verb == "export-dot":
            s.add_argument("--out")
        s.set_defaults(func=func)

    s = sub.add_parser("catalog", parents=[common], help="store or query a catalog")
    s.add_argument("action", choices=["store", "load", "refresh"])
    s.add_argument("--dir")
    s.add_argument("--corpus", default="default")
    s.add_argument("--filter")
    s.add_argument("--verbose", action="store_true")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("replicate", parents=[common], help="worked examples and implication graphs")
    s.add_argument("--example", help="1, 2, 3 or all")
    s.add_argument("--figure", help="classical, skew or all")
    s.add_argument("--corpus", default="default")
    s.set_defaults(func=cmd_replicate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (RingAtlasError, ValueError, IndexError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
