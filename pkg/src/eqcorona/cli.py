"""Command-line interface.

Exit codes: 0 ok, 1 usage, 2 malformed input, 3 verification failure,
4 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as gio
from .classify import classify, is_cubic
from .coloring import verify
from .corona_coloring import equitable_color_corona, resolve_exact
from .errors import BudgetExceeded, GraphInputError, RecolorInfeasibleError
from .gadgets import pad_mod10, reduce_to_balanced_threshold
from .graphs import (Graph, corona, named_graph, random_cubic, triangle_tower)
from .oracles import (DEFAULT_NODE_BUDGET, chromatic_number, corona_equitable_k,
                      equitable_chromatic_number, equitable_k_colorable,
                      max_independent_set)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BAD_INPUT = 2
EXIT_VERIFY_FAILED = 3
EXIT_BUDGET = 4


def _load_graph(spec: str) -> Graph:
    """Resolve a graph argument: catalog name, file path, or graph6 literal."""
    try:
        return named_graph(spec)
    except GraphInputError:
        pass
    path = Path(spec)
    if path.exists():
        return gio.load_graph_text(path.read_text())
    return gio.parse_graph6(spec)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eqcorona",
                                     description="equitable colorings of coronas of cubic graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a corpus or random cubic graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--named", metavar="NAME")
    src.add_argument("--random", type=int, metavar="N")
    src.add_argument("--tower", type=int, metavar="T")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("g6", "edges"), default="g6")

    p = sub.add_parser("classify", help="classify a connected cubic graph")
    p.add_argument("graph")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)

    p = sub.add_parser("corona", help="emit the corona of two graphs")
    p.add_argument("--center", required=True)
    p.add_argument("--outer", required=True)
    p.add_argument("--format", choices=("g6", "edges", "dot"), default="g6")

    p = sub.add_parser("color", help="equitably color a corona of cubic graphs")
    p.add_argument("--center", required=True)
    p.add_argument("--outer", required=True)
    p.add_argument("--format", choices=("json", "text", "dot"), default="text")
    p.add_argument("--resolve-exact", action="store_true",
                   help="settle range-valued cells with the 4-color oracle")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)

    p = sub.add_parser("verify", help="verify a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring", help="JSON file with fields k and assignment")

    p = sub.add_parser("oracle", help="run an exact search oracle")
    p.add_argument("graph", nargs="?")
    p.add_argument("--corona", nargs=2, metavar=("CENTER", "OUTER"))
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--equitable-k", type=int, metavar="K")
    mode.add_argument("--equitable-chromatic", action="store_true")
    mode.add_argument("--chromatic", action="store_true")
    mode.add_argument("--alpha", action="store_true")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)

    p = sub.add_parser("reduce", help="build a balanced independence instance")
    p.add_argument("graph")
    p.add_argument("k", type=int)
    p.add_argument("--step", choices=("pad", "balance", "chain"), default="chain")
    p.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _cmd_gen(args) -> int:
    if args.named is not None:
        g = named_graph(args.named)
    elif args.random is not None:
        g = random_cubic(args.random, args.seed)
    else:
        g = triangle_tower(args.tower)
    sys.stdout.write(emit_graph(g, args.format))
    return EXIT_OK


def emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "g6":
        return gio.emit_graph6(g) + "\n"
    if fmt == "edges":
        return gio.emit_edge_list(g)
    return gio.emit_dot(g)


def _cmd_classify(args) -> int:
    g = _load_graph(args.graph)
    result = classify(g, args.node_budget)
    if args.format == "json":
        payload = {
            "kind": result.kind,
            "sizes": list(result.sizes),
            "strong3": result.strong3,
            "witness": list(result.witness.assignment) if result.witness else None,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"kind: {result.kind}")
        print(f"sizes: {result.sizes}")
        print(f"strong balanced 3-coloring: {'yes' if result.strong3 else 'no'}")
    return EXIT_OK


def _cmd_corona(args) -> int:
    layout = corona(_load_graph(args.center), _load_graph(args.outer))
    sys.stdout.write(emit_graph(layout.base, args.format))
    return EXIT_OK


def _cmd_color(args) -> int:
    g = _load_graph(args.center)
    h = _load_graph(args.outer)
    report = equitable_color_corona(g, h, node_budget=args.node_budget)
    if args.resolve_exact and report.exactness == "ambiguous_pair":
        report = resolve_exact(g, h, report, args.node_budget)
    layout = corona(g, h)
    check = verify(layout.base, report.coloring)
    if not (check.proper and check.equitable):
        print(f"verification failed: proper={check.proper} equitable={check.equitable}",
              file=sys.stderr)
        return EXIT_VERIFY_FAILED
    sys.stdout.write(gio.emit_report(report, args.format, layout.base))
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    coloring = gio.parse_coloring_json(Path(args.coloring).read_text())
    result = verify(g, coloring)
    print(json.dumps({"proper": result.proper, "equitable": result.equitable,
                      "sequence": list(result.sequence)}))
    return EXIT_OK if result.proper and result.equitable else EXIT_VERIFY_FAILED


def _cmd_oracle(args) -> int:
    if args.corona and args.graph:
        raise ValueError("give either a graph or --corona, not both")
    if args.corona:
        g = _load_graph(args.corona[0])
        h = _load_graph(args.corona[1])
        layout = corona(g, h)
        target: Graph = layout.base
    elif args.graph:
        target = _load_graph(args.graph)
        layout = h = None
    else:
        raise ValueError("oracle needs a graph or --corona")

    if args.equitable_k is not None:
        if layout is not None:
            res = corona_equitable_k(layout, h, args.equitable_k, args.node_budget)
        else:
            res = equitable_k_colorable(target, args.equitable_k, args.node_budget)
        verdict = "feasible" if res.feasible else "infeasible"
        print(f"equitable {args.equitable_k}-coloring: {verdict} "
              f"(nodes_explored={res.nodes_explored})")
    elif args.equitable_chromatic:
        print(f"equitable chromatic number: {equitable_chromatic_number(target, args.node_budget)}")
    elif args.chromatic:
        print(f"chromatic number: {chromatic_number(target, args.node_budget)}")
    else:
        res = max_independent_set(target, args.node_budget)
        print(f"independence number: {res.size} "
              f"(witness: {sorted(res.witness)})")
    return EXIT_OK


def _cmd_reduce(args) -> int:
    h = _load_graph(args.graph)
    k = args.k
    if args.step == "pad":
        inst = pad_mod10(h, k)
    elif args.step == "balance":
        inst = reduce_to_balanced_threshold(h, k)
    else:
        padded = pad_mod10(h, k)
        balanced = reduce_to_balanced_threshold(padded.graph, padded.threshold)
        provenance = (f"{padded.provenance}+{balanced.provenance}"
                      if padded.j else balanced.provenance)
        inst = balanced.__class__(balanced.graph, balanced.m_prime,
                                  balanced.threshold, balanced.r, padded.j,
                                  provenance)
    if args.format == "json":
        print(json.dumps({"m_prime": inst.m_prime, "threshold": inst.threshold,
                          "r": inst.r, "j": inst.j, "provenance": inst.provenance},
                         indent=2))
    else:
        print(f"instance: {inst.m_prime} vertices, threshold {inst.threshold}, "
              f"r={inst.r}, j={inst.j} ({inst.provenance})")
    return EXIT_OK


_HANDLERS = {
    "gen": _cmd_gen,
    "classify": _cmd_classify,
    "corona": _cmd_corona,
    "color": _cmd_color,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "reduce": _cmd_reduce,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except GraphInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RecolorInfeasibleError as exc:
        print(f"internal verification tripwire: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
