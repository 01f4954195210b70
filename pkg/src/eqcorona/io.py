"""Graph and report serialization: graph6, whitespace edge lists, JSON
reports, and DOT export with a fixed five-color palette."""
from __future__ import annotations

import json

from .coloring import Coloring
from .corona_coloring import ColoringReport
from .errors import GraphInputError
from .graphs import Graph

# one fixed fill color per coloring class, so renders diff cleanly
DOT_PALETTE = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00")

_G6_HEADER = ">>graph6<<"


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (sizes up to 258047)."""
    data = line.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise GraphInputError("empty graph6 input")
    raw = [ord(ch) - 63 for ch in data]
    if any(not 0 <= x <= 63 for x in raw):
        raise GraphInputError("graph6 bytes must be printable ASCII 63..126")
    if raw[0] < 63:
        n, body = raw[0], raw[1:]
    else:
        if len(raw) < 4 or raw[1] == 63:
            raise GraphInputError("malformed graph6 size header")
        n = (raw[1] << 12) | (raw[2] << 6) | raw[3]
        body = raw[4:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphInputError(
            f"graph6 bitstream has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = []
    for x in body:
        bits.extend((x >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    elif n <= 258047:
        header = "~" + chr(((n >> 12) & 63) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise GraphInputError(f"graph6 supports at most 258047 vertices, got {n}")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if j in g.adj[i] else 0)
    while len(bits) % 6:
        bits.append(0)
    body = "".join(chr(63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3
                              | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5]))
                   for i in range(0, len(bits), 6))
    return header + body


def parse_edge_list(text: str) -> Graph:
    """Whitespace edge list: optional first line "n <count>", then "u v"
    lines with 0-based indices.  Duplicate edges collapse; self-loops and
    out-of-range indices are errors."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise GraphInputError("empty edge list")
    declared = None
    start = 0
    head = lines[0].split()
    if head[0] == "n":
        if len(head) != 2 or not head[1].isdigit():
            raise GraphInputError(f"bad size header {lines[0]!r}")
        declared = int(head[1])
        start = 1
    edges = []
    max_seen = -1
    for ln in lines[start:]:
        tokens = ln.split()
        if len(tokens) != 2:
            raise GraphInputError(f"expected 'u v', got {ln!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError as exc:
            raise GraphInputError(f"non-integer token in {ln!r}") from exc
        if u < 0 or v < 0:
            raise GraphInputError(f"negative vertex index in {ln!r}")
        if u == v:
            raise GraphInputError(f"self-loop at vertex {u}")
        if declared is not None and (u >= declared or v >= declared):
            raise GraphInputError(f"vertex index in {ln!r} exceeds declared n={declared}")
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    n = declared if declared is not None else max_seen + 1
    return Graph.from_edges(n, set((min(u, v), max(u, v)) for u, v in edges))


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def load_graph_text(text: str) -> Graph:
    """Sniff the format: edge lists have whitespace-separated tokens, graph6
    lines do not."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if len(line.split()) > 1:
            return parse_edge_list(text)
        return parse_graph6(line)
    raise GraphInputError("no graph data found")


def emit_dot(g: Graph, coloring: Coloring | None = None, name: str = "g") -> str:
    lines = [f"graph {name} {{", "  node [style=filled];"]
    for v in range(g.n):
        if coloring is not None:
            fill = DOT_PALETTE[(coloring.assignment[v] - 1) % len(DOT_PALETTE)]
            lines.append(f'  {v} [fillcolor="{fill}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_to_dict(report: ColoringReport) -> dict:
    return {
        "colors_used": report.colors_used,
        "exactness": report.exactness,
        "claimed_range": list(report.claimed_range),
        "rule_fired": report.rule_fired,
        "sequence": list(report.coloring.class_sizes()),
        "assignment": list(report.coloring.assignment),
    }


def emit_report(report: ColoringReport, fmt: str, graph: Graph | None = None) -> str:
    """Serialize a report; byte-identical output for identical inputs."""
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2) + "\n"
    if fmt == "text":
        lo, hi = report.claimed_range
        if report.exactness == "exact":
            claim = f"χ= = {report.colors_used} (exact)"
        else:
            claim = (f"{lo} ≤ χ= ≤ {hi} (ambiguous pair; "
                     f"output uses {report.colors_used}, at most one above optimal)")
        lines = [
            f"vertices: {len(report.coloring.assignment)}",
            f"colors used: {report.colors_used}",
            f"rule: {report.rule_fired}",
            f"claimed: {claim}",
            f"sequence: {report.coloring.class_sizes()}",
        ]
        return "\n".join(lines) + "\n"
    if fmt == "dot":
        if graph is None:
            raise ValueError("DOT output needs the colored graph")
        return emit_dot(graph, report.coloring, name="corona")
    raise ValueError(f"unknown report format {fmt!r}")


def parse_coloring_json(text: str) -> Coloring:
    try:
        payload = json.loads(text)
        return Coloring(int(payload["k"]), tuple(int(c) for c in payload["assignment"]))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise GraphInputError(f"bad coloring JSON: {exc}") from exc
