import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import eqcorona as eq
from eqcorona.io import (emit_dot, emit_edge_list, emit_graph6, emit_report,
                         load_graph_text, parse_coloring_json, parse_edge_list,
                         parse_graph6, report_to_dict)


# --- graph6 -------------------------------------------------------------------

def test_graph6_k4():
    g = parse_graph6("C~")
    assert g.n == 4 and g.num_edges == 6


def test_graph6_rejects_empty_and_garbage():
    with pytest.raises(eq.GraphInputError):
        parse_graph6("")
    with pytest.raises(eq.GraphInputError):
        parse_graph6("C~extra")
    with pytest.raises(eq.GraphInputError):
        parse_graph6("C")  # truncated bitstream
    with pytest.raises(eq.GraphInputError):
        parse_graph6("C\x05")  # byte below 63


def test_graph6_roundtrip_corpus(corpus):
    for name, g in corpus.items():
        assert parse_graph6(emit_graph6(g)) == g, name


def test_graph6_roundtrip_large_corona():
    # 78 vertices exercises the multi-byte size header
    layout = eq.corona(eq.named_graph("k33"), eq.triangle_tower(4))
    assert layout.base.n > 62
    assert parse_graph6(emit_graph6(layout.base)) == layout.base


def test_graph6_header_prefix_accepted():
    assert parse_graph6(">>graph6<<C~").n == 4


def test_graph6_roundtrip_thousand_random_graphs():
    import random
    for seed in range(1000):
        rng = random.Random(seed)
        n = rng.randint(1, 16)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if rng.random() < 0.4]
        g = eq.Graph.from_edges(n, edges)
        assert parse_graph6(emit_graph6(g)) == g, seed


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 70), st.integers(0, 10**6))
def test_graph6_roundtrip_property(n, seed):
    import random
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < 0.3]
    g = eq.Graph.from_edges(n, edges)
    assert parse_graph6(emit_graph6(g)) == g


# --- edge lists -----------------------------------------------------------------

def test_edge_list_k4():
    g = parse_edge_list("n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3")
    assert g == eq.named_graph("k4")


def test_edge_list_self_loop_rejected():
    with pytest.raises(eq.GraphInputError):
        parse_edge_list("0 0")


def test_edge_list_duplicates_collapse():
    g = parse_edge_list("0 1\n1 0")
    assert g.num_edges == 1


def test_edge_list_bad_tokens():
    with pytest.raises(eq.GraphInputError):
        parse_edge_list("0 x")
    with pytest.raises(eq.GraphInputError):
        parse_edge_list("0 1 2")
    with pytest.raises(eq.GraphInputError):
        parse_edge_list("n 2\n0 5")
    with pytest.raises(eq.GraphInputError):
        parse_edge_list("")


def test_edge_list_roundtrip(corpus):
    for name, g in corpus.items():
        assert parse_edge_list(emit_edge_list(g)) == g, name


def test_load_graph_text_sniffs_format():
    assert load_graph_text("C~").n == 4
    assert load_graph_text("n 2\n0 1").n == 2


# --- reports ----------------------------------------------------------------------

def _k4_k4_report():
    g = h = eq.named_graph("k4")
    return eq.equitable_color_corona(g, h), eq.corona(g, h)


def test_report_json_fields():
    report, _ = _k4_k4_report()
    payload = report_to_dict(report)
    assert payload["colors_used"] == 5
    assert payload["exactness"] == "exact"
    assert payload["claimed_range"] == [5, 5]
    assert payload["sequence"] == [4, 4, 4, 4, 4]
    assert len(payload["assignment"]) == 20


def test_report_text_exact_claim():
    report, _ = _k4_k4_report()
    text = emit_report(report, "text")
    assert "χ= = 5 (exact)" in text


def test_report_text_ambiguous_claim():
    g, h = eq.named_graph("k33"), eq.named_graph("prism")
    report = eq.equitable_color_corona(g, h)
    text = emit_report(report, "text")
    assert "4 ≤ χ= ≤ 5" in text


def test_report_dot_has_node_per_vertex():
    report, layout = _k4_k4_report()
    dot = emit_report(report, "dot", layout.base)
    node_lines = [ln for ln in dot.splitlines() if "fillcolor" in ln]
    assert len(node_lines) == layout.base.n
    edge_lines = [ln for ln in dot.splitlines() if "--" in ln]
    assert len(edge_lines) == layout.base.num_edges


def test_report_output_is_deterministic():
    first, layout = _k4_k4_report()
    second, _ = _k4_k4_report()
    for fmt in ("json", "text", "dot"):
        assert emit_report(first, fmt, layout.base) == emit_report(second, fmt, layout.base)


def test_dot_without_coloring():
    g = eq.named_graph("k4")
    dot = emit_dot(g)
    assert dot.count("--") == 6


def test_parse_coloring_json():
    coloring = parse_coloring_json('{"k": 2, "assignment": [1, 2]}')
    assert coloring == eq.Coloring(2, (1, 2))
    with pytest.raises(eq.GraphInputError):
        parse_coloring_json("{}")
    with pytest.raises(eq.GraphInputError):
        parse_coloring_json("not json")
