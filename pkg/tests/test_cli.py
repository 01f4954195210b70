import json

import pytest

import eqcorona as eq
from eqcorona.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_color_wagner_k33(capsys):
    code, out, _ = run(capsys, "color", "--center", "wagner", "--outer", "k33")
    assert code == 0
    assert "colors used: 4" in out
    assert "χ= = 4 (exact)" in out


def test_color_json_fields(capsys):
    code, out, _ = run(capsys, "color", "--center", "k4", "--outer", "k4",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["colors_used"] == 5
    assert payload["rule_fired"] == "outer_complete"


def test_color_resolve_exact(capsys):
    code, out, _ = run(capsys, "color", "--center", "k33", "--outer", "prism",
                       "--resolve-exact")
    assert code == 0
    assert "χ= = 4 (exact)" in out


def test_color_prints_sandwich_claim(capsys):
    code, out, _ = run(capsys, "color", "--center", "k33", "--outer", "prism")
    assert code == 0
    assert "4 ≤ χ= ≤ 5" in out


def test_color_dot_output(capsys):
    code, out, _ = run(capsys, "color", "--center", "k4", "--outer", "k4",
                       "--format", "dot")
    assert code == 0
    assert out.count("fillcolor") == 20


def test_oracle_corona(capsys):
    code, out, _ = run(capsys, "oracle", "--equitable-k", "4",
                       "--corona", "k33", "prism")
    assert code == 0
    assert "feasible" in out
    assert "nodes_explored=" in out


def test_oracle_alpha(capsys):
    code, out, _ = run(capsys, "oracle", "--alpha", "petersen")
    assert code == 0
    assert "independence number: 4" in out


def test_oracle_budget_exhaustion_exit_code(capsys):
    code, _, err = run(capsys, "oracle", "--equitable-k", "4",
                       "--corona", "wagner", "wagner", "--node-budget", "5")
    assert code == 4
    assert "budget" in err


def test_reduce_balance(capsys):
    code, out, _ = run(capsys, "reduce", "petersen", "5")
    assert code == 0
    assert "threshold 8" in out and "r=1" in out


def test_reduce_pad(capsys):
    code, out, _ = run(capsys, "reduce", "prism", "2", "--step", "pad")
    assert code == 0
    assert "30 vertices" in out and "j=4" in out


def test_classify_command(capsys):
    code, out, _ = run(capsys, "classify", "petersen", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "Q3"
    assert payload["sizes"] == [4, 3, 3]


def test_gen_and_corona_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--named", "k4")
    assert code == 0 and out.strip() == "C~"
    code, out, _ = run(capsys, "corona", "--center", "k4", "--outer", "k4")
    assert code == 0
    from eqcorona.io import parse_graph6
    g = parse_graph6(out.strip())
    assert g.n == 20 and g.num_edges == 46


def test_gen_random_deterministic(capsys):
    code, first, _ = run(capsys, "gen", "--random", "10", "--seed", "3")
    code2, second, _ = run(capsys, "gen", "--random", "10", "--seed", "3")
    assert code == code2 == 0
    assert first == second


def test_verify_command(capsys, tmp_path):
    graph_file = tmp_path / "g.g6"
    graph_file.write_text("C~\n")
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"k": 4, "assignment": [1, 2, 3, 4]}))
    code, out, _ = run(capsys, "verify", str(graph_file), str(good))
    assert code == 0
    assert json.loads(out) == {"proper": True, "equitable": True,
                               "sequence": [1, 1, 1, 1]}
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"k": 4, "assignment": [1, 1, 3, 4]}))
    code, out, _ = run(capsys, "verify", str(graph_file), str(bad))
    assert code == 3


def test_unknown_graph_is_input_error(capsys):
    code, _, err = run(capsys, "gen", "--named", "nosuch")
    assert code == 2


def test_noncubic_classify_is_usage_error(capsys):
    code, _, _ = run(capsys, "classify", "c5")
    assert code == 1


def test_bad_flags_are_usage_errors(capsys):
    assert run(capsys, "color", "--center", "k4")[0] == 1
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "oracle", "--equitable-k", "4")[0] == 1


def test_missing_file_is_input_error(capsys):
    code, _, _ = run(capsys, "verify", "/does/not/exist.g6", "/nope.json")
    assert code == 2


def test_cli_output_byte_identical(capsys):
    args = ("color", "--center", "wagner", "--outer", "prism", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_edge_list_file_input(capsys, tmp_path):
    path = tmp_path / "graph.txt"
    path.write_text(eq.emit_edge_list(eq.named_graph("petersen")))
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0
    assert "Q3" in out
