import pytest

import eqcorona as eq
from conftest import (SMALL_CORPUS, brute_alpha, brute_chromatic,
                      brute_equitable_feasible)


# --- equitable k-colorability -------------------------------------------------

def test_k4_not_equitably_3_colorable():
    assert not eq.equitable_k_colorable(eq.named_graph("k4"), 3).feasible


def test_k33_not_equitably_3_colorable():
    g = eq.named_graph("k33")
    assert not eq.equitable_k_colorable(g, 3).feasible
    assert not brute_equitable_feasible(g, 3)


def test_every_corpus_cubic_is_equitably_4_colorable(corpus):
    # maximum degree 3, so 4 classes always admit an equitable split
    for name, g in corpus.items():
        result = eq.equitable_k_colorable(g, 4)
        assert result.feasible, name
        check = eq.verify(g, result.witness)
        assert check.proper and check.equitable


def test_oracle_matches_bruteforce_on_small_graphs():
    for name in ("k4", "k33", "prism", "c5", "c6"):
        g = eq.named_graph(name)
        for k in (2, 3, 4):
            assert (eq.equitable_k_colorable(g, k).feasible
                    == brute_equitable_feasible(g, k)), (name, k)


def test_feasible_witnesses_are_exactly_balanced():
    g = eq.named_graph("petersen")
    result = eq.equitable_k_colorable(g, 3)
    assert result.feasible
    assert sorted(result.witness.class_sizes()) == [3, 3, 4]


# --- chromatic numbers --------------------------------------------------------

@pytest.mark.parametrize("name,chi", [
    ("k4", 4), ("k33", 2), ("cube", 2), ("wagner", 3), ("petersen", 3),
    ("prism", 3), ("pentagonalprism", 3),
])
def test_chromatic_number(name, chi):
    g = eq.named_graph(name)
    assert eq.chromatic_number(g) == chi
    assert brute_chromatic(g) == chi


@pytest.mark.parametrize("name,chi_eq", [
    ("k4", 4), ("k33", 2), ("petersen", 3), ("prism", 3), ("cube", 2),
])
def test_equitable_chromatic_number(name, chi_eq):
    assert eq.equitable_chromatic_number(eq.named_graph(name)) == chi_eq


def test_equitable_chromatic_dominates_chromatic(corpus):
    for name, g in corpus.items():
        assert eq.equitable_chromatic_number(g) >= eq.chromatic_number(g), name


# --- maximum independent set --------------------------------------------------

@pytest.mark.parametrize("name,alpha", [
    ("k4", 1), ("k33", 3), ("petersen", 4), ("prism", 2), ("pentagonalprism", 4),
])
def test_max_independent_set(name, alpha):
    g = eq.named_graph(name)
    result = eq.max_independent_set(g)
    assert result.size == alpha
    assert brute_alpha(g) == alpha
    witness = result.witness
    assert len(witness) == alpha
    assert all(v not in g.adj[u] for u in witness for v in witness)


def test_independent_set_additive_over_disjoint_union():
    blocks = ["k4", "prism", "k33", "petersen"]
    union = eq.disjoint_union([eq.named_graph(b) for b in blocks])
    parts = sum(eq.max_independent_set(eq.named_graph(b)).size for b in blocks)
    assert eq.max_independent_set(union).size == parts


def test_max_independent_set_on_random_cubic_matches_bruteforce():
    for seed in range(8):
        g = eq.random_cubic(10, seed)
        assert eq.max_independent_set(g).size == brute_alpha(g), seed


# --- structured corona oracle ---------------------------------------------------

def test_corona_oracle_certifies_tightness_family():
    h = eq.triangle_tower(4)
    layout = eq.corona(eq.named_graph("k33"), h)
    assert layout.base.n == 78
    assert not eq.corona_equitable4(layout, h).feasible


def test_corona_oracle_k4_center_bipartite_outer():
    h = eq.named_graph("k33")
    layout = eq.corona(eq.named_graph("k4"), h)
    result = eq.corona_equitable4(layout, h)
    assert result.feasible
    check = eq.verify(layout.base, result.witness)
    assert check.proper and check.equitable


def test_corona_oracle_agrees_with_unstructured_search():
    # every ordered small-corpus pair whose corona has at most 42 vertices
    pairs = [(a, b) for a in SMALL_CORPUS for b in SMALL_CORPUS
             if eq.named_graph(a).n * (eq.named_graph(b).n + 1) <= 42]
    assert len(pairs) == 13
    for a, b in pairs:
        g, h = eq.named_graph(a), eq.named_graph(b)
        layout = eq.corona(g, h)
        dp = eq.corona_equitable4(layout, h).feasible
        bt = eq.equitable_k_colorable(layout.base, 4).feasible
        assert dp == bt, (a, b)


def test_corona_equitable_chromatic_number_examples():
    cases = [("k33", "prism", 4), ("prism", "prism", 4), ("k4", "k4", 5),
             ("prism", "k33", 3), ("cube", "k33", 4)]
    for a, b, expected in cases:
        g, h = eq.named_graph(a), eq.named_graph(b)
        layout = eq.corona(g, h)
        assert eq.corona_equitable_chromatic_number(layout, h) == expected, (a, b)


def test_corona_oracle_witness_verifies():
    g, h = eq.named_graph("k33"), eq.named_graph("prism")
    layout = eq.corona(g, h)
    result = eq.corona_equitable4(layout, h)
    assert result.feasible
    check = eq.verify(layout.base, result.witness)
    assert check.proper and check.equitable
    assert result.nodes_explored > 0


# --- budgets --------------------------------------------------------------------

def test_budget_exhaustion_raises_instead_of_answering():
    g = eq.corona(eq.named_graph("wagner"), eq.named_graph("wagner")).base
    with pytest.raises(eq.BudgetExceeded):
        eq.equitable_k_colorable(g, 4, node_budget=5)


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        eq.equitable_k_colorable(eq.named_graph("k4"), 2, node_budget=0)
