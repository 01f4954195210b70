import pytest

import eqcorona as eq


@pytest.mark.parametrize("name,cubic", [
    ("k4", True), ("k33", True), ("c5", False), ("k2", False),
    ("petersen", True),
])
def test_is_cubic(name, cubic):
    assert eq.is_cubic(eq.named_graph(name)) == cubic


def test_classify_k4():
    result = eq.classify(eq.named_graph("k4"))
    assert result.kind == "Q4"
    assert result.sizes == ()
    assert not result.strong3


def test_classify_k33():
    result = eq.classify(eq.named_graph("k33"))
    assert result.kind == "Q2"
    assert result.sizes == (3,)
    assert not result.strong3  # no (2,2,2) split into independent classes
    check = eq.verify(eq.named_graph("k33"), result.witness)
    assert check.proper and check.equitable


def test_classify_prism():
    result = eq.classify(eq.named_graph("prism"))
    assert result.kind == "Q3"
    assert result.sizes == (2, 2, 2)
    assert result.strong3
    assert result.strong3_witness is not None
    check = eq.verify(eq.named_graph("prism"), result.strong3_witness)
    assert check.proper and check.equitable


def test_classify_petersen():
    result = eq.classify(eq.named_graph("petersen"))
    assert result.kind == "Q3"
    assert result.sizes == (4, 3, 3)
    assert not result.strong3  # 10 is not divisible by 3


def test_classify_wagner_and_cube():
    wagner = eq.classify(eq.named_graph("wagner"))
    assert wagner.kind == "Q3" and not wagner.strong3
    cube = eq.classify(eq.named_graph("cube"))
    assert cube.kind == "Q2" and cube.sizes == (4,) and not cube.strong3


def test_classify_witnesses_verify(corpus):
    for name, g in corpus.items():
        result = eq.classify(g)
        if result.kind == "Q4":
            continue
        check = eq.verify(g, result.witness)
        assert check.proper and check.equitable, name
        if result.kind == "Q3":
            sizes = result.sizes
            assert sizes[0] >= sizes[1] >= sizes[2] >= sizes[0] - 1


def test_classify_bipartite_sides_equal():
    for seed in range(30):
        g = eq.random_connected_cubic(10, seed)
        result = eq.classify(g)
        if result.kind == "Q2":
            assert result.witness.class_sizes() == (5, 5)


def test_classify_is_deterministic():
    g = eq.named_graph("petersen")
    assert eq.classify(g) == eq.classify(g)


def test_classify_rejects_noncubic_and_disconnected():
    with pytest.raises(ValueError):
        eq.classify(eq.named_graph("c6"))
    two_prisms = eq.disjoint_union([eq.named_graph("prism")] * 2)
    with pytest.raises(ValueError):
        eq.classify(two_prisms)


def test_strong3_iff_balanced_split_exists():
    # towers have 3|n and carry balanced colorings by construction
    tower = eq.triangle_tower(4)
    assert eq.classify(tower).strong3
    assert not eq.classify(eq.named_graph("wagner")).strong3  # 3 does not divide 8
