"""Cubicity check and classification of connected cubic graphs.

A connected cubic graph is K4 (class Q4), bipartite with equal sides
(class Q2), or equitably 3-chromatic (class Q3).  The Q3 witness is found
by exact search and relabeled so class sizes are nonincreasing.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring, relabel_by_class_size
from .graphs import Graph, bipartition, is_connected
from .oracles import DEFAULT_NODE_BUDGET, colorable_with_class_sizes, equitable_k_colorable


@dataclass(frozen=True)
class CubicClass:
    """Classification witness.

    kind: "Q2" (equitably 2-chromatic), "Q3" (equitably 3-chromatic) or
    "Q4" (the complete graph on four vertices).
    sizes: (t,) for Q2, (u, v, w) with u >= v >= w for Q3, () for Q4.
    witness: the equitable 2- or 3-coloring backing the classification.
    strong3: whether an equitable 3-coloring with all classes exactly n/3
    exists; strong3_witness caches it for the construction rules.
    """

    kind: str
    sizes: tuple[int, ...]
    witness: Coloring | None
    strong3: bool
    strong3_witness: Coloring | None = None


def is_cubic(g: Graph) -> bool:
    return all(len(s) == 3 for s in g.adj)


def classify(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> CubicClass:
    if not is_cubic(g):
        raise ValueError("classification is defined for cubic graphs only")
    if not is_connected(g):
        raise ValueError("classification requires a connected graph")

    if g.n == 4:
        # the only cubic graph on four vertices
        return CubicClass("Q4", (), None, False)

    sides = bipartition(g)
    if sides is not None:
        left, right = sides
        # 3|left| = |E| = 3|right| for a cubic graph, so sides are equal
        assert len(left) == len(right)
        assignment = [0] * g.n
        for v in left:
            assignment[v] = 1
        for v in right:
            assignment[v] = 2
        witness = Coloring(2, tuple(assignment))
        strong = None
        if g.n % 3 == 0:
            strong = colorable_with_class_sizes(g, (g.n // 3,) * 3, node_budget)
        return CubicClass("Q2", (g.n // 2,), witness, strong is not None, strong)

    result = equitable_k_colorable(g, 3, node_budget)
    if not result.feasible:
        raise AssertionError("connected cubic non-bipartite graph (not K4) "
                             "must be equitably 3-colorable")
    witness = relabel_by_class_size(result.witness)
    sizes = witness.class_sizes()
    # when 3 | n an equitable 3-coloring is automatically balanced
    strong = g.n % 3 == 0
    return CubicClass("Q3", sizes, witness, strong, witness if strong else None)
