"""Reduction gadgets tying independent sets in cubic graphs to equitable
4-colorability of coronas, with exact-search validators.

Graphs here may be disconnected (padding adds isolated blocks), so these
operations bypass the connected-graph classifier on purpose.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .classify import is_cubic
from .coloring import Coloring
from .graphs import (CoronaLayout, Graph, bipartition, center_subgraph,
                     complete_bipartite, complete_graph, corona, disjoint_union,
                     named_graph)
from .oracles import (DEFAULT_NODE_BUDGET, Budget, colorable_with_class_sizes,
                      max_independent_set)


@dataclass(frozen=True)
class ReductionInstance:
    """A cubic instance of the balanced independent-set question.

    ``threshold`` is the independent-set target for this instance; after
    balancing it always equals 4*m_prime/10.  ``j`` counts padding blocks,
    ``r`` replication blocks, so chained reductions stay auditable.
    """

    graph: Graph
    m_prime: int
    threshold: int
    r: int
    j: int
    provenance: str


def pad_mod10(h: Graph, k: int) -> ReductionInstance:
    """Add the fewest isolated K33 blocks making the vertex count divisible
    by 10.  Each block raises the independence target by 3, so the answer is
    preserved."""
    if not is_cubic(h):
        raise ValueError("padding is defined for cubic graphs")
    m = h.n
    j = next(j for j in range(5) if (m + 6 * j) % 10 == 0)
    graph = disjoint_union([h] + [complete_bipartite(3, 3)] * j) if j else h
    return ReductionInstance(graph, m + 6 * j, k + 3 * j, 0, j, "pad_isolated_k33")


def reduce_to_balanced_threshold(h: Graph, k: int) -> ReductionInstance:
    """Shift an arbitrary target k to the balanced target 4m'/10 by adding
    blocks of known independence number (1 per K4, 2 per prism, 3 per K33)."""
    if not is_cubic(h):
        raise ValueError("balancing is defined for cubic graphs")
    m = h.n
    if m % 10 != 0:
        raise ValueError(f"vertex count {m} is not divisible by 10; pad first")
    base = 4 * m // 10
    r = abs(base - k)
    prism = named_graph("prism")
    if k >= base:
        blocks = [h] + [complete_graph(4)] * r + [prism] * r
        provenance = "balance_surplus"
    else:
        blocks = ([h] + [complete_graph(4)] * r + [prism] * (2 * r)
                  + [complete_bipartite(3, 3)] * (4 * r))
        provenance = "balance_deficit"
    graph = disjoint_union(blocks) if r else h
    m_prime = graph.n
    return ReductionInstance(graph, m_prime, 4 * m_prime // 10, r, 0, provenance)


def coloring_of_type(h: Graph, sizes: tuple[int, int, int],
                     node_budget: int = DEFAULT_NODE_BUDGET) -> Coloring | None:
    """Proper 3-coloring with exactly the given class sizes, or None."""
    if sum(sizes) != h.n:
        raise ValueError(f"type {sizes} does not sum to the vertex count {h.n}")
    return colorable_with_class_sizes(h, sizes, node_budget)


@dataclass(frozen=True)
class EquivalenceReport:
    alpha_ok: bool
    coloring_ok: bool
    agree: bool
    balanced_split_found: bool | None
    independent_set: tuple[int, ...] | None


def alpha_type_equivalence_check(h: Graph,
                                 node_budget: int = DEFAULT_NODE_BUDGET) -> EquivalenceReport:
    """Check, by exact search, that an independent set of size 4m/10 exists
    iff a proper 3-coloring of type (4m/10, 3m/10, 3m/10) does.

    When the independent-set side holds, additionally search for a set of
    exactly that size whose removal leaves an equitably 2-colorable graph
    (the witness that turns the set into the unbalanced coloring).
    """
    if not is_cubic(h):
        raise ValueError("equivalence check is defined for cubic graphs")
    m = h.n
    if m % 10 != 0:
        raise ValueError(f"vertex count {m} is not divisible by 10")
    target = 4 * m // 10
    alpha_ok = max_independent_set(h, node_budget).size >= target
    typed = coloring_of_type(h, (target, 3 * m // 10, 3 * m // 10), node_budget)
    coloring_ok = typed is not None
    split = None
    if alpha_ok:
        split = _exact_set_with_balanced_remainder(h, target, node_budget)
    return EquivalenceReport(alpha_ok, coloring_ok, alpha_ok == coloring_ok,
                             None if not alpha_ok else split is not None,
                             split)


def _exact_set_with_balanced_remainder(h: Graph, size: int,
                                       node_budget: int) -> tuple[int, ...] | None:
    """First independent set of exactly ``size`` vertices (lexicographic)
    whose removal leaves a bipartite graph splittable into two equal classes."""
    budget = Budget(node_budget)
    chosen: list[int] = []

    def remainder_ok() -> bool:
        keep = [v for v in range(h.n) if v not in set(chosen)]
        if len(keep) % 2 != 0:
            return False
        keepset = set(keep)
        achievable = 1  # bitmask over side-A totals across components
        seen: set[int] = set()
        for start in keep:
            if start in seen:
                continue
            color = {start: 1}
            stack = [start]
            seen.add(start)
            counts = [1, 0]
            while stack:
                x = stack.pop()
                for y in h.adj[x]:
                    if y not in keepset:
                        continue
                    if y not in color:
                        color[y] = 3 - color[x]
                        counts[color[y] - 1] += 1
                        seen.add(y)
                        stack.append(y)
                    elif color[y] == color[x]:
                        return False
            achievable = (achievable << counts[0]) | (achievable << counts[1])
        return bool((achievable >> (len(keep) // 2)) & 1)

    def grow(start: int) -> tuple[int, ...] | None:
        budget.tick()
        if len(chosen) == size:
            return tuple(chosen) if remainder_ok() else None
        for v in range(start, h.n - (size - len(chosen)) + 1):
            if any(v in h.adj[u] for u in chosen):
                continue
            chosen.append(v)
            hit = grow(v + 1)
            if hit:
                return hit
            chosen.pop()
        return None

    return grow(0)


@dataclass(frozen=True)
class DecisionInstance:
    """A corona whose equitable 4-colorability encodes an independence
    question, with the per-class counts any equitable 4-coloring must use."""

    layout: CoronaLayout
    center_name: str
    class_size_low: int
    class_size_high: int


def build_decision_instance(h: Graph, center: str = "k33") -> DecisionInstance:
    if center not in ("k33", "prism"):
        raise ValueError("decision instances use a K33 or prism center")
    if not is_cubic(h):
        raise ValueError("outer graph must be cubic")
    layout = corona(named_graph(center), h)
    big_n = layout.base.n
    return DecisionInstance(layout, center, big_n // 4, ceil(big_n / 4))


_COPY_RULES = {1: (2, 3, 4), 2: (1, 3, 4), 3: (1, 2, 4), 4: (2, 1, 3)}


def color_from_type(layout: CoronaLayout, typed: Coloring) -> Coloring:
    """Lift an unbalanced (4m/10, 3m/10, 3m/10) coloring of the outer graph
    to an equitable 4-coloring of the K33 corona.

    The center takes color sequence (2,2,1,1): one side (1,1,3), the other
    (2,2,4).  Each copy then colors the typed partitions by a fixed rule per
    center color, always avoiding it.
    """
    center = center_subgraph(layout)
    sides = bipartition(center)
    if (center.n != 6 or sides is None or len(sides[0]) != 3
            or center.num_edges != 9):
        raise ValueError("layout center is not K33")
    m = len(layout.copy_vertices[0])
    if m % 10 != 0 or typed.k != 3 or len(typed.assignment) != m:
        raise ValueError("typed coloring does not fit the outer copies")
    expected = (4 * m // 10, 3 * m // 10, 3 * m // 10)
    if typed.class_sizes() != expected:
        raise ValueError(
            f"coloring of type {typed.class_sizes()} given, {expected} required")

    assignment = [0] * layout.base.n
    for pos, i in enumerate(sorted(sides[0])):
        assignment[layout.center_vertices[i]] = 1 if pos < 2 else 3
    for pos, i in enumerate(sorted(sides[1])):
        assignment[layout.center_vertices[i]] = 2 if pos < 2 else 4
    parts = (typed.class_of(1), typed.class_of(2), typed.class_of(3))
    for i in range(center.n):
        rule = _COPY_RULES[assignment[layout.center_vertices[i]]]
        for part, color in zip(parts, rule):
            for j in part:
                assignment[layout.copy_vertices[i][j]] = color
    return Coloring(4, tuple(assignment))
