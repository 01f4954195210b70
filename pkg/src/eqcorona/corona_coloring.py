"""Constructive equitable colorings of coronas of cubic graphs.

Each rule realizes one case of the classification: 3 colors when the center
has a balanced 3-coloring and the outer graph is bipartite, 4 colors for the
remaining bipartite-outer cases, exactly m+1 for complete outer graphs, and a
4-coloring plus a deficit-driven recoloring into a fifth color when both
factors are 3-chromatic.  The dispatcher picks the applicable rule and labels
the result exact or as a two-value range; ranges are never resolved here
(see :func:`resolve_exact` for the budgeted oracle route).

All rules run in time linear in the corona size apart from the desk-scale
exact searches on the small center graph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import ceil

from .classify import CubicClass, classify, is_cubic
from .coloring import Coloring
from .errors import RecolorInfeasibleError, RuleNotApplicable
from .graphs import CoronaLayout, Graph, corona
from .oracles import (DEFAULT_NODE_BUDGET, corona_equitable4,
                      equitable_k_colorable, k_colorable)


@dataclass(frozen=True)
class ColoringReport:
    """Output of one corona coloring run.

    ``claimed_range`` is (lo, hi) with hi - lo <= 1; when ``exactness`` is
    "ambiguous_pair" the construction used hi colors but lo may suffice.
    """

    coloring: Coloring
    colors_used: int
    exactness: str  # "exact" | "ambiguous_pair"
    claimed_range: tuple[int, int]
    rule_fired: str
    recolor_plan: "RecolorPlan | None" = field(default=None, compare=False)


@dataclass(frozen=True)
class RecolorPlan:
    """Bookkeeping for the 4-to-5 recoloring step.

    targets: per-color cardinality goals (five entries, near-equal split);
    deficits: surplus of each of the four original colors over its goal;
    selections: (copy index, partition tag, count) triples, all vertices of a
    selection drawn from a single partition of a single copy.
    """

    targets: tuple[int, ...]
    deficits: tuple[int, ...]
    selections: tuple[tuple[int, str, int], ...]


def _wrap4(x: int) -> int:
    # color arithmetic mod 4 on labels 1..4 (4 stands in for 0)
    return ((x - 1) % 4) + 1


def _equitable_targets5(big_n: int) -> tuple[int, ...]:
    # near-equal split of big_n into 5 goals, largest first by color index
    return tuple(ceil((big_n - i) / 5) for i in range(5))


def _target_patterns(big_n: int, k: int):
    lo = big_n // k
    r = big_n % k
    if r == 0:
        yield (lo,) * k
        return
    for positions in combinations(range(k), r):
        yield tuple(lo + 1 if i in positions else lo for i in range(k))


def _copy_vertex(layout: CoronaLayout, copy_index: int, h_vertex: int) -> int:
    return layout.copy_vertices[copy_index][h_vertex]


def _paint_copy_part(assignment: list[int], layout: CoronaLayout,
                     copy_index: int, part: list[int], color: int) -> None:
    for j in part:
        assignment[_copy_vertex(layout, copy_index, j)] = color


def _paint_cyclic(assignment: list[int], layout: CoronaLayout, copy_index: int,
                  center_color: int, parts: tuple[list[int], list[int], list[int]]) -> None:
    for shift, part in enumerate(parts, start=1):
        _paint_copy_part(assignment, layout, copy_index, part,
                         _wrap4(center_color + shift))


# ---------------------------------------------------------------------------
# Copy scheduler: pick two of three allowed colors per copy to hit deficits
# ---------------------------------------------------------------------------

def _schedule_pairs(copies: list[tuple[int, tuple[int, int, int]]],
                    deficits: list[int]) -> dict[int, tuple[int, int]]:
    """Assign each copy an ordered pair of its three allowed colors so each
    color c is picked exactly deficits[c-1] times (each pick is worth one
    whole partition side).

    Greedy branching (largest remaining deficits first) with memoized dead
    states; exhaustive, so failure means the deficits are genuinely
    unschedulable.
    """
    order = sorted(copies)
    if sum(deficits) != 2 * len(order):
        raise RecolorInfeasibleError(
            f"deficits {deficits} cannot be met by {len(order)} copies")
    dead: set[tuple[int, tuple[int, ...]]] = set()
    choice: dict[int, tuple[int, int]] = {}
    dvec = list(deficits)

    def rec(i: int) -> bool:
        if i == len(order):
            return all(x == 0 for x in dvec)
        key = (i, tuple(dvec))
        if key in dead:
            return False
        idx, allowed = order[i]
        pairs = sorted(
            ((a, b) for pos, a in enumerate(allowed) for b in allowed[pos + 1:]),
            key=lambda p: (-(dvec[p[0] - 1] + dvec[p[1] - 1]), p))
        for a, b in pairs:
            if dvec[a - 1] > 0 and dvec[b - 1] > 0:
                dvec[a - 1] -= 1
                dvec[b - 1] -= 1
                if rec(i + 1):
                    choice[idx] = (a, b)
                    return True
                dvec[a - 1] += 1
                dvec[b - 1] += 1
        dead.add(key)
        return False

    if not rec(0):
        raise RecolorInfeasibleError(f"no copy schedule meets deficits {deficits}")
    return choice


# ---------------------------------------------------------------------------
# Recoloring drains
# ---------------------------------------------------------------------------

def _drain(assignment: list[int], layout: CoronaLayout, copy_indices: list[int],
           part: list[int], tag: str, from_color: int, amount: int,
           selections: list[tuple[int, str, int]]) -> list[int]:
    """Recolor ``amount`` vertices of ``from_color`` to color 5, taking the
    given partition of successive copies.  Returns the copies touched."""
    remaining = amount
    used = []
    for ci in copy_indices:
        if remaining == 0:
            break
        verts = [_copy_vertex(layout, ci, j) for j in part]
        take = min(len(verts), remaining)
        for x in verts[:take]:
            if assignment[x] != from_color:
                raise RecolorInfeasibleError(
                    f"drain expected color {from_color} at vertex {x}")
            assignment[x] = 5
        selections.append((ci, tag, take))
        used.append(ci)
        remaining -= take
    if remaining:
        raise RecolorInfeasibleError(
            f"color {from_color}: {remaining} recolorings left with no eligible pool")
    return used


# ---------------------------------------------------------------------------
# Rules
# ---------------------------------------------------------------------------

def color3(g: Graph, class_g: CubicClass, h: Graph, class_h: CubicClass,
           layout: CoronaLayout) -> ColoringReport:
    """Three colors: balanced 3-coloring on the centers, and each copy's two
    bipartition sides take the two colors its center does not use."""
    if class_h.kind != "Q2":
        raise RuleNotApplicable("outer graph is not bipartite")
    if not class_g.strong3:
        raise RuleNotApplicable("center graph has no balanced 3-coloring")
    strong = class_g.strong3_witness
    assert strong is not None
    side_u = class_h.witness.class_of(1)
    side_v = class_h.witness.class_of(2)
    assignment = [0] * layout.base.n
    for i, cv in enumerate(layout.center_vertices):
        assignment[cv] = strong.assignment[i]
    for i in range(g.n):
        a, b = sorted({1, 2, 3} - {strong.assignment[i]})
        _paint_copy_part(assignment, layout, i, side_u, a)
        _paint_copy_part(assignment, layout, i, side_v, b)
    return ColoringReport(Coloring(3, tuple(assignment)), 3, "exact", (3, 3),
                          "three_color_strong_center")


def color4_outerQ2(g: Graph, class_g: CubicClass, h: Graph, class_h: CubicClass,
                   layout: CoronaLayout,
                   node_budget: int = DEFAULT_NODE_BUDGET) -> ColoringReport:
    """Four colors with a bipartite outer graph, when three do not suffice.

    For a 3-chromatic center the centers keep their equitable 3-coloring;
    one designated copy per center color mixes in color 4 just enough to make
    every residual deficit a multiple of the side size t, and the remaining
    copies are two-colored by the pair scheduler.  For bipartite or K4
    centers the centers get an equitable 4-coloring (exact search) and the
    scheduler handles all copies.
    """
    if class_h.kind != "Q2":
        raise RuleNotApplicable("outer graph is not bipartite")
    if class_g.strong3:
        raise RuleNotApplicable("three colors suffice here")
    t = class_h.sizes[0]
    side_u = class_h.witness.class_of(1)
    side_v = class_h.witness.class_of(2)
    n, big_n = g.n, layout.base.n
    assignment = [0] * big_n

    if class_g.kind == "Q3":
        center = class_g.witness
        n1, n2, n3 = center.class_sizes()
        for i, cv in enumerate(layout.center_vertices):
            assignment[cv] = center.assignment[i]
        designated = {c: min(center.class_of(c)) for c in (1, 2, 3)}
        for targets in _target_patterns(big_n, 4):
            xa = (n2 - targets[1]) % t
            xb = (n3 - targets[2]) % t
            xc = (n1 - targets[0]) % t
            used = [n1 + t + (t - xc),
                    n2 + (t - xa) + t,
                    n3 + t + (t - xb),
                    xa + xb + xc]
            deficits = [targets[i] - used[i] for i in range(4)]
            if all(d >= 0 and d % t == 0 for d in deficits):
                break
        else:
            raise RecolorInfeasibleError("no target pattern fits the designated copies")

        def fill(copy_index: int, u_color: int, v_main: int, v_extra: int, extra: int) -> None:
            _paint_copy_part(assignment, layout, copy_index, side_u, u_color)
            for pos, j in enumerate(side_v):
                color = v_extra if pos >= t - extra else v_main
                assignment[_copy_vertex(layout, copy_index, j)] = color

        fill(designated[1], 3, 2, 4, xa)
        fill(designated[2], 1, 3, 4, xb)
        fill(designated[3], 2, 1, 4, xc)
        scheduled = [i for i in range(n) if i not in designated.values()]
        rule = f"four_color_outer_bipartite:q3_center:{'n4k' if n % 4 == 0 else 'n4k2'}"
    else:
        res = equitable_k_colorable(g, 4, node_budget)
        if not res.feasible:
            raise AssertionError("cubic graphs are always equitably 4-colorable")
        center = res.witness
        for i, cv in enumerate(layout.center_vertices):
            assignment[cv] = center.assignment[i]
        counts = center.class_sizes()
        for targets in _target_patterns(big_n, 4):
            deficits = [targets[i] - counts[i] for i in range(4)]
            if all(d >= 0 and d % t == 0 for d in deficits):
                break
        else:
            raise RecolorInfeasibleError("no target pattern fits the center coloring")
        scheduled = list(range(n))
        rule = f"four_color_outer_bipartite:{class_g.kind.lower()}_center"

    copies = []
    for i in scheduled:
        center_color = assignment[layout.center_vertices[i]]
        allowed = tuple(c for c in (1, 2, 3, 4) if c != center_color)
        copies.append((i, allowed))
    schedule = _schedule_pairs(copies, [d // t for d in deficits])
    for i, (a, b) in schedule.items():
        _paint_copy_part(assignment, layout, i, side_u, a)
        _paint_copy_part(assignment, layout, i, side_v, b)
    return ColoringReport(Coloring(4, tuple(assignment)), 4, "exact", (4, 4), rule)


def color45_centerQ2(g: Graph, class_g: CubicClass, h: Graph, class_h: CubicClass,
                     layout: CoronaLayout) -> ColoringReport:
    """Bipartite center, 3-chromatic outer graph: 4 colors when the side size
    is even, otherwise 4 colors plus a recoloring into color 5.

    Copies follow the cyclic rule: the copy at an i-vertex colors its
    partitions U, V, W with i+1, i+2, i+3 (mod 4, color 4 for 0).
    """
    if class_g.kind != "Q2":
        raise RuleNotApplicable("center graph is not bipartite")
    if class_h.kind != "Q3":
        raise RuleNotApplicable("outer graph is not 3-chromatic")
    s = class_g.sizes[0]
    side_x = class_g.witness.class_of(1)
    side_y = class_g.witness.class_of(2)
    u, v, w = class_h.sizes
    parts = (class_h.witness.class_of(1), class_h.witness.class_of(2),
             class_h.witness.class_of(3))
    n, big_n = g.n, layout.base.n
    k = s // 2
    assignment = [0] * big_n

    # the two sides take disjoint color pairs, so the center coloring is
    # proper for every bipartite g; the first k vertices of a side get the
    # low color, the rest the high one
    if s % 2 == 0:
        x_colors, y_colors = (1, 2), (3, 4)
    else:
        x_colors, y_colors = (1, 3), (2, 4)
    for pos, cv in enumerate(sorted(side_x)):
        assignment[layout.center_vertices[cv]] = x_colors[0] if pos < k else x_colors[1]
    for pos, cv in enumerate(sorted(side_y)):
        assignment[layout.center_vertices[cv]] = y_colors[0] if pos < k else y_colors[1]

    for i in range(n):
        _paint_cyclic(assignment, layout, i, assignment[layout.center_vertices[i]], parts)

    if s % 2 == 0:
        coloring = Coloring(4, tuple(assignment))
        sizes = coloring.class_sizes()
        if len(set(sizes)) != 1:
            raise RecolorInfeasibleError(f"even-side coloring not balanced: {sizes}")
        return ColoringReport(coloring, 4, "exact", (4, 4), "center_bipartite:even")

    counts = Coloring(4, tuple(assignment)).class_sizes()
    gammas = _equitable_targets5(big_n)
    deficits = tuple(counts[i] - gammas[i] for i in range(4))
    if any(d < 0 for d in deficits):
        raise RecolorInfeasibleError(f"negative recolor deficit: {deficits}")

    by_center_color = {c: [i for i in range(n)
                           if assignment[layout.center_vertices[i]] == c]
                       for c in (1, 2, 3, 4)}
    selections: list[tuple[int, str, int]] = []
    # color i sits on partition U of the copies whose center carries i-1
    used4 = _drain(assignment, layout, by_center_color[3], parts[0], "U", 4,
                   deficits[3], selections)
    _drain(assignment, layout, by_center_color[4], parts[0], "U", 1,
           deficits[0], selections)
    overflow = max(0, deficits[1] - k * u)
    _drain(assignment, layout, by_center_color[1], parts[0], "U", 2,
           deficits[1] - overflow, selections)
    if overflow:
        if overflow > w:
            raise RecolorInfeasibleError(f"color-2 overflow {overflow} exceeds |W|={w}")
        fallback = [i for i in by_center_color[3] if i not in used4]
        if not fallback:
            raise RecolorInfeasibleError("no untouched copy left for the color-2 overflow")
        _drain(assignment, layout, fallback[-1:], parts[2], "W", 2, overflow, selections)
    _drain(assignment, layout, by_center_color[2], parts[0], "U", 3,
           deficits[2], selections)

    plan = RecolorPlan(gammas, deficits, tuple(selections))
    return ColoringReport(Coloring(5, tuple(assignment)), 5, "ambiguous_pair",
                          (4, 5), "center_bipartite:odd_recolor", plan)


def color45_bothQ3(g: Graph, class_g: CubicClass, h: Graph, class_h: CubicClass,
                   layout: CoronaLayout) -> ColoringReport:
    """Both factors 3-chromatic: color centers 1/2/3 by their tripartition,
    copies by the cyclic rule, then recolor each color's surplus into color 5
    from partitions chosen so no copy donates from two partitions."""
    if class_g.kind != "Q3" or class_h.kind != "Q3":
        raise RuleNotApplicable("both factors must be 3-chromatic")
    parts_h = (class_h.witness.class_of(1), class_h.witness.class_of(2),
               class_h.witness.class_of(3))
    center = class_g.witness
    n, big_n = g.n, layout.base.n
    assignment = [0] * big_n
    for i, cv in enumerate(layout.center_vertices):
        assignment[cv] = center.assignment[i]
    for i in range(n):
        _paint_cyclic(assignment, layout, i, center.assignment[i], parts_h)

    counts = Coloring(5, tuple(assignment)).class_sizes()[:4]
    gammas = _equitable_targets5(big_n)
    deficits = tuple(counts[i] - gammas[i] for i in range(4))
    if any(d < 0 for d in deficits):
        raise RecolorInfeasibleError(f"negative recolor deficit: {deficits}")

    copies_a = center.class_of(1)
    copies_b = center.class_of(2)
    copies_c = center.class_of(3)
    selections: list[tuple[int, str, int]] = []
    used_c = _drain(assignment, layout, copies_c, parts_h[1], "V", 1,
                    deficits[0], selections)
    used_a = _drain(assignment, layout, copies_a, parts_h[0], "U", 2,
                    deficits[1], selections)
    used_b = _drain(assignment, layout, copies_b, parts_h[0], "U", 3,
                    deficits[2], selections)
    # color 4 pools, each avoiding copies already donating another partition
    remaining = deficits[3]
    pools = ((copies_a, used_a, parts_h[2], "W"),
             (copies_b, used_b, parts_h[1], "V"),
             (copies_c, used_c, parts_h[0], "U"))
    for all_copies, used, part, tag in pools:
        if remaining == 0:
            break
        free = [i for i in all_copies if i not in used]
        cap = min(remaining, len(free) * len(part))
        _drain(assignment, layout, free, part, tag, 4, cap, selections)
        remaining -= cap
    if remaining:
        raise RecolorInfeasibleError(
            f"color 4: {remaining} recolorings left after all pools")

    plan = RecolorPlan(gammas, deficits, tuple(selections))
    return ColoringReport(Coloring(5, tuple(assignment)), 5, "ambiguous_pair",
                          (4, 5), "both_three_chromatic_recolor", plan)


def color_outer_complete(g: Graph, m: int, layout: CoronaLayout,
                         node_budget: int = DEFAULT_NODE_BUDGET) -> ColoringReport:
    """Corona with complete outer graphs: m+1 colors, every class of size n.

    Centers get any proper (m+1)-coloring; each copy takes the m colors its
    center does not use, one per vertex.
    """
    for verts in layout.copy_vertices:
        inner = sum(1 for a in verts for b in verts
                    if a < b and b in layout.base.adj[a])
        if inner != m * (m - 1) // 2 or len(verts) != m:
            raise ValueError("outer copies are not complete graphs on m vertices")
    center = k_colorable(g, m + 1, node_budget)
    if center is None:
        raise ValueError(f"center graph needs more than {m + 1} colors")
    big_n = layout.base.n
    assignment = [0] * big_n
    for i, cv in enumerate(layout.center_vertices):
        assignment[cv] = center.assignment[i]
    for i in range(g.n):
        others = [c for c in range(1, m + 2) if c != center.assignment[i]]
        for j, vertex in enumerate(layout.copy_vertices[i]):
            assignment[vertex] = others[j]
    return ColoringReport(Coloring(m + 1, tuple(assignment)), m + 1, "exact",
                          (m + 1, m + 1), "outer_complete")


def color4_centerK4_outerQ3(g: Graph, h: Graph, class_h: CubicClass,
                            layout: CoronaLayout) -> ColoringReport:
    """K4 center with a 3-chromatic outer graph: rainbow centers plus the
    cyclic copy rule give all classes exactly m+1."""
    if g.n != 4 or not is_cubic(g):
        raise RuleNotApplicable("center graph is not K4")
    if class_h.kind != "Q3":
        raise RuleNotApplicable("outer graph is not 3-chromatic")
    parts = (class_h.witness.class_of(1), class_h.witness.class_of(2),
             class_h.witness.class_of(3))
    assignment = [0] * layout.base.n
    for i, cv in enumerate(layout.center_vertices):
        assignment[cv] = i + 1
    for i in range(4):
        _paint_cyclic(assignment, layout, i, i + 1, parts)
    return ColoringReport(Coloring(4, tuple(assignment)), 4, "exact", (4, 4),
                          "center_k4_outer_three_chromatic")


# ---------------------------------------------------------------------------
# Dispatcher
# ---------------------------------------------------------------------------

def equitable_color_corona(g: Graph, h: Graph, *,
                           node_budget: int = DEFAULT_NODE_BUDGET,
                           class_g: CubicClass | None = None,
                           class_h: CubicClass | None = None,
                           layout: CoronaLayout | None = None) -> ColoringReport:
    """Color the corona of two connected cubic graphs equitably with the
    number of colors its class pair dictates; at most one color above the
    optimum, and one above only in the two range-valued cells."""
    if not (is_cubic(g) and is_cubic(h)):
        raise ValueError("both factors must be cubic")
    class_g = class_g if class_g is not None else classify(g, node_budget)
    class_h = class_h if class_h is not None else classify(h, node_budget)
    layout = layout if layout is not None else corona(g, h)

    if class_h.kind == "Q4":
        return color_outer_complete(g, 4, layout, node_budget)
    if class_h.kind == "Q2":
        try:
            return color3(g, class_g, h, class_h, layout)
        except RuleNotApplicable:
            return color4_outerQ2(g, class_g, h, class_h, layout, node_budget)
    if class_g.kind == "Q4":
        return color4_centerK4_outerQ3(g, h, class_h, layout)
    if class_g.kind == "Q2":
        return color45_centerQ2(g, class_g, h, class_h, layout)
    return color45_bothQ3(g, class_g, h, class_h, layout)


def resolve_exact(g: Graph, h: Graph, report: ColoringReport | None = None,
                  node_budget: int = DEFAULT_NODE_BUDGET) -> ColoringReport:
    """Settle an ambiguous report with the structured 4-color oracle.

    Separate from the dispatcher on purpose: deciding the range-valued cells
    exactly is a budgeted search, not part of the linear construction.
    """
    if report is None:
        report = equitable_color_corona(g, h, node_budget=node_budget)
    if report.exactness == "exact":
        return report
    layout = corona(g, h)
    res = corona_equitable4(layout, h, node_budget)
    if res.feasible:
        return ColoringReport(res.witness, 4, "exact", (4, 4),
                              report.rule_fired + ":resolved_4")
    return ColoringReport(report.coloring, 5, "exact", (5, 5),
                          report.rule_fired + ":resolved_5", report.recolor_plan)
