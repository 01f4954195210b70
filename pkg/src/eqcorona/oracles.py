"""Exact search oracles: colorability, equitable colorability, chromatic
numbers, maximum independent sets, and a structured oracle for equitable
coloring of coronas.

All searches are budgeted by node counts and raise :class:`BudgetExceeded`
rather than ever returning a wrong answer.  Everything here is pure and
deterministic: same inputs, same witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import ceil

from .coloring import Coloring, verify
from .errors import BudgetExceeded
from .graphs import CoronaLayout, Graph, center_subgraph, connected_components

DEFAULT_NODE_BUDGET = 10**8


class Budget:
    """Mutable node counter shared along one oracle invocation."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = DEFAULT_NODE_BUDGET):
        if limit <= 0:
            raise ValueError("node budget must be positive")
        self.limit = limit
        self.used = 0

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(self.used)


@dataclass(frozen=True)
class OracleResult:
    feasible: bool
    witness: Coloring | None
    nodes_explored: int


@dataclass(frozen=True)
class IndependentSetResult:
    size: int
    witness: frozenset[int]


# ---------------------------------------------------------------------------
# DSATUR backtracking with per-color capacities
# ---------------------------------------------------------------------------

def _dsatur_search(g: Graph, caps: tuple[int, ...], lo: int | None,
                   budget: Budget) -> tuple[int, ...] | None:
    """Find a proper coloring with counts bounded by ``caps`` (per color) and,
    when ``lo`` is given, completable so every class reaches at least ``lo``.

    Branching: most constrained vertex first, where a color blocks a vertex
    if a neighbor holds it or its class is already full (ties: higher degree,
    then lower index); colors tried least-loaded first (ties: lower index),
    which steers capacity-constrained searches toward balanced witnesses.
    Among colors that are still unused, only the first of each capacity value
    is tried, which removes the permutation symmetry between interchangeable
    classes.
    """
    n, k = g.n, len(caps)
    if n == 0:
        return ()
    assignment = [0] * n
    counts = [0] * (k + 1)
    nbr_colors: list[set[int]] = [set() for _ in range(n)]
    adj = g.adj
    uncolored = [n]

    def select() -> int:
        closed = {c for c in range(1, k + 1) if counts[c] >= caps[c - 1]}
        best, best_key = -1, (-1, -1, 1)
        for v in range(n):
            if assignment[v] == 0:
                key = (len(nbr_colors[v] | closed), len(adj[v]), -v)
                if key > best_key:
                    best, best_key = v, key
        return best

    def lower_bound_ok(remaining: int) -> bool:
        if lo is None:
            return True
        need = 0
        for c in range(1, k + 1):
            if counts[c] < lo:
                need += lo - counts[c]
                if need > remaining:
                    return False
        return True

    def extend() -> bool:
        if uncolored[0] == 0:
            return True
        v = select()
        forbidden = nbr_colors[v]
        seen_fresh_caps = set()
        candidates = []
        for c in range(1, k + 1):
            if counts[c] >= caps[c - 1] or c in forbidden:
                continue
            if counts[c] == 0:
                cap = caps[c - 1]
                if cap in seen_fresh_caps:
                    continue
                seen_fresh_caps.add(cap)
            candidates.append(c)
        candidates.sort(key=lambda c: (counts[c], c))
        for c in candidates:
            budget.tick()
            assignment[v] = c
            counts[c] += 1
            uncolored[0] -= 1
            touched = []
            for u in adj[v]:
                if assignment[u] == 0 and c not in nbr_colors[u]:
                    nbr_colors[u].add(c)
                    touched.append(u)
            if lower_bound_ok(uncolored[0]) and extend():
                return True
            for u in touched:
                nbr_colors[u].discard(c)
            assignment[v] = 0
            counts[c] -= 1
            uncolored[0] += 1
        return False

    if extend():
        return tuple(assignment)
    return None


def k_colorable(g: Graph, k: int, node_budget: int = DEFAULT_NODE_BUDGET) -> Coloring | None:
    """Proper k-coloring with no size constraints, or None."""
    if k < 1:
        raise ValueError("k must be positive")
    budget = Budget(node_budget)
    result = _dsatur_search(g, (g.n,) * k if g.n else (1,) * k, None, budget)
    return Coloring(k, result) if result is not None else None


def equitable_k_colorable(g: Graph, k: int,
                          node_budget: int = DEFAULT_NODE_BUDGET) -> OracleResult:
    """Decide whether g admits a proper coloring into k classes whose sizes
    differ by at most one.  Class sizes are pinned to floor(n/k)/ceil(n/k)
    during the search, so any witness is equitable by construction."""
    if k < 1:
        raise ValueError("k must be positive")
    budget = Budget(node_budget)
    hi = ceil(g.n / k) if g.n else 0
    lo = g.n // k
    result = _dsatur_search(g, (max(hi, 1),) * k, lo, budget)
    witness = Coloring(k, result) if result is not None else None
    return OracleResult(result is not None, witness, budget.used)


def colorable_with_class_sizes(g: Graph, sizes: tuple[int, ...],
                               node_budget: int = DEFAULT_NODE_BUDGET) -> Coloring | None:
    """Proper coloring where color i is used exactly sizes[i-1] times, or None."""
    if sum(sizes) != g.n:
        raise ValueError(f"class sizes {sizes} do not sum to {g.n}")
    if any(s < 0 for s in sizes):
        raise ValueError("class sizes must be nonnegative")
    budget = Budget(node_budget)
    result = _dsatur_search(g, sizes, None, budget)
    return Coloring(len(sizes), result) if result is not None else None


# ---------------------------------------------------------------------------
# Chromatic numbers
# ---------------------------------------------------------------------------

def _greedy_clique(g: Graph) -> int:
    if g.n == 0:
        return 0
    start = max(range(g.n), key=lambda v: (len(g.adj[v]), -v))
    clique = {start}
    common = set(g.adj[start])
    while common:
        v = max(common, key=lambda x: (len(g.adj[x] & common), -x))
        clique.add(v)
        common &= g.adj[v]
    return len(clique)


def _greedy_coloring_bound(g: Graph) -> int:
    order = sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))
    colors: dict[int, int] = {}
    used = 0
    for v in order:
        taken = {colors[u] for u in g.adj[v] if u in colors}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
        used = max(used, c)
    return used


def chromatic_number(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Exact chromatic number by iterating k-colorability from a greedy clique
    lower bound up to a greedy coloring upper bound."""
    if g.n == 0:
        return 0
    if g.num_edges == 0:
        return 1
    lb = max(2, _greedy_clique(g))
    ub = _greedy_coloring_bound(g)
    for k in range(lb, ub):
        if k_colorable(g, k, node_budget) is not None:
            return k
    return ub


def equitable_chromatic_number(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Smallest k admitting an equitable proper k-coloring (k=n always works,
    so the scan terminates)."""
    if g.n == 0:
        return 0
    lb = 2 if g.num_edges else 1
    for k in range(lb, g.n + 1):
        if equitable_k_colorable(g, k, node_budget).feasible:
            return k
    return g.n


# ---------------------------------------------------------------------------
# Maximum independent set
# ---------------------------------------------------------------------------

def _cycle_alpha(g: Graph, comp: list[int]) -> list[int]:
    # comp is a single cycle; walk it from the least vertex and take
    # alternate vertices, dropping the last one on odd cycles
    start = comp[0]
    order = [start]
    prev, cur = -1, start
    compset = set(comp)
    while True:
        nxt = min(v for v in g.adj[cur] if v in compset and v != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    take = len(order) // 2
    return [order[2 * i] for i in range(take)]


def _greedy_matching(g: Graph, alive: set[int]) -> int:
    unmatched = set(alive)
    size = 0
    for v in sorted(alive):
        if v not in unmatched:
            continue
        partners = sorted(u for u in g.adj[v] if u in unmatched)
        if partners:
            unmatched.discard(v)
            unmatched.discard(partners[0])
            size += 1
    return size


def max_independent_set(g: Graph,
                        node_budget: int = DEFAULT_NODE_BUDGET) -> IndependentSetResult:
    """Exact maximum independent set by branch and bound.

    Reductions: vertices of degree <= 1 always join the set; once every
    degree is exactly 2 the leftover cycles are solved in closed form; the
    search splits across connected components (so the answer is additive over
    disjoint unions by construction).  Branching picks a maximum-degree
    vertex; the exclusion branch is pruned with the matching bound
    alpha <= |V| - matching.
    """
    budget = Budget(node_budget)
    adj = g.adj

    def solve(alive: set[int]) -> tuple[int, set[int]]:
        budget.tick()
        chosen: set[int] = set()
        alive = set(alive)
        while True:
            low = None
            for v in sorted(alive):
                if len(adj[v] & alive) <= 1:
                    low = v
                    break
            if low is None:
                break
            chosen.add(low)
            alive -= adj[low] | {low}
        if not alive:
            return len(chosen), chosen
        comps = connected_components(g, alive)
        if len(comps) > 1:
            total, wit = len(chosen), set(chosen)
            for comp in comps:
                s, w = solve(set(comp))
                total += s
                wit |= w
            return total, wit
        comp = comps[0]
        if all(len(adj[v] & alive) == 2 for v in comp):
            cyc = _cycle_alpha(g, comp)
            return len(chosen) + len(cyc), chosen | set(cyc)
        v = max(comp, key=lambda x: (len(adj[x] & alive), -x))
        s_in, w_in = solve(alive - adj[v] - {v})
        s_in += 1
        w_in = w_in | {v}
        rest = alive - {v}
        best_s, best_w = s_in, w_in
        if len(rest) - _greedy_matching(g, rest) > best_s:
            s_out, w_out = solve(rest)
            if s_out > best_s:
                best_s, best_w = s_out, w_out
        return len(chosen) + best_s, chosen | best_w

    size, witness = solve(set(range(g.n)))
    return IndependentSetResult(size, frozenset(witness))


# ---------------------------------------------------------------------------
# Structured corona oracle: DP over per-copy color count vectors
# ---------------------------------------------------------------------------

def _count_vectors(g: Graph, k: int, cap: int,
                   budget: Budget) -> dict[tuple[int, ...], tuple[int, ...]]:
    """All color-count vectors of proper k-colorings of g with every count
    bounded by ``cap``, up to color permutation, each with one witness.

    Enumeration breaks color symmetry by opening colors in ascending order,
    so the result maps canonical vectors only; callers expand permutations.
    """
    n = g.n
    out: dict[tuple[int, ...], tuple[int, ...]] = {}
    assignment = [0] * n
    counts = [0] * (k + 1)
    adj = g.adj

    def rec(v: int, used: int) -> None:
        budget.tick()
        if v == n:
            out.setdefault(tuple(counts[1:]), tuple(assignment))
            return
        forbidden = {assignment[u] for u in adj[v] if u < v}
        top = min(k, used + 1)
        for c in range(1, top + 1):
            if c in forbidden or counts[c] >= cap:
                continue
            assignment[v] = c
            counts[c] += 1
            rec(v + 1, max(used, c))
            assignment[v] = 0
            counts[c] -= 1

    rec(0, 0)
    return out


def _expand_permutations(vecs: dict[tuple[int, ...], tuple[int, ...]],
                         k: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    expanded: dict[tuple[int, ...], tuple[int, ...]] = {}
    for vec, assign in sorted(vecs.items()):
        for perm in permutations(range(k)):
            newvec = [0] * k
            for old in range(k):
                newvec[perm[old]] = vec[old]
            key = tuple(newvec)
            if key not in expanded:
                expanded[key] = tuple(perm[c - 1] + 1 for c in assign)
    return expanded


def corona_equitable_k(layout: CoronaLayout, h: Graph, k: int,
                       node_budget: int = DEFAULT_NODE_BUDGET) -> OracleResult:
    """Decide equitable k-colorability of a corona exactly.

    Every vertex of copy i is adjacent to center i, so a proper coloring of
    the corona is exactly: a proper k-coloring of the center graph plus, per
    copy, a proper coloring of ``h`` avoiding the center's color.  Feasibility
    therefore only depends on (a) the center coloring's color counts and (b)
    which count vectors over k-1 colors proper colorings of ``h`` can realize.
    Both sets are enumerated once; a DP over copies on the running count
    vector, bounded by the equitable targets, settles feasibility and yields
    a witness.
    """
    if k < 2:
        raise ValueError("corona oracle needs k >= 2")
    base = layout.base
    big_n = base.n
    lo, hi = big_n // k, ceil(big_n / k)
    budget = Budget(node_budget)

    g_center = center_subgraph(layout)
    center_raw = _count_vectors(g_center, k, hi, budget)
    canonical: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]] = {}
    for vec, assign in sorted(center_raw.items()):
        key = tuple(sorted(vec, reverse=True))
        canonical.setdefault(key, (vec, assign))

    copy_raw = _count_vectors(h, k - 1, hi, budget)
    copy_vecs = _expand_permutations(copy_raw, k - 1)
    copy_items = sorted(copy_vecs.items())
    if not copy_items:
        return OracleResult(False, None, budget.used)

    for _, (cvec, cassign) in sorted(canonical.items()):
        witness = _dp_over_copies(layout, h, k, cvec, cassign, copy_items,
                                  lo, hi, budget)
        if witness is not None:
            check = verify(base, witness)
            if not (check.proper and check.equitable):
                raise AssertionError("corona oracle produced an invalid witness")
            return OracleResult(True, witness, budget.used)
    return OracleResult(False, None, budget.used)


def _dp_over_copies(layout, h, k, cvec, cassign, copy_items, lo, hi, budget):
    n, m = len(layout.center_vertices), h.n
    start = tuple(cvec)
    if any(x > hi for x in start):
        return None
    layers: list[dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]] | None]] = []
    states: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]] | None] = {start: None}
    for i in range(n):
        center_color = cassign[i]
        allowed = [c for c in range(1, k + 1) if c != center_color]
        remaining = (n - 1 - i) * m
        new_states: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]] = {}
        for state in states:
            budget.tick(len(copy_items))
            for vec, _ in copy_items:
                ns = list(state)
                ok = True
                for pos, add in zip(allowed, vec):
                    val = ns[pos - 1] + add
                    if val > hi:
                        ok = False
                        break
                    ns[pos - 1] = val
                if not ok:
                    continue
                if any(x + remaining < lo for x in ns):
                    continue
                key = tuple(ns)
                if key not in new_states:
                    new_states[key] = (state, vec)
        if not new_states:
            return None
        layers.append(new_states)
        states = new_states
    finals = sorted(s for s in states if all(lo <= x <= hi for x in s))
    if not finals:
        return None

    # reconstruct copy choices, then assemble the full assignment
    assignment = [0] * layout.base.n
    for i, v in enumerate(layout.center_vertices):
        assignment[v] = cassign[i]
    rep = dict(copy_items)
    state = finals[0]
    chosen: list[tuple[int, ...]] = []
    for layer in reversed(layers):
        prev, vec = layer[state]
        chosen.append(vec)
        state = prev
    chosen.reverse()
    for i, vec in enumerate(chosen):
        center_color = cassign[i]
        allowed = [c for c in range(1, k + 1) if c != center_color]
        local = rep[vec]
        for j, vertex in enumerate(layout.copy_vertices[i]):
            assignment[vertex] = allowed[local[j] - 1]
    return Coloring(k, tuple(assignment))


def corona_equitable4(layout: CoronaLayout, h: Graph,
                      node_budget: int = DEFAULT_NODE_BUDGET) -> OracleResult:
    """Structured equitable 4-colorability oracle for coronas."""
    return corona_equitable_k(layout, h, 4, node_budget)


def corona_equitable_chromatic_number(layout: CoronaLayout, h: Graph,
                                      node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Exact equitable chromatic number of a corona of cubic graphs.

    Coronas of nonempty graphs contain triangles, and five colors always
    suffice for cubic pairs, so only k in {3,4,5} is scanned."""
    for k in (3, 4, 5):
        if corona_equitable_k(layout, h, k, node_budget).feasible:
            return k
    raise RuntimeError("no equitable coloring with at most 5 colors; "
                       "inputs are not a corona of cubic graphs")
