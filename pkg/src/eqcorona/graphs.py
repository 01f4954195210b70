"""Immutable graphs, corona products, and the cubic-graph corpus.

Vertices are always 0..n-1.  All values are frozen after construction, so
graphs and layouts can be shared freely across threads and search workers.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GraphInputError


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph as a tuple of per-vertex neighbor sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(n, tuple(frozenset(s) for s in nbrs))

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adj)


@dataclass(frozen=True)
class CoronaLayout:
    """A corona together with its block structure.

    ``base`` is the corona graph itself; ``center_vertices`` is the image of
    the center graph's vertex set, and ``copy_vertices[i]`` lists the vertices
    of the i-th outer copy.  Centers occupy indices 0..n-1 and copy i occupies
    n+i*m .. n+(i+1)*m-1, so layouts are reproducible byte for byte.
    """

    base: Graph
    center_vertices: tuple[int, ...]
    copy_vertices: tuple[tuple[int, ...], ...]


def corona(g: Graph, h: Graph) -> CoronaLayout:
    """Corona product: one copy of ``g``, |V(g)| copies of ``h``, vertex i of
    ``g`` joined to every vertex of copy i."""
    if g.n == 0 or h.n == 0:
        raise ValueError("corona requires nonempty center and outer graphs")
    n, m = g.n, h.n
    edges: list[tuple[int, int]] = list(g.edges())
    for i in range(n):
        off = n + i * m
        edges.extend((off + a, off + b) for a, b in h.edges())
        edges.extend((i, off + j) for j in range(m))
    base = Graph.from_edges(n * (m + 1), edges)
    centers = tuple(range(n))
    copies = tuple(tuple(range(n + i * m, n + (i + 1) * m)) for i in range(n))
    return CoronaLayout(base, centers, copies)


def disjoint_union(graphs: list[Graph]) -> Graph:
    """Disjoint union with deterministic block offsets (input order)."""
    if not graphs:
        raise ValueError("disjoint_union requires at least one graph")
    total = sum(g.n for g in graphs)
    edges: list[tuple[int, int]] = []
    off = 0
    for g in graphs:
        edges.extend((off + u, off + v) for u, v in g.edges())
        off += g.n
    return Graph.from_edges(total, edges)


def complete_graph(m: int) -> Graph:
    return Graph.from_edges(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle_graph(length: int) -> Graph:
    if length < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(length, [(i, (i + 1) % length) for i in range(length)])


def _prism() -> Graph:
    # two triangles joined by a perfect matching
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5),
                                (0, 3), (1, 4), (2, 5)])


def _wagner() -> Graph:
    # C8 plus the four main diagonals
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
    return Graph.from_edges(8, edges)


def _petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def _cube() -> Graph:
    edges = []
    for x in range(8):
        for bit in (1, 2, 4):
            y = x ^ bit
            if x < y:
                edges.append((x, y))
    return Graph.from_edges(8, edges)


def _pentagonal_prism() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


_CATALOG = {
    "k1": lambda: Graph.from_edges(1, []),
    "k2": lambda: Graph.from_edges(2, [(0, 1)]),
    "k4": lambda: complete_graph(4),
    "k33": lambda: complete_bipartite(3, 3),
    "prism": _prism,
    "wagner": _wagner,
    "petersen": _petersen,
    "cube": _cube,
    "pentagonalprism": _pentagonal_prism,
}


def available_names() -> tuple[str, ...]:
    return tuple(sorted(_CATALOG)) + ("k<m>", "c<l>", "tower<t>")


def named_graph(name: str) -> Graph:
    """Look up a catalog graph.  Besides the fixed names, ``k<m>`` builds a
    complete graph, ``c<l>`` a cycle, and ``tower<t>`` a triangle ring."""
    key = name.strip().lower().replace("_", "").replace("-", "").replace(",", "")
    if key in _CATALOG:
        return _CATALOG[key]()
    m = re.fullmatch(r"k(\d+)", key)
    if m:
        return complete_graph(int(m.group(1)))
    m = re.fullmatch(r"c(\d+)", key)
    if m:
        return cycle_graph(int(m.group(1)))
    m = re.fullmatch(r"tower(\d+)", key)
    if m:
        return triangle_tower(int(m.group(1)))
    raise GraphInputError(f"unknown graph name {name!r}; known: {', '.join(available_names())}")


def triangle_tower(t: int) -> Graph:
    """Cubic graph on 3t vertices built from t vertex-disjoint triangles
    arranged in a ring (t even, t >= 2).

    Triangle i is {3i, 3i+1, 3i+2}.  Between consecutive triangles the
    ring alternates matchings of size 1 and 2 so that every vertex gains
    exactly one external edge.  Coloring vertex 3i+j with color j+1 is
    proper, so the graph is 3-chromatic, and every proper 3-coloring uses
    each color exactly once per triangle.  For t=2 this is the prism.
    """
    if t < 2 or t % 2 != 0:
        raise ValueError(f"triangle tower needs an even t >= 2, got {t}")
    edges = []
    for i in range(t):
        base = 3 * i
        edges += [(base, base + 1), (base, base + 2), (base + 1, base + 2)]
    for i in range(t):
        nxt = 3 * ((i + 1) % t)
        if i % 2 == 0:
            edges.append((3 * i + 2, nxt))
        else:
            edges.append((3 * i + 1, nxt))
            edges.append((3 * i + 2, nxt + 1))
    return Graph.from_edges(3 * t, edges)


def random_cubic(n: int, seed: int) -> Graph:
    """Random 3-regular simple graph via the pairing model.

    Shuffles 3n stubs and pairs them off, resampling whenever the pairing
    produces a loop or a repeated edge.  Deterministic for a fixed seed.
    Connectivity is not guaranteed; see :func:`random_connected_cubic`.
    """
    if n < 4 or n % 2 != 0:
        raise ValueError(f"cubic graphs need an even n >= 4, got {n}")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(3)]
    while True:
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph.from_edges(n, sorted(edges))


def random_connected_cubic(n: int, seed: int) -> Graph:
    """First connected graph in the seeded stream seed, seed+10007, ..."""
    attempt = seed
    while True:
        g = random_cubic(n, attempt)
        if is_connected(g):
            return g
        attempt += 10007


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


def connected_components(g: Graph, vertices: Iterable[int] | None = None) -> list[list[int]]:
    """Components restricted to ``vertices`` (all of V by default), each sorted."""
    pool = set(range(g.n)) if vertices is None else set(vertices)
    comps = []
    while pool:
        start = min(pool)
        comp = {start}
        stack = [start]
        pool.discard(start)
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if v in pool:
                    pool.discard(v)
                    comp.add(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def center_subgraph(layout: CoronaLayout) -> Graph:
    """The center block of a corona as a standalone graph (copies attach only
    to their own center, so the centers' mutual edges are the center graph)."""
    centers = layout.center_vertices
    index = {v: i for i, v in enumerate(centers)}
    edges = []
    for i, v in enumerate(centers):
        for u in layout.base.adj[v]:
            j = index.get(u)
            if j is not None and i < j:
                edges.append((i, j))
    return Graph.from_edges(len(centers), edges)


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """Two-color by traversal; None if an odd cycle exists.  Side 0 holds the
    least vertex of each component, so the split is deterministic."""
    color = [0] * g.n
    for start in range(g.n):
        if color[start]:
            continue
        color[start] = 1
        queue = [start]
        while queue:
            u = queue.pop()
            for v in g.adj[u]:
                if color[v] == 0:
                    color[v] = 3 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return ([v for v in range(g.n) if color[v] == 1],
            [v for v in range(g.n) if color[v] == 2])
