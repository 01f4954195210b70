"""Shared corpus fixtures and tiny brute-force oracles.

The brute-force helpers enumerate naively over all assignments or subsets,
so they are independent of every solver in the package and serve as ground
truth for small instances.
"""
from itertools import combinations, product

import pytest

import eqcorona as eq

CORPUS_NAMES = ("k4", "k33", "prism", "cube", "wagner", "petersen", "pentagonalprism")
SMALL_CORPUS = ("k4", "k33", "prism", "cube", "wagner")


@pytest.fixture(scope="session")
def corpus():
    graphs = {name: eq.named_graph(name) for name in CORPUS_NAMES}
    graphs["tower4"] = eq.triangle_tower(4)
    return graphs


def brute_proper_colorings(g, k):
    """Yield every proper k-coloring assignment (exponential; tiny n only)."""
    edges = list(g.edges())
    for assignment in product(range(1, k + 1), repeat=g.n):
        if all(assignment[u] != assignment[v] for u, v in edges):
            yield assignment


def brute_equitable_feasible(g, k):
    lo, hi = g.n // k, -(-g.n // k)
    for assignment in brute_proper_colorings(g, k):
        counts = [0] * k
        for c in assignment:
            counts[c - 1] += 1
        if all(lo <= x <= hi for x in counts):
            return True
    return False


def brute_alpha(g):
    best = 0
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            chosen = set(subset)
            if all(v not in g.adj[u] for u in chosen for v in chosen):
                return size
    return best


def brute_chromatic(g):
    for k in range(1, g.n + 1):
        if next(iter(brute_proper_colorings(g, k)), None) is not None:
            return k
    raise AssertionError("unreachable")


def isomorphic(g1, g2):
    """Brute-force isomorphism test for very small graphs."""
    from itertools import permutations

    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    e2 = {(min(u, v), max(u, v)) for u, v in g2.edges()}
    for perm in permutations(range(g1.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in e2
               for u, v in g1.edges()):
            return True
    return False
