"""Coloring values and the independent proper/equitable verifier."""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph

# Class sizes listed in color order 1..k.
ColorSequence = tuple[int, ...]


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors 1..k to vertices 0..n-1."""

    k: int
    assignment: tuple[int, ...]

    def class_sizes(self) -> ColorSequence:
        counts = [0] * self.k
        for c in self.assignment:
            counts[c - 1] += 1
        return tuple(counts)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c - 1].append(v)
        return out

    def class_of(self, color: int) -> list[int]:
        return [v for v, c in enumerate(self.assignment) if c == color]


@dataclass(frozen=True)
class VerifyResult:
    proper: bool
    equitable: bool
    sequence: ColorSequence


def verify(g: Graph, coloring: Coloring) -> VerifyResult:
    """Check properness (no monochromatic edge) and equitability (class size
    spread at most 1) directly against the graph.

    This is the single source of truth the constructions are judged by, so it
    stays independent of every solver and construction in the package.
    """
    if len(coloring.assignment) != g.n:
        raise ValueError(
            f"assignment covers {len(coloring.assignment)} vertices, graph has {g.n}")
    for c in coloring.assignment:
        if not 1 <= c <= coloring.k:
            raise ValueError(f"color {c} out of range 1..{coloring.k}")
    proper = all(coloring.assignment[u] != coloring.assignment[v] for u, v in g.edges())
    sequence = coloring.class_sizes()
    equitable = max(sequence) - min(sequence) <= 1
    return VerifyResult(proper, equitable, sequence)


def relabel_by_class_size(coloring: Coloring) -> Coloring:
    """Permute colors so class sizes are nonincreasing (ties keep the
    original color order)."""
    sizes = coloring.class_sizes()
    order = sorted(range(1, coloring.k + 1), key=lambda c: (-sizes[c - 1], c))
    remap = {old: new + 1 for new, old in enumerate(order)}
    return Coloring(coloring.k, tuple(remap[c] for c in coloring.assignment))
