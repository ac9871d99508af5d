"""Colorings and the total dominator checks."""
from __future__ import annotations

from typing import Dict, Iterable, Optional, Sequence, Tuple

from .graph import Graph, VertexSet


class ColoringError(ValueError):
    pass


class IsolatedVertexError(ValueError):
    """TD-colorings and total domination are undefined with isolated vertices."""


class Coloring:
    """A total vertex coloring, normalized so the colors are exactly 1..λ.

    Normalization keeps the relative order of the input color ids, so an
    assignment that already uses 1..λ is stored unchanged.
    """

    __slots__ = ("assignment", "num_colors", "classes")

    def __init__(self, assignment: Sequence[int]):
        assignment = list(assignment)
        rank = {c: i + 1 for i, c in enumerate(sorted(set(assignment)))}
        self.assignment: Tuple[int, ...] = tuple(rank[c] for c in assignment)
        self.num_colors = len(rank)
        classes = [[] for _ in range(self.num_colors)]
        for v, c in enumerate(self.assignment):
            classes[c - 1].append(v)
        self.classes: Tuple[frozenset, ...] = tuple(frozenset(cl) for cl in classes)

    @classmethod
    def from_mapping(cls, n: int, mapping: Dict[int, int]) -> "Coloring":
        missing = [v for v in range(n) if v not in mapping]
        if missing or len(mapping) != n:
            raise ColoringError(f"mapping does not cover exactly 0..{n - 1}")
        return cls([mapping[v] for v in range(n)])

    # λ in the usual notation
    @property
    def lam(self) -> int:
        return self.num_colors

    @property
    def n(self) -> int:
        return len(self.assignment)

    def color(self, v: int) -> int:
        return self.assignment[v]

    def color_class(self, i: int) -> frozenset:
        return self.classes[i - 1]

    def class_masks(self) -> Tuple[int, ...]:
        return tuple(sum(1 << v for v in cl) for cl in self.classes)

    def __len__(self) -> int:
        return len(self.assignment)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.assignment == other.assignment

    def __hash__(self) -> int:
        return hash(self.assignment)

    def __repr__(self) -> str:
        return f"Coloring({list(self.assignment)})"


def _check_domain(g: Graph, c: Coloring) -> None:
    if c.n != g.n:
        raise ColoringError(f"coloring covers {c.n} vertices, graph has {g.n}")


def _require_isolated_free(g: Graph) -> None:
    for v in range(g.n):
        if not g.adjacency[v]:
            raise IsolatedVertexError(f"vertex {v} is isolated")


def is_proper(g: Graph, c: Coloring) -> bool:
    _check_domain(g, c)
    a = c.assignment
    return all(a[u] != a[v] for u, v in g.edges)


def dominated_class(g: Graph, c: Coloring, v: int) -> Optional[int]:
    """Smallest color i whose whole class lies in N(v), or None."""
    _check_domain(g, c)
    nv = g.adjacency[v]
    for i, cl in enumerate(c.classes, start=1):
        if cl <= nv:
            return i
    return None


def is_td_coloring(g: Graph, c: Coloring) -> bool:
    _check_domain(g, c)
    _require_isolated_free(g)
    if not is_proper(g, c):
        return False
    return all(dominated_class(g, c, v) is not None for v in range(g.n))


def is_total_dominating_set(g: Graph, s: "VertexSet | Iterable[int]") -> bool:
    members = s.members if isinstance(s, VertexSet) else frozenset(s)
    return all(g.adjacency[v] & members for v in range(g.n))
