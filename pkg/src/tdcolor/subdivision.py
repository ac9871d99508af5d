"""k-subdivision of a graph with superedge labelling."""
from __future__ import annotations

from typing import Dict, Tuple

from .graph import Graph, GraphError

Label = Tuple[Tuple[int, int], int]


class SubdivisionError(GraphError):
    pass


class SubdividedGraph:
    """``base`` with every edge replaced by a path of length ``k``.

    Base vertices keep their ids.  Internal vertices follow in sorted edge
    order, each superedge contributing ids for l = 1..k-1, where l is the
    distance from the smaller endpoint.
    """

    __slots__ = ("base", "k", "graph", "label_of", "original_of", "_internal")

    def __init__(self, base: Graph, k: int):
        if k < 1:
            raise SubdivisionError(f"k must be >= 1, got {k}")
        self.base = base
        self.k = k
        self.original_of: Dict[int, int] = {v: v for v in range(base.n)}
        self.label_of: Dict[int, Label] = {}
        self._internal: Dict[Label, int] = {}
        edges = []
        nxt = base.n
        for u, v in base.edges:
            prev = u
            for l in range(1, k):
                self.label_of[nxt] = ((u, v), l)
                self._internal[((u, v), l)] = nxt
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            edges.append((prev, v))
        self.graph = Graph(nxt, edges)

    def internal_vertex(self, vi: int, vj: int, l: int) -> int:
        """The vertex at distance ``l`` from ``vi`` on the superedge {vi, vj}."""
        if not self.base.has_edge(vi, vj):
            raise SubdivisionError(f"{{{vi}, {vj}}} is not an edge of the base graph")
        if not 1 <= l <= self.k - 1:
            raise SubdivisionError(f"l must be in 1..{self.k - 1}, got {l}")
        if vi < vj:
            return self._internal[((vi, vj), l)]
        return self._internal[((vj, vi), self.k - l)]

    def superedge(self, u: int, v: int) -> list:
        """Vertices of the superedge from ``u`` to ``v``, endpoints included."""
        return [u] + [self.internal_vertex(u, v, l) for l in range(1, self.k)] + [v]

    def __repr__(self) -> str:
        return f"SubdividedGraph(base={self.base!r}, k={self.k})"


def subdivide(g: Graph, k: int) -> SubdividedGraph:
    return SubdividedGraph(g, k)


def internal_vertex(sg: SubdividedGraph, vi: int, vj: int, l: int) -> int:
    return sg.internal_vertex(vi, vj, l)
