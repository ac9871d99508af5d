"""Immutable simple graphs on dense integer vertex ids."""
from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Iterator, Optional, Sequence, Tuple

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Base class for invalid graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class FamilyParameterError(GraphError):
    pass


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    Adjacency is kept both as frozensets (for readable checks) and as
    integer bitmasks (for the search code).
    """

    __slots__ = ("n", "edges", "adjacency", "masks")

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for u, v in edges:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DuplicateEdgeError(f"duplicate edge {e}")
            seen.add(e)
        nbrs = [set() for _ in range(n)]
        for u, v in seen:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.edges: Tuple[Edge, ...] = tuple(sorted(seen))
        self.adjacency: Tuple[frozenset, ...] = tuple(frozenset(s) for s in nbrs)
        self.masks: Tuple[int, ...] = tuple(sum(1 << w for w in s) for s in nbrs)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class VertexSet:
    """A set of vertices of a particular graph."""

    __slots__ = ("members", "n")

    def __init__(self, g: Graph, members: Iterable[int]):
        members = list(members)
        if len(set(members)) != len(members):
            raise GraphError("vertex set has duplicate members")
        for v in members:
            if not 0 <= v < g.n:
                raise VertexRangeError(f"vertex {v} outside 0..{g.n - 1}")
        self.members = frozenset(members)
        self.n = g.n

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def mask(self) -> int:
        return sum(1 << v for v in self.members)

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self.members)})"


def make_graph(n: int, edges: Sequence[Edge]) -> Graph:
    return Graph(n, edges)


FAMILIES = ("path", "cycle", "star", "complete")
_FAMILY_MIN = {"path": 1, "cycle": 3, "star": 1, "complete": 1}


def generate(family: str, p: int) -> Graph:
    """Build a named graph family member.

    ``star`` with parameter p is K_{1,p}: center 0 and leaves 1..p.
    """
    if family not in _FAMILY_MIN:
        raise FamilyParameterError(f"unknown family {family!r}")
    if p < _FAMILY_MIN[family]:
        raise FamilyParameterError(f"{family} needs p >= {_FAMILY_MIN[family]}, got {p}")
    if family == "path":
        return Graph(p, [(i, i + 1) for i in range(p - 1)])
    if family == "cycle":
        return Graph(p, [(i, (i + 1) % p) for i in range(p)])
    if family == "star":
        return Graph(p + 1, [(0, i) for i in range(1, p + 1)])
    return Graph(p, [(i, j) for i in range(p) for j in range(i + 1, p)])


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for a forest."""
    best = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in sorted(g.adjacency[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def components(g: Graph) -> list:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def structural_flags(g: Graph) -> Tuple[bool, bool]:
    """Return ``(is_connected, has_isolated_vertex)``."""
    return is_connected(g), any(not a for a in g.adjacency)


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    q.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def random_connected(n: int, extra_edges: int, rng: random.Random) -> Graph:
    """Random spanning tree on n vertices plus up to ``extra_edges`` more edges."""
    if n < 2:
        raise FamilyParameterError("random connected graph needs n >= 2")
    perm = list(range(n))
    rng.shuffle(perm)
    edges = set()
    for i in range(1, n):
        u, v = perm[i], perm[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(missing)
    edges.update(missing[:extra_edges])
    return Graph(n, sorted(edges))
