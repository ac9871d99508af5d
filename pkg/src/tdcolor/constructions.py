"""Explicit TD-colorings from the constructive upper-bound arguments.

Each builder returns a :class:`ConstructionOutcome` whose ``valid`` flag is
the checker's verdict; nothing is repaired silently.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional

from .coloring import Coloring, is_td_coloring
from .exact import exact_gamma_t
from .formulas import FormulaRangeError, path_tdc
from .graph import Graph, generate, is_connected
from .subdivision import SubdividedGraph, SubdivisionError, subdivide


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class ConstructionOutcome:
    coloring: Coloring
    claimed_bound: int
    construction_id: str
    valid: bool

    @property
    def lam(self) -> int:
        return self.coloring.lam


def _outcome(g: Graph, colors, bound: int, cid: str) -> ConstructionOutcome:
    c = Coloring(colors)
    return ConstructionOutcome(c, bound, cid, is_td_coloring(g, c) and c.lam <= bound)


# optimal colorings of P_2..P_7, checked against the oracle in the tests
SMALL_PATH_WITNESSES = {
    2: (1, 2),
    3: (1, 2, 1),
    4: (1, 2, 3, 1),
    5: (1, 2, 3, 4, 1),
    6: (1, 2, 1, 3, 4, 3),
    7: (1, 2, 1, 3, 4, 5, 3),
}


def path_colors(n: int) -> List[int]:
    """Color sequence along P_n using ``path_tdc(n)`` colors.

    For n >= 8 positions follow the period-4 pattern 1, new, new, 2; when
    n is not a multiple of 4 the last block is replaced by a tail of
    length 4 + (n mod 4).
    """
    if n < 2:
        raise FormulaRangeError(f"path order must be >= 2, got {n}")
    if n in SMALL_PATH_WITNESSES:
        return list(SMALL_PATH_WITNESSES[n])
    q, r = divmod(n, 4)
    prefix_len = n if r == 0 else 4 * (q - 1)
    colors = []
    fresh = 3
    for p in range(1, prefix_len + 1):
        if p % 4 == 1:
            colors.append(1)
        elif p % 4 == 0:
            colors.append(2)
        else:
            colors.append(fresh)
            fresh += 1
    if r:
        tail = {
            1: (1, "F", "F", "F", 2),
            2: (1, "F", "F", "F", "F", 2),
            3: (1, "F", "F", 2, "F", "F", 2),
        }[r]
        for x in tail:
            if x == "F":
                colors.append(fresh)
                fresh += 1
            else:
                colors.append(x)
    return colors


def path_construction(n: int) -> ConstructionOutcome:
    return _outcome(generate("path", n), path_colors(n), path_tdc(n), "path")


def star_sub_construction(n: int, k: int) -> ConstructionOutcome:
    """Colorings of the 3- and 4-subdivided star K_{1,n}.

    Naming along each arm from the center v: k=3 gives v, w_i, q_i, p_i and
    k=4 gives v, z_i, w_i, q_i, p_i.  q_i always gets a private color i.
    k=3: w_i gets private n+i, and v shares 2n+1 with all p_i.
    k=4: w_i and p_i share n+i, v gets 2n+1, all z_i share 2n+2.
    """
    if n < 3:
        raise ConstructionError(f"star needs n >= 3, got {n}")
    if k not in (3, 4):
        raise ConstructionError(f"only k = 3 or 4 is covered, got {k}")
    sg = subdivide(generate("star", n), k)
    colors: Dict[int, int] = {0: 2 * n + 1}
    for i in range(1, n + 1):
        arm = sg.superedge(0, i)
        p, q, w = arm[-1], arm[-2], arm[-3]
        colors[q] = i
        colors[w] = n + i
        if k == 3:
            colors[p] = 2 * n + 1
        else:
            colors[p] = n + i
            colors[arm[1]] = 2 * n + 2
    seq = [colors[v] for v in range(sg.graph.n)]
    return _outcome(sg.graph, seq, 2 * n + 1 if k == 3 else 2 * n + 2, f"star{k}")


def _local_fill(g: Graph, colors: List[int], path: List[int], fresh: int, max_new: int) -> Optional[Dict[int, int]]:
    """Color the uncolored vertices of ``path`` with the fewest fresh colors.

    Fresh colors are ``fresh, fresh+1, ...`` and appear nowhere else, so
    their classes stay inside the path.  Every newly colored vertex must
    end with a class inside its neighborhood.  Existing classes are final
    at this point and may serve as dominated classes when they fit.
    """
    todo = [v for v in path if colors[v] == 0]
    if not todo:
        return {}
    old_classes: Dict[int, set] = {}
    for v, c in enumerate(colors):
        if c:
            old_classes.setdefault(c, set()).add(v)

    def ok(assign: Dict[int, int]) -> bool:
        for v in todo:
            cv = assign[v]
            for u in g.adjacency[v]:
                if (colors[u] or assign.get(u)) == cv:
                    return False
        new_classes: Dict[int, set] = {}
        for v, c in assign.items():
            new_classes.setdefault(c, set()).add(v)
        for v in todo:
            nv = g.adjacency[v]
            if not any(cl <= nv for cl in new_classes.values()) and not any(
                cl <= nv for cl in old_classes.values()
            ):
                return False
        return True

    for budget in range(1, max_new + 1):
        assign: Dict[int, int] = {}

        def rec(i: int, used: int) -> bool:
            if i == len(todo):
                return ok(assign)
            v = todo[i]
            for c in range(min(used + 1, budget)):
                color = fresh + c
                if any((colors[u] or assign.get(u)) == color for u in g.adjacency[v]):
                    continue
                assign[v] = color
                if rec(i + 1, max(used, c + 1)):
                    return True
                del assign[v]
            return False

        if rec(0, 0):
            return dict(assign)
    return None


def subdivision_upper_construction(g: Graph, k: int) -> ConstructionOutcome:
    """Superedge-by-superedge coloring of G^{1/k} with disjoint palettes.

    The first superedge (lowest edge) is a TD-coloring of P_{k+1}.  The rest
    are visited breadth first; each keeps its already colored endpoints and
    spends a fresh palette of at most path_tdc(k) + 2 colors on the
    remaining vertices, chosen by a small exact search.
    """
    if k < 2:
        raise SubdivisionError(f"k must be >= 2, got {k}")
    if g.m < 1 or not is_connected(g):
        raise ConstructionError("base graph must be connected with at least one edge")
    sg = subdivide(g, k)
    h = sg.graph
    colors = [0] * h.n
    bound = (g.m - 1) * path_tdc(k) + path_tdc(k + 1)

    root = g.edges[0]
    first = sg.superedge(*root)
    for v, c in zip(first, path_colors(k + 1)):
        colors[v] = c
    next_color = max(colors) + 1
    done = {root}
    queue = deque(sorted(root))
    while queue:
        u = queue.popleft()
        for w in sorted(g.adjacency[u]):
            e = (min(u, w), max(u, w))
            if e in done:
                continue
            done.add(e)
            path = sg.superedge(u, w)
            fill = _local_fill(h, colors, path, next_color, path_tdc(k) + 2)
            if fill is None:
                # no local completion; distinct colors, the checker decides
                fill = {}
                for v in path:
                    if colors[v] == 0:
                        fill[v] = next_color + len(fill)
            for v, c in fill.items():
                colors[v] = c
            next_color = max(colors) + 1
            queue.append(w)
    return _outcome(h, colors, bound, "thm22")


def gamma_construction(sg: SubdividedGraph) -> ConstructionOutcome:
    """γ_t + 2 coloring of a subdivision.

    Members of a minimum total dominating set get private colors 1..s.
    Then, lowest id first, an uncolored vertex x takes s+1 and its
    uncolored neighbors take s+2.
    """
    if sg.k < 2:
        raise SubdivisionError("needs k >= 2")
    h = sg.graph
    s, gamma = exact_gamma_t(h)
    colors = [0] * h.n
    for i, v in enumerate(sorted(gamma.members), start=1):
        colors[v] = i
    for x in range(h.n):
        if colors[x]:
            continue
        colors[x] = s + 1
        for y in h.adjacency[x]:
            if colors[y] == 0:
                colors[y] = s + 2
    return _outcome(h, colors, s + 2, "gamma")
