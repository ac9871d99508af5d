"""Exact χ_d^t, γ_t and χ, plus a brute-force oracle for cross-checking."""
from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

from . import kernel
from .coloring import Coloring, IsolatedVertexError, is_td_coloring
from .graph import Graph, VertexSet


class SearchStatus(str, enum.Enum):
    INFEASIBLE = "infeasible"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class SearchBudget:
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


UNLIMITED = SearchBudget()


@dataclass
class SearchStats:
    nodes: int = 0
    depth: int = 0
    elapsed: float = 0.0


@dataclass
class TdcResult:
    value: int
    witness: Coloring
    lower_bound: int
    stats: SearchStats = field(default_factory=SearchStats)


class BudgetExhausted(Exception):
    """Raised by :func:`exact_tdc` when the budget runs out before a proof.

    ``lo <= χ_d^t <= hi`` is certified; ``witness`` realizes ``hi``.
    """

    def __init__(self, lo: int, hi: int, witness: Coloring, stats: SearchStats):
        super().__init__(f"search budget exhausted; value in [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi
        self.witness = witness
        self.stats = stats


def _require_isolated_free(g: Graph) -> None:
    for v in range(g.n):
        if not g.adjacency[v]:
            raise IsolatedVertexError(f"vertex {v} is isolated")


def search_order(g: Graph) -> List[int]:
    """Spanning-forest preorder (depth first, lowest id first)."""
    seen = [False] * g.n
    order = []
    for root in range(g.n):
        if seen[root]:
            continue
        stack = [root]
        while stack:
            u = stack.pop()
            if seen[u]:
                continue
            seen[u] = True
            order.append(u)
            for w in sorted(g.adjacency[u], reverse=True):
                if not seen[w]:
                    stack.append(w)
    return order


def _decide(g, t, node_limit, deadline, backend=None):
    return kernel.search(list(g.masks), search_order(g), t, node_limit or 0, deadline or 0.0, backend)


def decide_tdc(
    g: Graph, t: int, budget: SearchBudget = UNLIMITED, backend: Optional[str] = None
) -> Union[Coloring, SearchStatus]:
    """A TD-coloring with at most ``t`` colors, or a status saying why not.

    ``SearchStatus.INFEASIBLE`` is a proof of nonexistence.
    """
    _require_isolated_free(g)
    if t < 1:
        raise ValueError("t must be >= 1")
    deadline = time.perf_counter() + budget.time_limit if budget.time_limit else 0.0
    status, colors, _, _ = _decide(g, t, budget.node_limit, deadline, backend)
    if status == kernel.FOUND:
        return Coloring(colors)
    if status == kernel.INFEASIBLE:
        return SearchStatus.INFEASIBLE
    return SearchStatus.BUDGET_EXHAUSTED


def henning_witness(g: Graph) -> Coloring:
    """TD-coloring with γ_t + χ(G - Γ) colors.

    Members of a minimum total dominating set Γ get private colors; the
    rest is properly colored with fresh colors.  Every vertex then has a
    singleton class in its neighborhood.
    """
    s, gamma = exact_gamma_t(g)
    members = sorted(gamma.members)
    colors = [0] * g.n
    for i, v in enumerate(members, start=1):
        colors[v] = i
    rest = [v for v in range(g.n) if v not in gamma.members]
    if rest:
        index = {v: i for i, v in enumerate(rest)}
        sub = Graph(len(rest), [(index[u], index[v]) for u, v in g.edges if u in index and v in index])
        _, sub_colors = _chromatic_coloring(sub)
        for v in rest:
            colors[v] = s + sub_colors[index[v]]
    return Coloring(colors)


def exact_tdc(
    g: Graph,
    budget: SearchBudget = UNLIMITED,
    upper: Optional[Coloring] = None,
    backend: Optional[str] = None,
) -> TdcResult:
    """Minimum number of colors in a TD-coloring of ``g``.

    Tries t = lo, lo+1, ... where lo = max(2, γ_t); the first feasible t is
    optimal.  ``upper`` may seed a known TD-coloring; otherwise the
    γ_t-based witness is used.  Raises :class:`BudgetExhausted` with a
    certified bracket when the budget runs out.
    """
    _require_isolated_free(g)
    if g.n == 0:
        raise ValueError("empty graph")
    start = time.perf_counter()
    deadline = start + budget.time_limit if budget.time_limit else 0.0
    gamma, _ = exact_gamma_t(g)
    lo = max(2, gamma)
    best = henning_witness(g)
    if upper is not None and upper.lam < best.lam and is_td_coloring(g, upper):
        best = upper
    stats = SearchStats()
    for t in range(lo, best.lam):
        if deadline and time.perf_counter() > deadline:
            stats.elapsed = time.perf_counter() - start
            raise BudgetExhausted(t, best.lam, best, stats)
        remaining = None
        if budget.node_limit is not None:
            remaining = budget.node_limit - stats.nodes
            if remaining <= 0:
                stats.elapsed = time.perf_counter() - start
                raise BudgetExhausted(t, best.lam, best, stats)
        status, colors, nodes, depth = _decide(g, t, remaining, deadline, backend)
        stats.nodes += nodes
        stats.depth = max(stats.depth, depth)
        if status == kernel.FOUND:
            stats.elapsed = time.perf_counter() - start
            return TdcResult(t, Coloring(colors), lo, stats)
        if status == kernel.EXHAUSTED:
            stats.elapsed = time.perf_counter() - start
            raise BudgetExhausted(t, best.lam, best, stats)
    stats.elapsed = time.perf_counter() - start
    return TdcResult(best.lam, best, lo, stats)


ORACLE_MAX_N = 12


def _restricted_growth_strings(n: int):
    """All restricted growth strings of length n (one per set partition)."""
    if n == 0:
        yield ()
        return
    a = [0] * n
    b = [1] * n  # b[i] = 1 + max(a[:i])
    while True:
        yield tuple(a)
        j = n - 1
        while j > 0 and a[j] == b[j]:
            j -= 1
        if j == 0:
            return
        a[j] += 1
        m = b[j] + (a[j] == b[j])
        for i in range(j + 1, n):
            a[i] = 0
            b[i] = m


def brute_tdc_oracle(g: Graph) -> int:
    """Minimum class count over every set partition of V(g).

    Enumerates all restricted growth strings; shares nothing with the
    pruned search.
    """
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle limited to n <= {ORACLE_MAX_N}, got {g.n}")
    _require_isolated_free(g)
    nbrs = [set(a) for a in g.adjacency]
    best = None
    for rgs in _restricted_growth_strings(g.n):
        k = max(rgs) + 1
        if best is not None and k >= best:
            continue
        if any(rgs[u] == rgs[v] for u, v in g.edges):
            continue
        blocks = [set() for _ in range(k)]
        for v, c in enumerate(rgs):
            blocks[c].add(v)
        if all(any(blk <= nbrs[v] for blk in blocks) for v in range(g.n)):
            best = k
    return best


def exact_gamma_t(g: Graph) -> Tuple[int, VertexSet]:
    """Total domination number with a minimum witness set.

    Increasing-size search: each level branches on the undominated vertex
    with the fewest neighbors, trying each neighbor as its dominator.
    """
    _require_isolated_free(g)
    n = g.n
    if n == 0:
        return 0, VertexSet(g, [])
    full = (1 << n) - 1
    adj = g.masks
    maxdeg = max(len(a) for a in g.adjacency)
    # vertices dominated when w joins the set
    covers = adj

    def popcount(x):
        return bin(x).count("1")

    def rec(chosen, dominated, budget):
        if dominated == full:
            return chosen
        if budget == 0:
            return None
        if -(-popcount(full & ~dominated) // maxdeg) > budget:
            return None
        undominated = full & ~dominated
        pick, fewest = -1, n + 1
        x = undominated
        while x:
            low = x & -x
            v = low.bit_length() - 1
            d = len(g.adjacency[v])
            if d < fewest:
                pick, fewest = v, d
            x ^= low
        for w in sorted(g.adjacency[pick]):
            if chosen >> w & 1:
                continue
            found = rec(chosen | (1 << w), dominated | covers[w], budget - 1)
            if found is not None:
                return found
        return None

    lo = max(2, -(-n // maxdeg))
    for s in range(lo, n + 1):
        found = rec(0, 0, s)
        if found is not None:
            members = [v for v in range(n) if found >> v & 1]
            return len(members), VertexSet(g, members)
    raise AssertionError("isolated-free graph must have a total dominating set")


def _chromatic_coloring(g: Graph) -> Tuple[int, List[int]]:
    n = g.n
    if n == 0:
        return 0, []
    order = search_order(g)
    colors = [0] * n

    def rec(i, k, used):
        if i == n:
            return True
        v = order[i]
        forb = {colors[w] for w in g.adjacency[v]}
        for c in range(1, min(used + 1, k) + 1):
            if c in forb:
                continue
            colors[v] = c
            if rec(i + 1, k, max(used, c)):
                return True
            colors[v] = 0
        return False

    lo = 2 if g.m else 1
    for k in range(lo, n + 1):
        if rec(0, k, 0):
            return k, list(colors)
    raise AssertionError("unreachable")


def exact_chromatic(g: Graph) -> int:
    """Chromatic number by backtracking."""
    return _chromatic_coloring(g)[0]


def chromatic_coloring(g: Graph) -> Coloring:
    return Coloring(_chromatic_coloring(g)[1]) if g.n else Coloring([])
