"""Pure-Python TD-coloring decision search.

Mirrors ``_ckernel.pyx`` step for step so both report identical node
counts.  Used when the compiled extension is unavailable or the graph has
more than 64 vertices.
"""
from __future__ import annotations

import time

FOUND = 0
INFEASIBLE = 1
EXHAUSTED = 2

_CHECK_EVERY = 4096


class _Budget(Exception):
    pass


def search(adj, order, t, node_limit=0, deadline=0.0):
    """Look for a TD-coloring with at most ``t`` colors.

    ``adj`` holds neighbor bitmasks, ``order`` the vertex visiting order.
    A zero ``node_limit`` or ``deadline`` means unlimited.
    Returns ``(status, colors, nodes, max_depth)``; ``colors`` is only set
    when status is FOUND.
    """
    n = len(adj)
    col = [0] * n
    cls = [0] * (t + 2)
    state = {"nodes": 0, "depth": 0, "uncolored": (1 << n) - 1}

    def viable(nopen):
        unc = state["uncolored"]
        can_open = nopen < t
        for v in range(n):
            nv = adj[v]
            for c in range(1, nopen + 1):
                if cls[c] & ~nv == 0:
                    break
            else:
                if not (can_open and unc & nv):
                    return False
        return True

    def rec(i, nopen):
        state["nodes"] += 1
        nodes = state["nodes"]
        if i > state["depth"]:
            state["depth"] = i
        if node_limit and nodes > node_limit:
            raise _Budget
        if deadline and nodes % _CHECK_EVERY == 0 and time.perf_counter() > deadline:
            raise _Budget
        if i == n:
            return True
        v = order[i]
        bit = 1 << v
        forb = 0
        nb = adj[v]
        for c in range(1, nopen + 1):
            if cls[c] & nb:
                forb |= 1 << c
        top = nopen + 1 if nopen < t else t
        for c in range(1, top + 1):
            if forb >> c & 1:
                continue
            col[v] = c
            cls[c] |= bit
            state["uncolored"] &= ~bit
            nxt = c if c > nopen else nopen
            if viable(nxt) and rec(i + 1, nxt):
                return True
            cls[c] &= ~bit
            state["uncolored"] |= bit
            col[v] = 0
        return False

    if t < 1:
        return INFEASIBLE, None, 0, 0
    t = min(t, n)
    try:
        ok = rec(0, 0)
    except _Budget:
        return EXHAUSTED, None, state["nodes"], state["depth"]
    if ok:
        return FOUND, list(col), state["nodes"], state["depth"]
    return INFEASIBLE, None, state["nodes"], state["depth"]
