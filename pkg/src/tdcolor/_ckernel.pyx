# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled TD-coloring decision search (graphs with at most 64 vertices).

Same algorithm, visiting order and node accounting as ``_search.py``.
"""
from libc.stdint cimport uint64_t
from time import perf_counter

cdef enum:
    MAXN = 64
    FOUND = 0
    INFEASIBLE = 1
    EXHAUSTED = 2
    CHECK_EVERY = 4096

cdef struct State:
    int n
    int t
    uint64_t adj[MAXN]
    int order[MAXN]
    int col[MAXN]
    uint64_t cls[MAXN + 2]
    uint64_t uncolored
    long long nodes
    long long node_limit
    int depth
    double deadline
    bint stop


cdef inline bint viable(State* s, int nopen) noexcept:
    cdef int v, c
    cdef uint64_t nv
    cdef bint found
    cdef bint can_open = nopen < s.t
    for v in range(s.n):
        nv = s.adj[v]
        found = False
        for c in range(1, nopen + 1):
            if s.cls[c] & ~nv == 0:
                found = True
                break
        if not found:
            if not (can_open and (s.uncolored & nv)):
                return False
    return True


cdef bint rec(State* s, int i, int nopen):
    cdef int v, c, top, nxt
    cdef uint64_t bit, nb, forb
    s.nodes += 1
    if i > s.depth:
        s.depth = i
    if s.node_limit and s.nodes > s.node_limit:
        s.stop = True
        return False
    if s.deadline and s.nodes % CHECK_EVERY == 0:
        if perf_counter() > s.deadline:
            s.stop = True
            return False
    if i == s.n:
        return True
    v = s.order[i]
    bit = (<uint64_t>1) << v
    nb = s.adj[v]
    forb = 0
    for c in range(1, nopen + 1):
        if s.cls[c] & nb:
            forb |= (<uint64_t>1) << (c - 1)
    top = nopen + 1 if nopen < s.t else s.t
    for c in range(1, top + 1):
        if (forb >> (c - 1)) & 1:
            continue
        s.col[v] = c
        s.cls[c] |= bit
        s.uncolored &= ~bit
        nxt = c if c > nopen else nopen
        if viable(s, nxt):
            if rec(s, i + 1, nxt):
                return True
            if s.stop:
                return False
        s.cls[c] &= ~bit
        s.uncolored |= bit
        s.col[v] = 0
    return False


def search(adj, order, int t, long long node_limit=0, double deadline=0.0):
    """See ``tdcolor._search.search``."""
    cdef State s
    cdef int i, n = len(adj)
    if n > MAXN:
        raise ValueError(f"compiled kernel handles at most {MAXN} vertices")
    if t < 1:
        return INFEASIBLE, None, 0, 0
    if t > n:
        t = n
    s.n = n
    s.t = t
    for i in range(n):
        s.adj[i] = adj[i]
        s.order[i] = order[i]
        s.col[i] = 0
    for i in range(MAXN + 2):
        s.cls[i] = 0
    s.uncolored = ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    s.nodes = 0
    s.node_limit = node_limit
    s.depth = 0
    s.deadline = deadline
    s.stop = False
    ok = rec(&s, 0, 0)
    if s.stop:
        return EXHAUSTED, None, s.nodes, s.depth
    if ok:
        return FOUND, [s.col[i] for i in range(n)], s.nodes, s.depth
    return INFEASIBLE, None, s.nodes, s.depth
