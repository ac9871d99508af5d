"""Backend selection for the TD-coloring search.

The compiled kernel is used when it imports and the graph fits in 64 bits;
otherwise the pure-Python twin runs.  Set ``TDCOLOR_PURE_PYTHON=1`` to
force the Python path.
"""
from __future__ import annotations

import os

from . import _search

FOUND = _search.FOUND
INFEASIBLE = _search.INFEASIBLE
EXHAUSTED = _search.EXHAUSTED

_ckernel = None
if not os.environ.get("TDCOLOR_PURE_PYTHON"):
    try:
        from . import _ckernel  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"
COMPILED_MAX_N = 64


def search(adj, order, t, node_limit=0, deadline=0.0, backend=None):
    """Dispatch to the selected backend; ``backend`` may force "python" or "cython"."""
    use = backend or BACKEND
    if use == "cython":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not available")
        if len(adj) <= COMPILED_MAX_N:
            return _ckernel.search(adj, order, t, node_limit, deadline)
    elif use != "python":
        raise ValueError(f"unknown backend {use!r}")
    return _search.search(adj, order, t, node_limit, deadline)
