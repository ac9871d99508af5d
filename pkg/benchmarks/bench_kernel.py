"""Compare the compiled and pure-Python decision kernels.

Runs each instance's hardest decision (t = optimum - 1, an infeasibility
proof) and the optimal decision on both backends, checks that node counts
match, and prints timings.

    python benchmarks/bench_kernel.py [--repeat N]
"""
import argparse
import time

from tdcolor import kernel
from tdcolor.exact import exact_tdc, search_order
from tdcolor.graph import generate
from tdcolor.subdivision import subdivide

INSTANCES = [
    ("P14", generate("path", 14)),
    ("K1,4^1/3", subdivide(generate("star", 4), 3).graph),
    ("K5^1/2", subdivide(generate("complete", 5), 2).graph),
    ("C4^1/4", subdivide(generate("cycle", 4), 4).graph),
    ("C20", generate("cycle", 20)),
    ("C6^1/4", subdivide(generate("cycle", 6), 4).graph),
]


def _time(backend, g, t, repeat):
    best, res = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        res = kernel.search(list(g.masks), search_order(g), t, 0, 0.0, backend)
        best = min(best, time.perf_counter() - start)
    return best, res


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()
    if kernel.BACKEND != "cython":
        raise SystemExit("compiled kernel not built; run pip install -e . --no-build-isolation")
    print(f"{'instance':<10} {'n':>3} {'t':>3} {'nodes':>9} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for name, g in INSTANCES:
        opt = exact_tdc(g).value
        for t in (opt - 1, opt):
            tc, rc = _time("cython", g, t, args.repeat)
            tp, rp = _time("python", g, t, args.repeat)
            assert rc[0] == rp[0] and rc[2] == rp[2], f"backends disagree on {name} t={t}"
            print(f"{name:<10} {g.n:>3} {t:>3} {rc[2]:>9} {tc:>10.4f} {tp:>10.4f} {tp / max(tc, 1e-9):>7.1f}x")


if __name__ == "__main__":
    main()
