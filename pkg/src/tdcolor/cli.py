"""Command line interface: ``tdcolor {solve,subdivide,formula,construct,verify}``.

Exit status is 0 on success, 1 when a verification suite has FAIL rows and
2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import __version__, formulas
from .coloring import IsolatedVertexError
from .constructions import (
    ConstructionError,
    gamma_construction,
    path_construction,
    star_sub_construction,
    subdivision_upper_construction,
)
from .exact import BudgetExhausted, SearchBudget, exact_chromatic, exact_gamma_t, exact_tdc
from .graph import GraphError
from .harness import (
    ConfigError,
    GraphFileError,
    SuiteConfig,
    emit_report,
    format_graph,
    load_config,
    parse_graph_file,
    run_suite,
)
from .subdivision import subdivide

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph_file(text)


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    if args.k > 1:
        g = subdivide(g, args.k).graph
    budget = SearchBudget(args.budget_nodes, args.budget_secs)
    out = {"n": g.n, "m": g.m, "k": args.k}
    out["gamma_t"] = exact_gamma_t(g)[0]
    out["chi"] = exact_chromatic(g)
    try:
        r = exact_tdc(g, budget)
        out.update(tdc=r.value, exact=True, witness=list(r.witness.assignment), nodes=r.stats.nodes)
    except BudgetExhausted as e:
        out.update(tdc=None, exact=False, bracket=[e.lo, e.hi], witness=list(e.witness.assignment), nodes=e.stats.nodes)
    print(json.dumps(out))
    return EXIT_OK


def _cmd_subdivide(args) -> int:
    g = _read_graph(args.graph)
    sys.stdout.write(format_graph(subdivide(g, args.k).graph))
    return EXIT_OK


def _cmd_formula(args) -> int:
    fn = formulas.FORMULAS[args.name]
    value = fn(*args.args)
    if isinstance(value, tuple):
        value = list(value)
    print(json.dumps(value))
    return EXIT_OK


def _cmd_construct(args) -> int:
    kind, params = args.kind, args.params
    if kind == "path":
        out = path_construction(int(params[0]))
    elif kind == "star":
        out = star_sub_construction(int(params[0]), int(params[1]))
    elif kind in ("thm22", "gamma"):
        if len(params) != 2:
            raise ConstructionError(f"{kind} needs GRAPH_FILE K")
        g = _read_graph(params[0])
        k = int(params[1])
        out = subdivision_upper_construction(g, k) if kind == "thm22" else gamma_construction(subdivide(g, k))
    else:
        raise ConstructionError(f"unknown construction {kind!r}")
    print(json.dumps({
        "construction": out.construction_id,
        "colors": out.lam,
        "claimed_bound": out.claimed_bound,
        "valid": out.valid,
        "coloring": list(out.coloring.assignment),
    }))
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = load_config(Path(args.config).read_text()) if args.config else SuiteConfig()
    if args.seed is not None:
        cfg.seed = args.seed
    if args.hunt:
        cfg.hunt = True
    report = run_suite(cfg, jobs=args.jobs)
    text = emit_report(report, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    summary = report.summary()
    print(" ".join(f"{k}={v}" for k, v in summary.items()), file=sys.stderr)
    for row in report.failures():
        print(
            f"FAIL {row.instance} {row.theorem} k={row.k}: value [{row.value_lo}, {row.value_hi}]"
            f" bounds [{row.bound_lo}, {row.bound_hi}]",
            file=sys.stderr,
        )
    return EXIT_FAIL if summary["FAIL"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tdcolor", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="exact TDC number, total domination number and chromatic number")
    s.add_argument("graph", help="graph file, or - for stdin")
    s.add_argument("--k", type=int, default=1, help="subdivide each edge into a path of length K first")
    s.add_argument("--budget-nodes", type=int, default=None)
    s.add_argument("--budget-secs", type=float, default=None)
    s.set_defaults(func=_cmd_solve)

    s = sub.add_parser("subdivide", help="write the k-subdivision as a graph file")
    s.add_argument("graph")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=_cmd_subdivide)

    s = sub.add_parser("formula", help="evaluate a closed-form value or bound")
    s.add_argument("name", choices=sorted(formulas.FORMULAS))
    s.add_argument("args", type=int, nargs="+")
    s.set_defaults(func=_cmd_formula)

    s = sub.add_parser("construct", help="build a constructive coloring and check it")
    s.add_argument("kind", choices=["path", "star", "thm22", "gamma"])
    s.add_argument("params", nargs="+", help="path N | star N K | thm22 FILE K | gamma FILE K")
    s.set_defaults(func=_cmd_construct)

    s = sub.add_parser("verify", help="run a theorem verification suite")
    s.add_argument("config", nargs="?", help="key = value config file (defaults built in)")
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--hunt", action="store_true", help="also search for k=2,3 edge-bound counterexamples")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=_cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (GraphError, GraphFileError, ConfigError, ConstructionError, IsolatedVertexError,
            formulas.FormulaRangeError, ValueError, OSError, TypeError) as e:
        print(f"tdcolor: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
