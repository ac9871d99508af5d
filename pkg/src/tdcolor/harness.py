"""Theorem-verification suites, report serialization and graph files."""
from __future__ import annotations

import configparser
import csv
import io
import json
import random
from dataclasses import asdict, dataclass, field, fields
from typing import Dict, Iterable, List, Optional, Tuple

from . import __version__, formulas, kernel
from .constructions import gamma_construction, subdivision_upper_construction
from .exact import (
    BudgetExhausted,
    SearchBudget,
    exact_chromatic,
    exact_gamma_t,
    exact_tdc,
    henning_witness,
)
from .graph import Graph, GraphError, generate, girth, is_connected, random_connected, structural_flags
from .subdivision import subdivide

THEOREMS = (
    "newpath", "thm22", "prop_star3", "thm24", "thm25", "thm26", "thm27",
    "gamma_sandwich", "henning", "prop_star4", "mono_k", "mono_23",
    "edge_lb", "girth_scale", "chrom3",
)
MODES = ("exact", "bracket", "formula")

PASS, FAIL, INCONCLUSIVE = "PASS", "FAIL", "INCONCLUSIVE"
NOT_APPLICABLE = "NOT_APPLICABLE"
COUNTEREXAMPLE, NO_COUNTEREXAMPLE = "COUNTEREXAMPLE", "NONE"


class GraphFileError(ValueError):
    pass


class CheckSpecError(ValueError):
    pass


class ConfigError(ValueError):
    pass


# graph files -------------------------------------------------------------

def parse_graph_file(text: str) -> Graph:
    """Parse ``n m`` followed by m lines ``u v``; '#' lines are comments."""
    lines = []
    for raw in text.splitlines():
        s = raw.strip()
        if s and not s.startswith("#"):
            lines.append(s)
    if not lines:
        raise GraphFileError("missing header line 'n m'")
    header = lines[0].split()
    if len(header) != 2:
        raise GraphFileError(f"malformed header {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFileError(f"malformed header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise GraphFileError("negative counts in header")
    body = lines[1:]
    if len(body) != m:
        raise GraphFileError(f"header says {m} edges, found {len(body)}")
    edges = []
    for s in body:
        parts = s.split()
        if len(parts) != 2:
            raise GraphFileError(f"bad edge line {s!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFileError(f"bad token in edge line {s!r}") from None
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    return "".join([f"{g.n} {g.m}\n"] + [f"{u} {v}\n" for u, v in g.edges])


# instances and check specs -----------------------------------------------

@dataclass(frozen=True)
class Instance:
    id: str
    family: str
    param: int
    graph: Graph


def named_instance(family: str, p: int) -> Instance:
    return Instance(f"{family}-{p:02d}", family, p, generate(family, p))


@dataclass(frozen=True)
class CheckSpec:
    theorem_id: str
    instance: Instance
    k: int = 1
    mode: str = "exact"

    def __post_init__(self):
        validate_spec(self)


def validate_spec(spec: CheckSpec) -> None:
    t, inst, k = spec.theorem_id, spec.instance, spec.k
    g = inst.graph
    if t not in THEOREMS:
        raise CheckSpecError(f"unknown theorem {t!r}")
    if spec.mode not in MODES:
        raise CheckSpecError(f"unknown mode {spec.mode!r}")
    if k < 1:
        raise CheckSpecError("k must be >= 1")
    connected, isolated = structural_flags(g)
    need_k = {
        "newpath": (1, 1), "henning": (1, 1), "prop_star3": (3, 3), "prop_star4": (4, 4),
        "thm22": (2, None), "gamma_sandwich": (2, None), "mono_23": (2, 2), "mono_k": (3, None),
        "edge_lb": (2, None), "girth_scale": (2, None), "chrom3": (2, None),
        "thm24": (9, None), "thm25": (9, None), "thm26": (7, None), "thm27": (9, None),
    }[t]
    if k < need_k[0] or (need_k[1] is not None and k > need_k[1]):
        raise CheckSpecError(f"{t} does not apply with k={k}")
    if t == "newpath" and (inst.family != "path" or g.n < 2):
        raise CheckSpecError("newpath needs a path with at least 2 vertices")
    if t in ("prop_star3", "prop_star4") and (inst.family != "star" or inst.param < 3):
        raise CheckSpecError(f"{t} needs a star K_1,n with n >= 3")
    if t == "henning" and (isolated or g.n == 0):
        raise CheckSpecError("henning needs a graph without isolated vertices")
    if t not in ("newpath", "henning") and not connected:
        raise CheckSpecError(f"{t} needs a connected base graph")
    if t not in ("newpath", "henning") and g.m < 1:
        raise CheckSpecError(f"{t} needs at least one edge")
    if t == "girth_scale" and girth(g) is None:
        raise CheckSpecError("girth_scale needs a base graph with a cycle")
    if spec.mode == "formula" and (t not in ("thm24", "thm25", "thm26", "thm27") or inst.family != "path"):
        raise CheckSpecError("formula mode covers thm24..thm27 on path bases only")


# report ------------------------------------------------------------------

@dataclass
class Row:
    instance: str
    theorem: str
    n: int
    m: int
    k: int
    sub_n: int
    gamma_t: Optional[int] = None
    chi: Optional[int] = None
    tdc_lo: Optional[int] = None
    tdc_hi: Optional[int] = None
    value_lo: Optional[int] = None
    value_hi: Optional[int] = None
    bound_lo: Optional[int] = None
    bound_hi: Optional[int] = None
    exact: int = 1
    verdict: str = PASS
    source: str = "exact"
    nodes: int = 0

    def sort_key(self):
        return (self.instance, self.theorem, self.k, self.source)


ROW_FIELDS = [f.name for f in fields(Row)]
_INT_FIELDS = {f.name for f in fields(Row) if f.name not in ("instance", "theorem", "verdict", "source")}


def decide_verdict(row: Row) -> str:
    """Verdict implied by the recorded values of a row."""
    if row.verdict in (NOT_APPLICABLE, COUNTEREXAMPLE, NO_COUNTEREXAMPLE):
        return row.verdict
    if row.value_lo is None or row.value_hi is None:
        return INCONCLUSIVE
    holds = (row.bound_lo is None or row.bound_lo <= row.value_lo) and (
        row.bound_hi is None or row.value_hi <= row.bound_hi
    )
    if holds:
        return PASS
    return FAIL if row.exact else INCONCLUSIVE


@dataclass
class Report:
    meta: Dict[str, object]
    rows: List[Row] = field(default_factory=list)

    def summary(self) -> Dict[str, int]:
        out = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0, NOT_APPLICABLE: 0}
        for r in self.rows:
            if r.verdict in out:
                out[r.verdict] += 1
        return out

    def failures(self) -> List[Row]:
        return [r for r in self.rows if r.verdict == FAIL]


def emit_report(r: Report, fmt: str = "json") -> str:
    if fmt == "json":
        meta = dict(r.meta)
        meta["summary"] = r.summary()
        return json.dumps({"meta": meta, "rows": [asdict(row) for row in r.rows]}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(ROW_FIELDS)
        for row in r.rows:
            w.writerow(["" if getattr(row, f) is None else getattr(row, f) for f in ROW_FIELDS])
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def parse_report(text: str, fmt: str = "json") -> Report:
    if fmt == "json":
        obj = json.loads(text)
        meta = dict(obj["meta"])
        meta.pop("summary", None)
        return Report(meta, [Row(**row) for row in obj["rows"]])
    if fmt == "csv":
        rows = []
        for rec in csv.DictReader(io.StringIO(text)):
            vals = {k: (None if v == "" else int(v)) if k in _INT_FIELDS else v for k, v in rec.items()}
            rows.append(Row(**vals))
        return Report({}, rows)
    raise ValueError(f"unknown format {fmt!r}")


# solving with memoization ------------------------------------------------

@dataclass
class _Solved:
    lo: int
    hi: int
    nodes: int

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


class Solver:
    """Per-suite cache of subdivisions and their invariants."""

    def __init__(self, budget: SearchBudget, sub_max_n: Optional[int] = None):
        self.budget = budget
        self.sub_max_n = sub_max_n
        self._sub: Dict[Tuple[str, int], Graph] = {}
        self._tdc: Dict[Tuple[str, int], _Solved] = {}
        self._gamma: Dict[Tuple[str, int], int] = {}
        self._chi: Dict[Tuple[str, int], int] = {}

    def graph(self, inst: Instance, k: int) -> Graph:
        key = (inst.id, k)
        if key not in self._sub:
            self._sub[key] = inst.graph if k == 1 else subdivide(inst.graph, k).graph
        return self._sub[key]

    def gamma_t(self, inst: Instance, k: int) -> int:
        key = (inst.id, k)
        if key not in self._gamma:
            self._gamma[key] = exact_gamma_t(self.graph(inst, k))[0]
        return self._gamma[key]

    def chi(self, inst: Instance, k: int) -> int:
        key = (inst.id, k)
        if key not in self._chi:
            self._chi[key] = exact_chromatic(self.graph(inst, k))
        return self._chi[key]

    def _constructive_upper(self, inst: Instance, k: int):
        h = self.graph(inst, k)
        best = henning_witness(h)
        if k >= 2 and is_connected(inst.graph):
            sg = subdivide(inst.graph, k)
            for out in (gamma_construction(sg), subdivision_upper_construction(inst.graph, k)):
                if out.valid and out.lam < best.lam:
                    best = out.coloring
        return best

    def tdc(self, inst: Instance, k: int, mode: str = "exact") -> _Solved:
        key = (inst.id, k)
        if key in self._tdc:
            return self._tdc[key]
        h = self.graph(inst, k)
        upper = self._constructive_upper(inst, k)
        if mode == "bracket" or (self.sub_max_n is not None and h.n > self.sub_max_n):
            res = _Solved(max(2, self.gamma_t(inst, k)), upper.lam, 0)
        else:
            try:
                r = exact_tdc(h, self.budget, upper=upper)
                res = _Solved(r.value, r.value, r.stats.nodes)
            except BudgetExhausted as e:
                res = _Solved(e.lo, e.hi, e.stats.nodes)
        self._tdc[key] = res
        return res


def _base_row(spec: CheckSpec, solver: Solver) -> Row:
    g = spec.instance.graph
    h = solver.graph(spec.instance, spec.k)
    return Row(spec.instance.id, spec.theorem_id, g.n, g.m, spec.k, h.n)


def _fill_tdc(row: Row, s: _Solved) -> None:
    row.tdc_lo, row.tdc_hi = s.lo, s.hi
    row.value_lo, row.value_hi = s.lo, s.hi
    row.exact = int(s.exact)
    row.nodes = s.nodes
    if not s.exact:
        row.source = "bracket"


def run_check(spec: CheckSpec, budget: SearchBudget = SearchBudget(), solver: Optional[Solver] = None) -> Row:
    """Evaluate one theorem on one instance and return its report row."""
    solver = solver or Solver(budget)
    inst, k, t = spec.instance, spec.k, spec.theorem_id
    g = inst.graph
    row = _base_row(spec, solver)

    if t == "edge_lb" and formulas.edge_lower_thm_last(g.m, k) is None:
        row.verdict = NOT_APPLICABLE
        row.source = "skipped"
        return row

    if t == "girth_scale":
        gg = girth(g)
        row.value_lo = row.value_hi = girth(solver.graph(inst, k))
        row.bound_lo = row.bound_hi = gg * k
        row.source = "structure"
        row.verdict = decide_verdict(row)
        return row

    if t == "chrom3":
        row.chi = solver.chi(inst, k)
        row.value_lo = row.value_hi = row.chi
        row.bound_hi = 2 if k % 2 == 0 else 3
        row.bound_lo = 2 if k % 2 == 0 else None
        row.source = "structure"
        row.verdict = decide_verdict(row)
        return row

    if spec.mode == "formula":
        # the subdivided path P_{m+1}^{1/k} is P_{mk+1}
        val = formulas.path_tdc(g.m * k + 1)
        row.tdc_lo = row.tdc_hi = row.value_lo = row.value_hi = val
        row.source = "formula"
        row.bound_lo, row.bound_hi = _theorem_bounds(t, g, k, None)
        row.verdict = decide_verdict(row)
        return row

    s = solver.tdc(inst, k, spec.mode)
    _fill_tdc(row, s)

    if t in ("henning", "gamma_sandwich"):
        row.gamma_t = solver.gamma_t(inst, k)
        if t == "henning":
            row.chi = solver.chi(inst, k)
    if t in ("mono_k", "mono_23"):
        other = solver.tdc(inst, k + 1, spec.mode)
        # a bracketed right-hand side only certifies its lower end
        row.bound_hi = other.lo
        row.exact = int(s.exact and other.exact)
    else:
        row.bound_lo, row.bound_hi = _theorem_bounds(t, g, k, row)
    row.verdict = decide_verdict(row)
    return row


def _theorem_bounds(t: str, g: Graph, k: int, row: Optional[Row]) -> Tuple[Optional[int], Optional[int]]:
    m = g.m
    if t == "newpath":
        v = formulas.path_tdc(g.n)
        return v, v
    if t == "thm22":
        return tuple(formulas.sandwich_thm22(m, k))
    if t == "prop_star3":
        v = formulas.star_sub_tdc(m, 3)
        return v, v
    if t == "prop_star4":
        v = formulas.star_sub_tdc(m, 4)
        return v, v
    if t == "thm24":
        return formulas.lower_thm24(m, k), None
    if t == "thm25":
        return formulas.lower_thm25(m, k), None
    if t == "thm26":
        return None, formulas.upper_thm26(m, k)
    if t == "thm27":
        return None, formulas.upper_thm27(m, k)
    if t == "henning":
        return tuple(formulas.henning_bounds(row.gamma_t, row.chi))
    if t == "gamma_sandwich":
        return tuple(formulas.gamma_sandwich_sub(row.gamma_t))
    if t == "edge_lb":
        return formulas.edge_lower_thm_last(m, k), None
    raise CheckSpecError(f"no bounds for {t}")


# suite configuration -----------------------------------------------------

@dataclass
class SuiteConfig:
    seed: int = 2024
    paths: Tuple[int, int] = (2, 16)
    cycles: Tuple[int, int] = (3, 16)
    stars: Tuple[int, int] = (3, 6)
    complete: Tuple[int, int] = (3, 5)
    random_count: int = 6
    random_n: Tuple[int, int] = (4, 8)
    random_extra: int = 3
    k_range: Tuple[int, int] = (2, 4)
    k_high: Tuple[int, int] = (9, 13)
    closed_form_m: Tuple[int, int] = (1, 6)
    closed_form_k: Tuple[int, int] = (9, 13)
    henning_max_n: int = 10
    sub_max_n: int = 24
    budget_nodes: Optional[int] = 5_000_000
    budget_secs: Optional[float] = None
    theorems: Tuple[str, ...] = THEOREMS
    hunt: bool = False

    def budget(self) -> SearchBudget:
        return SearchBudget(self.budget_nodes, self.budget_secs)

    def meta(self) -> Dict[str, object]:
        return {
            "tool": "tdcolor",
            "version": __version__,
            "seed": self.seed,
            "budget_nodes": self.budget_nodes,
            "budget_secs": self.budget_secs,
            "sub_max_n": self.sub_max_n,
            "kernel": kernel.BACKEND,
        }


def _range(text: str) -> Tuple[int, int]:
    text = text.strip()
    if text.lower() in ("none", "off", ""):
        return (1, 0)
    if ".." in text:
        a, b = text.split("..", 1)
        return int(a), int(b)
    v = int(text)
    return v, v


def _optional_int(text: str) -> Optional[int]:
    return None if text.strip().lower() in ("none", "") else int(text)


def load_config(text: str) -> SuiteConfig:
    """Read flat ``key = value`` lines; ranges are written ``a..b``."""
    cp = configparser.ConfigParser(inline_comment_prefixes=("#",))
    try:
        cp.read_string("[suite]\n" + text)
    except configparser.Error as e:
        raise ConfigError(str(e)) from None
    cfg = SuiteConfig()
    parsers = {
        "seed": int, "random_count": int, "random_extra": int, "henning_max_n": int,
        "sub_max_n": int, "budget_nodes": _optional_int,
        "budget_secs": lambda s: None if s.strip().lower() in ("none", "") else float(s),
        "paths": _range, "cycles": _range, "stars": _range, "complete": _range,
        "random_n": _range, "k_range": _range, "k_high": _range,
        "closed_form_m": _range, "closed_form_k": _range,
        "theorems": lambda s: THEOREMS if s.strip() == "all" else tuple(x.strip() for x in s.split(",") if x.strip()),
        "hunt": lambda s: cp.BOOLEAN_STATES[s.strip().lower()],
    }
    for key, raw in cp["suite"].items():
        if key not in parsers:
            raise ConfigError(f"unknown config key {key!r}")
        try:
            setattr(cfg, key, parsers[key](raw))
        except (ValueError, KeyError):
            raise ConfigError(f"bad value for {key}: {raw!r}") from None
    for t in cfg.theorems:
        if t not in THEOREMS:
            raise ConfigError(f"unknown theorem {t!r}")
    if cfg.budget_nodes is not None and cfg.budget_nodes <= 0:
        raise ConfigError("budget_nodes must be positive")
    if cfg.budget_secs is not None and cfg.budget_secs <= 0:
        raise ConfigError("budget_secs must be positive")
    if cfg.random_n[0] < 2 and cfg.random_count > 0:
        raise ConfigError("random graphs need n >= 2")
    return cfg


def build_instances(cfg: SuiteConfig) -> List[Instance]:
    out = []
    for family, (a, b) in (("path", cfg.paths), ("cycle", cfg.cycles), ("star", cfg.stars), ("complete", cfg.complete)):
        for p in range(a, b + 1):
            out.append(named_instance(family, p))
    rng = random.Random(cfg.seed)
    for i in range(cfg.random_count):
        n = rng.randint(cfg.random_n[0], cfg.random_n[1])
        g = random_connected(n, rng.randint(0, cfg.random_extra), rng)
        out.append(Instance(f"random-{i:02d}", "random", n, g))
    return out


def _sub_size(g: Graph, k: int) -> int:
    return g.n + (k - 1) * g.m


def build_specs(cfg: SuiteConfig, instances: Iterable[Instance]) -> List[CheckSpec]:
    wanted = set(cfg.theorems)
    specs = []
    ks = range(cfg.k_range[0], cfg.k_range[1] + 1)
    khigh = range(cfg.k_high[0], cfg.k_high[1] + 1)

    def add(t, inst, k=1, mode="exact"):
        if t in wanted:
            specs.append(CheckSpec(t, inst, k, mode))

    for inst in instances:
        g = inst.graph
        connected, isolated = structural_flags(g)
        if inst.family == "path" and g.n >= 2:
            add("newpath", inst)
        if not isolated and g.n and g.n <= cfg.henning_max_n:
            add("henning", inst)
        if not connected or g.m < 1:
            continue
        cyclic = girth(g) is not None
        for k in ks:
            add("chrom3", inst, k)
            if cyclic:
                add("girth_scale", inst, k)
            if _sub_size(g, k) > cfg.sub_max_n:
                continue
            add("thm22", inst, k)
            add("gamma_sandwich", inst, k)
            add("edge_lb", inst, k)
            if k == 2 and _sub_size(g, 3) <= cfg.sub_max_n:
                add("mono_23", inst, k)
            if k >= 3 and _sub_size(g, k + 1) <= cfg.sub_max_n:
                add("mono_k", inst, k)
            if inst.family == "star" and inst.param >= 3 and k in (3, 4):
                add("prop_star3" if k == 3 else "prop_star4", inst, k)
        for k in khigh:
            if _sub_size(g, k) > cfg.sub_max_n:
                continue
            for t in ("thm24", "thm25", "thm26", "thm27"):
                add(t, inst, k)
    if cfg.closed_form_m[0] <= cfg.closed_form_m[1]:
        for m in range(cfg.closed_form_m[0], cfg.closed_form_m[1] + 1):
            inst = named_instance("path", m + 1)
            for k in range(cfg.closed_form_k[0], cfg.closed_form_k[1] + 1):
                for t in ("thm24", "thm25", "thm26", "thm27"):
                    if t in wanted:
                        specs.append(CheckSpec(t, inst, k, "formula"))
    return specs


def hunt_edge_bound(cfg: SuiteConfig, instances: Iterable[Instance], solver: Solver) -> List[Row]:
    """Look for graphs with χ_d^t(G^{1/k}) < m at k = 2, 3."""
    rows = []
    for inst in instances:
        g = inst.graph
        if not is_connected(g) or g.m < 1:
            continue
        for k in (2, 3):
            if _sub_size(g, k) > cfg.sub_max_n:
                continue
            s = solver.tdc(inst, k)
            row = Row(inst.id, "edge_lb_hunt", g.n, g.m, k, _sub_size(g, k))
            _fill_tdc(row, s)
            row.bound_lo = g.m
            if s.hi < g.m:
                row.verdict = COUNTEREXAMPLE
            else:
                row.verdict = NO_COUNTEREXAMPLE
            rows.append(row)
    return rows


def _run_group(args):
    cfg, specs = args
    solver = Solver(cfg.budget(), cfg.sub_max_n)
    return [run_check(s, cfg.budget(), solver) for s in specs]


def run_suite(cfg: SuiteConfig, jobs: int = 1) -> Report:
    """Run every check in the configured suite; rows come back sorted."""
    instances = build_instances(cfg)
    specs = build_specs(cfg, instances)
    groups: Dict[str, List[CheckSpec]] = {}
    for s in specs:
        groups.setdefault(s.instance.id + ("#formula" if s.mode == "formula" else ""), []).append(s)
    work = [(cfg, groups[key]) for key in sorted(groups)]
    rows: List[Row] = []
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_run_group, work):
                rows.extend(part)
    else:
        for item in work:
            rows.extend(_run_group(item))
    if cfg.hunt:
        solver = Solver(cfg.budget(), cfg.sub_max_n)
        hunt_pool = [i for i in instances if i.family in ("random", "complete")]
        rows.extend(hunt_edge_bound(cfg, hunt_pool, solver))
    rows.sort(key=Row.sort_key)
    return Report(cfg.meta(), rows)


__all__ = [
    "THEOREMS", "CheckSpec", "Instance", "Report", "Row", "Solver", "SuiteConfig",
    "GraphFileError", "CheckSpecError", "ConfigError", "GraphError",
    "parse_graph_file", "format_graph", "run_check", "run_suite", "emit_report",
    "parse_report", "load_config", "named_instance", "decide_verdict",
]
