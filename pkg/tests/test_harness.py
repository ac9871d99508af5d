import json

import pytest
from hypothesis import given, settings, strategies as st

from tdcolor.exact import exact_tdc
from tdcolor.graph import DuplicateEdgeError, VertexRangeError, generate
from tdcolor.harness import (
    FAIL,
    INCONCLUSIVE,
    NOT_APPLICABLE,
    PASS,
    CheckSpec,
    CheckSpecError,
    ConfigError,
    GraphFileError,
    Report,
    Row,
    SuiteConfig,
    decide_verdict,
    emit_report,
    format_graph,
    load_config,
    named_instance,
    parse_graph_file,
    parse_report,
    run_check,
    run_suite,
)
from tdcolor.subdivision import subdivide


def test_parse_path():
    assert parse_graph_file("4 3\n0 1\n1 2\n2 3\n") == generate("path", 4)


def test_parse_comments_and_blank_lines():
    text = "# a triangle\n3 3\n\n0 1\n# mid\n1 2\n2 0\n"
    assert parse_graph_file(text) == generate("cycle", 3)


@pytest.mark.parametrize("text, exc", [
    ("2 2\n0 1\n0 1\n", DuplicateEdgeError),
    ("3 1\n0 3\n", VertexRangeError),
    ("", GraphFileError),
    ("3\n0 1\n", GraphFileError),
    ("3 2\n0 1\n", GraphFileError),
    ("3 1\n0 1\n1 2\n", GraphFileError),
    ("3 1\n0 x\n", GraphFileError),
    ("3 1\n0 1 2\n", GraphFileError),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_graph_file(text)


def test_format_round_trip():
    for g in (generate("cycle", 5), generate("star", 4), subdivide(generate("complete", 4), 2).graph):
        assert parse_graph_file(format_graph(g)) == g


def test_newpath_p10_matches_exact_solver():
    # the closed form says 8, exhaustive search gives 7
    row = run_check(CheckSpec("newpath", named_instance("path", 10)))
    assert row.value_lo == row.value_hi == exact_tdc(generate("path", 10)).value == 7
    assert row.bound_lo == row.bound_hi == 8
    assert row.verdict == FAIL


def test_newpath_p8_passes():
    row = run_check(CheckSpec("newpath", named_instance("path", 8)))
    assert row.value_lo == 6 and row.verdict == PASS


def test_edge_lb_star():
    row = run_check(CheckSpec("edge_lb", named_instance("star", 3), 4))
    assert row.value_lo == 8 and row.bound_lo == 3 and row.verdict == PASS


@pytest.mark.parametrize("k", [2, 3])
def test_edge_lb_not_applicable_small_k(k):
    row = run_check(CheckSpec("edge_lb", named_instance("complete", 3), k))
    assert row.verdict == NOT_APPLICABLE


def test_mono_23_triangle():
    row = run_check(CheckSpec("mono_23", named_instance("complete", 3), 2))
    c6 = exact_tdc(generate("cycle", 6)).value
    c9 = exact_tdc(generate("cycle", 9)).value
    assert c6 == 4 and row.value_lo == c6 and row.bound_hi == c9
    assert row.verdict == (PASS if c6 <= c9 else FAIL)


def test_structural_checks():
    row = run_check(CheckSpec("girth_scale", named_instance("cycle", 5), 3))
    assert row.value_lo == 15 and row.verdict == PASS
    row = run_check(CheckSpec("chrom3", named_instance("complete", 5), 2))
    assert row.value_lo == 2 and row.verdict == PASS


def test_bracket_mode_never_fails():
    row = run_check(CheckSpec("thm22", named_instance("complete", 4), 2, "bracket"))
    assert row.verdict in (PASS, INCONCLUSIVE)
    assert row.value_lo <= row.value_hi


@pytest.mark.parametrize("args", [
    ("newpath", named_instance("cycle", 4), 1),
    ("prop_star3", named_instance("star", 3), 4),
    ("thm24", named_instance("path", 3), 8),
    ("thm26", named_instance("path", 3), 6),
    ("girth_scale", named_instance("path", 4), 2),
    ("nosuch", named_instance("path", 4), 2),
])
def test_spec_rejected(args):
    with pytest.raises(CheckSpecError):
        CheckSpec(*args)


def test_formula_mode_restricted():
    with pytest.raises(CheckSpecError):
        CheckSpec("thm22", named_instance("path", 3), 2, "formula")
    with pytest.raises(CheckSpecError):
        CheckSpec("thm24", named_instance("cycle", 3), 9, "formula")


def test_load_config():
    cfg = load_config("seed = 7\npaths = 2..5\ncycles = none\nbudget_nodes = 1000  # small\nhunt = yes\n")
    assert cfg.seed == 7 and cfg.paths == (2, 5) and cfg.cycles == (1, 0)
    assert cfg.budget_nodes == 1000 and cfg.hunt is True


@pytest.mark.parametrize("text", [
    "bogus = 1\n", "seed = x\n", "budget_nodes = 0\n", "theorems = thm22, nope\n", "paths = 2..x\n", "not a line\n",
])
def test_load_config_errors(text):
    with pytest.raises(ConfigError):
        load_config(text)


def _small_cfg(**kw):
    base = dict(paths=(2, 6), cycles=(3, 5), stars=(3, 3), complete=(3, 3), random_count=2,
                random_n=(4, 5), k_range=(2, 3), k_high=(9, 9), closed_form_m=(1, 2), sub_max_n=16)
    base.update(kw)
    return SuiteConfig(**base)


def test_empty_report_json():
    obj = json.loads(emit_report(Report({"seed": 1}, []), "json"))
    assert obj["rows"] == [] and obj["meta"]["seed"] == 1


def test_one_row_csv():
    text = emit_report(Report({}, [Row("path-03", "newpath", 3, 2, 1, 3, value_lo=2, value_hi=2)]), "csv")
    assert len(text.strip().splitlines()) == 2


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_report_round_trip(fmt):
    r = run_suite(_small_cfg())
    assert parse_report(emit_report(r, fmt), fmt).rows == r.rows


def test_suite_deterministic_and_recomputable():
    cfg = _small_cfg(hunt=True)
    a, b = emit_report(run_suite(cfg)), emit_report(run_suite(cfg))
    assert a == b
    for row in parse_report(a).rows:
        assert decide_verdict(row) == row.verdict


def test_suite_parallel_matches_serial():
    cfg = _small_cfg()
    assert emit_report(run_suite(cfg, jobs=2)) == emit_report(run_suite(cfg, jobs=1))


def test_path_only_suite_flags_formula_exceptions():
    cfg = _small_cfg(paths=(2, 16), cycles=(1, 0), stars=(1, 0), complete=(1, 0), random_count=0,
                     theorems=("newpath",), closed_form_m=(1, 0))
    rows = run_suite(cfg).rows
    assert len(rows) == 15
    failing = sorted(r.n for r in rows if r.verdict == FAIL)
    assert failing == [9, 10, 11, 14]


def test_fail_rows_reproduce():
    r = run_suite(_small_cfg(paths=(9, 10), theorems=("newpath",)))
    for row in r.failures():
        exact = exact_tdc(generate("path", row.n)).value
        assert exact == row.value_lo and not (row.bound_lo <= exact <= row.bound_hi)


@settings(max_examples=60)
@given(
    lo=st.integers(1, 20), width=st.integers(0, 5),
    blo=st.one_of(st.none(), st.integers(1, 25)), bhi=st.one_of(st.none(), st.integers(1, 25)),
)
def test_bracket_rows_never_fail(lo, width, blo, bhi):
    row = Row("x", "thm22", 3, 2, 2, 5, value_lo=lo, value_hi=lo + width, bound_lo=blo, bound_hi=bhi,
              exact=int(width == 0))
    v = decide_verdict(row)
    if width:
        assert v != FAIL
