import random

import pytest
from hypothesis import given, strategies as st

from tdcolor.coloring import (
    Coloring,
    ColoringError,
    IsolatedVertexError,
    dominated_class,
    is_proper,
    is_td_coloring,
    is_total_dominating_set,
)
from tdcolor.graph import Graph, VertexSet, generate

from conftest import connected_graphs

P3, P4, P5 = generate("path", 3), generate("path", 4), generate("path", 5)


def test_normalization_keeps_order():
    c = Coloring([5, 9, 5, 7])
    assert c.assignment == (1, 3, 1, 2)
    assert c.lam == 3
    assert c.color_class(1) == {0, 2}
    assert Coloring([1, 3, 4, 2, 1, 5, 6, 2]).assignment == (1, 3, 4, 2, 1, 5, 6, 2)


def test_is_proper_examples():
    assert is_proper(P4, Coloring([1, 2, 3, 1]))
    assert not is_proper(generate("path", 2), Coloring([1, 1]))
    assert is_proper(generate("cycle", 3), Coloring([1, 2, 3]))
    with pytest.raises(ColoringError):
        is_proper(P4, Coloring([1, 2, 1]))


def test_dominated_class_examples():
    assert dominated_class(P3, Coloring([1, 2, 1]), 1) == 1
    assert dominated_class(P4, Coloring([1, 2, 3, 1]), 0) == 2
    assert dominated_class(P4, Coloring([1, 2, 1, 2]), 0) is None


def test_is_td_coloring_examples():
    c = Coloring([1, 2, 3, 1])
    assert is_td_coloring(P4, c) and c.lam == 3
    c = Coloring([1, 2, 1])
    assert is_td_coloring(P3, c) and c.lam == 2
    assert not is_td_coloring(P5, Coloring([1, 2, 1, 3, 1]))


def test_td_rejects_isolated_vertex():
    g = Graph(3, [(0, 1)])
    with pytest.raises(IsolatedVertexError):
        is_td_coloring(g, Coloring([1, 2, 3]))


def test_total_dominating_set_examples():
    assert is_total_dominating_set(P4, VertexSet(P4, [1, 2]))
    assert not is_total_dominating_set(P4, VertexSet(P4, [0]))
    c4 = generate("cycle", 4)
    assert is_total_dominating_set(c4, VertexSet(c4, [0, 1]))


def _random_proper(g, rng):
    colors = [0] * g.n
    for v in range(g.n):
        used = {colors[w] for w in g.neighbors(v)}
        choices = [c for c in range(1, g.n + 2) if c not in used]
        colors[v] = rng.choice(choices)
    return Coloring(colors)


@given(connected_graphs(), st.integers(0, 10**6))
def test_own_class_never_dominated(g, seed):
    c = _random_proper(g, random.Random(seed))
    for v in range(g.n):
        own = c.color(v)
        assert not c.color_class(own) <= g.neighbors(v)
        i = dominated_class(g, c, v)
        assert i is None or i != own


@given(connected_graphs(), st.integers(0, 10**6))
def test_td_needs_two_colors(g, seed):
    c = _random_proper(g, random.Random(seed))
    if g.m and is_td_coloring(g, c):
        assert c.lam >= 2


@given(connected_graphs(), st.integers(0, 10**6), st.permutations(range(12)))
def test_verdicts_invariant_under_color_permutation(g, seed, perm):
    c = _random_proper(g, random.Random(seed))
    permuted = Coloring([perm[x - 1] for x in c.assignment])
    assert is_proper(g, permuted) == is_proper(g, c)
    assert is_td_coloring(g, permuted) == is_td_coloring(g, c)
