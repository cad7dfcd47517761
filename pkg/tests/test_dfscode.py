import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphmine.dfscode import (
    DFSCode,
    EdgeTuple,
    code_less,
    code_less_than_min,
    code_to_graph,
    is_min,
    min_dfs_code,
    rightmost_path,
    tuple_less,
)
from graphmine.graphs import LabeledGraph

from conftest import (
    CG1,
    CG2,
    P1,
    P2,
    all_dfs_codes,
    brute_min_code,
    connected_labeled_graphs,
    extension_family,
    random_code_walk,
)


def graph_of(code) -> LabeledGraph:
    return code_to_graph(code)


def test_edge_tuple_direction_flags():
    assert EdgeTuple(0, 1, 0, 0, 1).is_forward
    assert not EdgeTuple(0, 1, 0, 0, 1).is_backward
    assert EdgeTuple(3, 0, 4, 4, 0).is_backward


def test_dfscode_normalizes_plain_tuples():
    c = DFSCode([(0, 1, 2, 3, 4)])
    assert isinstance(c[0], EdgeTuple)
    assert c.vertex_count == 2


def test_rightmost_path_of_sample_pattern():
    # Path from root to the last-discovered vertex: 0 -> 1 -> 3.
    assert list(rightmost_path(P1).vertices) == [0, 1, 3]
    assert list(rightmost_path(P2).vertices) == [0, 2]


def test_code_to_graph_round_trip():
    g = graph_of(P1)
    assert g.vertex_count == 4 and g.edge_count == 4
    assert g.vlabels == [0, 1, 2, 4]
    assert min_dfs_code(g) == list(P1)


def test_min_dfs_code_on_sample_patterns():
    for code in (P1, P2, CG1, CG2):
        assert is_min(code)
        assert min_dfs_code(graph_of(code)) == list(code)


def test_min_dfs_code_requires_edges():
    g = LabeledGraph()
    g.add_vertex(0)
    with pytest.raises(ValueError):
        min_dfs_code(g)


def test_non_minimal_code_detected():
    # The same 4-edge pattern written starting from its d-edge branch.
    other = DFSCode([(0, 1, 0, 0, 1), (1, 2, 1, 3, 4), (2, 0, 4, 4, 0), (1, 3, 1, 1, 2)])
    assert graph_of(other).edge_count == 4
    assert not is_min(other)


def test_canonical_form_matches_brute_force():
    # Exhaustive: every connected labeled graph with <= 4 edges over a
    # 2x2 label alphabet.
    checked = 0
    for g in connected_labeled_graphs(max_edges=4, n_vlabels=2, n_elabels=2):
        expected = brute_min_code(g)
        got = tuple(map(tuple, min_dfs_code(g)))
        assert got == expected, f"min code mismatch on {g.vlabels} {g.edges}"
        checked += 1
    assert checked > 10000


def test_is_min_agrees_with_brute_force_on_small_graphs():
    # All valid DFS codes of all connected graphs with <= 3 edges: is_min
    # accepts exactly the brute-force minimum.
    for g in connected_labeled_graphs(max_edges=3, n_vlabels=2, n_elabels=2):
        codes = all_dfs_codes(g)
        expected = brute_min_code(g)
        for c in codes:
            assert is_min(DFSCode(c)) == (c == expected)


def test_min_code_is_permutation_invariant():
    rng = random.Random(7)
    for g in list(connected_labeled_graphs(max_edges=3, n_vlabels=2, n_elabels=2))[::17]:
        perm = list(range(g.vertex_count))
        rng.shuffle(perm)
        h = LabeledGraph()
        for i in range(g.vertex_count):
            h.add_vertex(0)
        for old, new in enumerate(perm):
            h.vlabels[new] = g.vlabels[old]
        for u, v, lbl in g.edges:
            h.add_edge(perm[u], perm[v], lbl)
        assert min_dfs_code(g) == min_dfs_code(h)


def test_code_less_than_min_three_outcomes():
    # Less, equal-prefix (exhausted stream), and greater.
    g_cg1 = graph_of(CG1)
    assert not code_less_than_min(CG1, g_cg1)  # equal is not less
    smaller = DFSCode([(0, 1, 0, 0, 1), (1, 2, 1, 1, 0), (0, 3, 0, 1, 2)])
    assert code_less_than_min(smaller, g_cg1)
    bigger = DFSCode([(0, 1, 0, 0, 1), (1, 2, 1, 2, 0), (0, 3, 0, 2, 2)])
    assert not code_less_than_min(bigger, g_cg1)
    # A proper prefix of the minimum counts as less.
    assert code_less_than_min(DFSCode(list(CG1)[:2]), g_cg1)


# The tuple order is defined over tuples that can extend one common code
# position: backward tuples share the right-most vertex and determined
# endpoint labels, forward tuples target the next fresh id. Law inputs are
# drawn from such families.
def test_tuple_less_strict_total_order_laws():
    rng = random.Random(11)
    for _ in range(10_000):
        draw = extension_family(rng)
        a, b, c = draw(), draw(), draw()
        assert not tuple_less(a, a)  # irreflexive
        assert not (tuple_less(a, b) and tuple_less(b, a))  # asymmetric
        if tuple_less(a, b) and tuple_less(b, c):
            assert tuple_less(a, c)  # transitive
        if a != b:
            assert tuple_less(a, b) or tuple_less(b, a)  # total


def test_code_less_strict_total_order_laws():
    rng = random.Random(13)
    for _ in range(10_000):
        a = random_code_walk(rng)
        # b shares a random prefix of a, so any divergence point compares
        # extensions of one common code.
        cut = rng.randint(0, len(a))
        b = random_code_walk(rng, prefix=a[:cut]) if cut else random_code_walk(rng)
        assert not code_less(a, a)
        assert not (code_less(a, b) and code_less(b, a))
        if a != b:
            assert code_less(a, b) or code_less(b, a)
        if len(a) > 1:
            assert code_less(a[:-1], a)  # proper prefix sorts first


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=300, deadline=None)
def test_code_less_laws_hypothesis(seed):
    rng = random.Random(seed)
    a = random_code_walk(rng)
    cut = rng.randint(0, len(a))
    b = random_code_walk(rng, prefix=a[:cut]) if cut else random_code_walk(rng)
    c = random_code_walk(rng, prefix=a[: rng.randint(0, len(a))])
    assert (a == b) or code_less(a, b) or code_less(b, a)
    if code_less(a, b):
        assert not code_less(b, a)
    if code_less(a, b) and code_less(b, c):
        assert code_less(a, c)
