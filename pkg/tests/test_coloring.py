import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import girth6_cubic_hosts, small_graphs
from oracles import brute_strong_colorable
from strongcolor import generators as gen
from strongcolor.coloring import (
    as_lists,
    available_colors,
    construct_coloring,
    exact_list_color,
    format_coloring,
    format_lists,
    greedy_far_to_near,
    neighbourhood_edges,
    parse_coloring,
    parse_lists,
    random_lists,
    respects_lists,
    strong_chromatic_index,
    strong_list_color_10_planar,
    strong_list_color_11,
    uniform_lists,
    verify,
)
from strongcolor.errors import BudgetExhausted, ParseError, PreconditionError, PremiseViolated
from strongcolor.graph import Graph, see_relation


def colouring(values):
    return dict(enumerate(values))


def test_verify_examples():
    c5 = gen.cycle(5)
    assert verify(c5, colouring([1, 2, 3, 4, 5])).valid
    res = verify(c5, colouring([1, 2, 3, 1, 2]))
    assert not res.valid
    assert (0, 3) in res.violations
    assert res.violations == sorted(res.violations)
    assert verify(gen.cycle(6), colouring([1, 2, 3, 1, 2, 3])).valid


def test_verify_partial():
    assert verify(gen.cycle(5), {0: 1, 2: 2}).valid


def test_available_colors_examples():
    c5 = gen.cycle(5)
    lists = uniform_lists(c5, 5)
    assert available_colors(c5, lists, {}, 0) == frozenset(range(1, 6))
    assert available_colors(c5, lists, {1: 1, 2: 2, 3: 3, 4: 4}, 0) == {5}
    far = Graph.from_edges(6, [(0, 1), (4, 5)])
    assert available_colors(far, [{1, 2}, {1, 2}], {1: 1}, 0) == {1, 2}
    with pytest.raises(PreconditionError):
        available_colors(c5, lists, {0: 1}, 0)


def test_exact_list_color_examples():
    c5 = gen.cycle(5)
    found = exact_list_color(c5, uniform_lists(c5, 5))
    assert verify(c5, found).valid
    assert exact_list_color(c5, uniform_lists(c5, 4)) is None
    single = Graph.from_edges(2, [(0, 1)])
    assert exact_list_color(single, [{7}]) == {0: 7}


def test_exact_list_color_budget_is_distinct_from_none():
    g = gen.complete_bipartite(3, 3)
    with pytest.raises(BudgetExhausted):
        exact_list_color(g, uniform_lists(g, 8), node_budget=50)


@pytest.mark.parametrize(
    "name, expected", [("c5", 5), ("c6", 3), ("k4", 6), ("k33", 9), ("petersen", 5), ("cube", 6)]
)
def test_strong_chromatic_index_builtins(name, expected):
    g = gen.builtin_graph(name)
    assert strong_chromatic_index(g) == expected


@pytest.mark.parametrize("name, k", [("c5", 5), ("c6", 3), ("k4", 6)])
def test_strong_chromatic_index_brute_force(name, k):
    g = gen.builtin_graph(name)
    assert brute_strong_colorable(g, k)
    assert not brute_strong_colorable(g, k - 1)


def test_heawood_pappus_hex():
    assert strong_chromatic_index(gen.heawood()) == 7
    assert strong_chromatic_index(gen.pappus()) == 6
    assert strong_chromatic_index(gen.hex_grid(2, 2)) == 5


def test_hint_exceeded():
    with pytest.raises(ValueError):
        strong_chromatic_index(gen.complete(4), upper_bound_hint=5)


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=7).filter(lambda g: 1 <= g.edge_count <= 8))
def test_list_solver_consistent_with_index(g):
    chi = strong_chromatic_index(g)
    assert brute_strong_colorable(g, chi)
    assert exact_list_color(g, uniform_lists(g, chi)) is not None
    assert exact_list_color(g, uniform_lists(g, chi - 1)) is None


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=8, max_degree=3).filter(lambda g: g.edge_count >= 1), st.data())
def test_monotone_under_edge_deletion(g, data):
    drop = data.draw(st.sets(st.integers(0, g.edge_count - 1)))
    sub = gen.delete_edges(g, drop)
    if sub.edge_count:
        assert strong_chromatic_index(sub) <= strong_chromatic_index(g)


# --- far-to-near greedy -------------------------------------------------------


def test_greedy_heawood_designated_precolouring():
    g = gen.heawood()
    lists = uniform_lists(g, 11)
    _, outer = neighbourhood_edges(g, 0)
    pre = {outer[0][0]: 1, outer[1][0]: 2, outer[2][0]: 3}
    result = greedy_far_to_near(g, 0, pre, lists)
    assert set(result) == set(range(g.edge_count)) - set(g.incidence[0])
    assert verify(g, result).valid
    assert all(result[e] == c for e, c in pre.items())


def test_greedy_random_precolourings():
    g = gen.heawood()
    rng = random.Random(7)
    for trial in range(100):
        lists = random_lists(g, 11, 33, seed=trial)
        v = rng.randrange(g.vertex_count)
        _, outer = neighbourhood_edges(g, v)
        pre = {}
        for pair in outer:
            e = pair[rng.randrange(2)]
            pre[e] = rng.choice(sorted(lists[e]))
        conf = see_relation(g)
        if not verify(g, pre, conf).valid:
            continue
        result = greedy_far_to_near(g, v, pre, lists)
        assert verify(g, result).valid and respects_lists(result, lists)
        assert len(result) == g.edge_count - 3


def test_greedy_preconditions():
    with pytest.raises(PreconditionError):
        greedy_far_to_near(gen.cycle(6), 0, {}, uniform_lists(gen.cycle(6), 11))
    with pytest.raises(PreconditionError):
        greedy_far_to_near(gen.petersen(), 0, {}, uniform_lists(gen.petersen(), 11))
    g = gen.heawood()
    with pytest.raises(PreconditionError):
        greedy_far_to_near(g, 0, {}, uniform_lists(g, 10))
    _, outer = neighbourhood_edges(g, 0)
    with pytest.raises(PreconditionError):
        greedy_far_to_near(g, 0, {outer[0][0]: 1, outer[0][1]: 2}, uniform_lists(g, 11))
    with pytest.raises(PreconditionError):
        greedy_far_to_near(g, 0, {outer[0][0]: 99}, uniform_lists(g, 11))


# --- constructive colourings --------------------------------------------------


def test_color11_examples():
    c6 = gen.cycle(6)
    col = strong_list_color_11(c6, uniform_lists(c6, 11))
    assert verify(c6, col).valid and len(col) == 6

    h = gen.heawood()
    cons = construct_coloring(h, uniform_lists(h, 11), 11)
    assert cons.kinds() == ["neighbourhood"]
    assert verify(h, cons.coloring).valid

    p = gen.petersen()
    lists = random_lists(p, 11, 33, seed=3)
    cons = construct_coloring(p, lists, 11)
    assert cons.kinds()[0] == "c5"
    assert verify(p, cons.coloring).valid and respects_lists(cons.coloring, lists)


def test_color11_rejects_short_lists_and_high_degree():
    with pytest.raises(PreconditionError):
        strong_list_color_11(gen.cycle(5), uniform_lists(gen.cycle(5), 10))
    star = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    with pytest.raises(PreconditionError):
        strong_list_color_11(star, uniform_lists(star, 11))


def test_color11_longer_lists_are_trimmed():
    g = gen.pappus()
    lists = random_lists(g, 14, 40, seed=1)
    col = strong_list_color_11(g, lists)
    assert verify(g, col).valid and respects_lists(col, lists)


@pytest.mark.parametrize("seed", range(6))
def test_color11_girth6_hosts(seed):
    (g,) = girth6_cubic_hosts(1, seed=seed)
    lists = random_lists(g, 11, 33, seed=seed)
    cons = construct_coloring(g, lists, 11)
    assert "neighbourhood" in cons.kinds()
    assert verify(g, cons.coloring).valid and respects_lists(cons.coloring, lists)


@pytest.mark.parametrize("seed", range(30))
def test_color11_random_cubic(seed):
    g = gen.random_cubic(random.Random(seed).choice(range(4, 25, 2)), seed=seed)
    lists = random_lists(g, 11, 33, seed=seed)
    col = strong_list_color_11(g, lists)
    assert len(col) == g.edge_count
    assert verify(g, col).valid and respects_lists(col, lists)


def test_color10_planar_examples():
    hg = gen.hex_grid(2, 2)
    assert verify(hg, strong_list_color_10_planar(hg, uniform_lists(hg, 10))).valid
    q3 = gen.cube()
    cons = construct_coloring(q3, uniform_lists(q3, 10), 10, planar=True)
    assert cons.kinds()[0] == "c4"
    assert verify(q3, cons.coloring).valid
    with pytest.raises(PremiseViolated, match="premise violated"):
        strong_list_color_10_planar(gen.heawood(), uniform_lists(gen.heawood(), 10))


@pytest.mark.parametrize("seed", range(20))
def test_color10_planar_random(seed):
    g = gen.random_planar_subcubic(seed=seed)
    lists = random_lists(g, 10, 30, seed=seed)
    col = strong_list_color_10_planar(g, lists)
    assert verify(g, col).valid and respects_lists(col, lists)


def test_steps_record_residual_edges():
    g = gen.petersen()
    cons = construct_coloring(g, uniform_lists(g, 11), 11)
    covered = sorted(e for s in cons.steps for e in s.residual)
    assert covered == list(range(g.edge_count))


# --- serialisation ------------------------------------------------------------


@given(st.lists(st.frozensets(st.integers(0, 50), max_size=6), max_size=8))
def test_lists_round_trip(lists):
    text = format_lists(lists)
    assert parse_lists(text) == list(lists)
    assert format_lists(parse_lists(text)) == text


@given(st.dictionaries(st.integers(0, 30), st.integers(0, 100)))
def test_coloring_round_trip(c):
    text = format_coloring(c)
    assert parse_coloring(text) == c
    assert format_coloring(parse_coloring(text)) == text


@pytest.mark.parametrize("text", ["0 1 2\n", "0: 1 1\n", "1: 2\n", "0: 1\n0: 2\n", "x: 1\n"])
def test_parse_lists_errors(text):
    with pytest.raises(ParseError):
        parse_lists(text)


def test_as_lists_length_check():
    with pytest.raises(PreconditionError):
        as_lists(gen.cycle(5), [{1}] * 4)
