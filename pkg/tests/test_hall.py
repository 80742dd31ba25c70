import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_assignment, hall_condition_holds
from strongcolor.errors import BudgetExhausted
from strongcolor.hall import extendable, find_sdr, hall_violated

families = st.lists(st.frozensets(st.integers(1, 5), max_size=5), max_size=5)


def test_sdr_examples():
    assert find_sdr([{1, 2}, {2, 3}, {1, 3}]).representatives == (1, 2, 3)
    res = find_sdr([{1}, {1}])
    assert not res.found and res.violator == (0, 1)
    res = find_sdr([{1, 2}, {1, 2}, {1, 2}])
    assert res.violator == (0, 1, 2)


def test_sdr_empty_family():
    res = find_sdr([])
    assert res.found and res.representatives == ()


def test_sdr_empty_set_is_violator():
    res = find_sdr([{1}, set()])
    assert res.violator == (1,)


@settings(max_examples=400)
@given(families)
def test_sdr_agrees_with_hall(family):
    res = find_sdr(family)
    assert res.found == hall_condition_holds(family)
    if res.found:
        reps = res.representatives
        assert len(set(reps)) == len(reps)
        assert all(x in a for x, a in zip(reps, family))
    else:
        assert hall_violated(family, res.violator)


@given(families)
def test_sdr_deterministic(family):
    assert find_sdr(family) == find_sdr([set(a) for a in family])


@given(st.lists(st.integers(0, 4), min_size=1, max_size=6))
def test_increasing_sizes_imply_sdr(extra):
    # sorted sizes with |A_(i)| >= i always admit representatives
    rng = random.Random(sum(extra))
    sizes = sorted(i + 1 + e for i, e in enumerate(sorted(extra)))
    family = [set(rng.sample(range(1, 20), s)) for s in sizes]
    rng.shuffle(family)
    assert find_sdr(family).found


def test_extendable_examples():
    assert extendable([{1}, {1}], [(0, 1)]) is None
    assert extendable([{1, 2}] * 3, [(0, 1), (0, 2), (1, 2)]) is None
    assert extendable([{5}, {5}, {5}], []) == [5, 5, 5]


def test_extendable_allows_equal_colours_on_free_pairs():
    got = extendable([{1}, {1, 2}, {1}], [(0, 1), (1, 2)])
    assert got == [1, 2, 1]


def test_extendable_out_of_range():
    with pytest.raises(IndexError):
        extendable([{1}], [(0, 1)])


def test_extendable_budget():
    lists = [set(range(1, 5))] * 5
    clique = list(combinations(range(5), 2))
    with pytest.raises(BudgetExhausted):
        extendable(lists, clique, node_budget=10)
    assert extendable(lists, clique) is None


instance = st.integers(1, 6).flatmap(
    lambda n: st.tuples(
        st.lists(st.frozensets(st.integers(1, 6), min_size=0, max_size=4), min_size=n, max_size=n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=12),
    )
)


@settings(max_examples=400)
@given(instance)
def test_extendable_agrees_with_enumeration(inst):
    lists, conflicts = inst
    conflicts = [(i, j) for i, j in conflicts if i != j]
    got = extendable(lists, conflicts)
    want = brute_assignment(lists, conflicts)
    assert (got is None) == (want is None)
    if got is not None:
        assert all(x in a for x, a in zip(got, lists))
        assert all(got[i] != got[j] for i, j in conflicts)


@given(families)
def test_extendable_on_clique_matches_sdr(family):
    clique = list(combinations(range(len(family)), 2))
    assert (extendable(family, clique) is not None) == find_sdr(family).found
