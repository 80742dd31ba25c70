import math
import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_expand
from strongcolor.hall import extendable
from strongcolor.nullstellensatz import (
    LEMMA_C5_SIZES,
    LEMMA_C5_TARGET,
    DifferenceFactorSet,
    SparsePolynomial,
    candidate_monomials,
    cn_certificate,
    coefficient,
    conflict_pairs_to_factors,
    expand,
    lemma_c5_factors,
)


def test_conflict_pairs_to_factors_examples():
    assert conflict_pairs_to_factors([(1, 2), (3, 1), (2, 3), (2, 1)], 3).pairs == ((1, 2), (1, 3), (2, 3))
    assert conflict_pairs_to_factors([], 4).pairs == ()
    assert len(lemma_c5_factors()) == 32


def test_factor_set_validation():
    with pytest.raises(ValueError):
        DifferenceFactorSet(3, ((2, 1),))
    with pytest.raises(ValueError):
        DifferenceFactorSet(3, ((1, 2), (1, 2)))
    with pytest.raises(ValueError):
        DifferenceFactorSet(3, ((1, 4),))
    with pytest.raises(ValueError):
        conflict_pairs_to_factors([(0, 1)], 3)


def test_vandermonde_three():
    assert coefficient([(1, 2), (1, 3), (2, 3)], (2, 1, 0)) == 1
    assert coefficient([(1, 2), (1, 3), (2, 3)], (1, 1, 1)) == 0


def test_five_cycle_coefficient():
    assert coefficient(lemma_c5_factors(), LEMMA_C5_TARGET) == -6


def test_wrong_total_degree_is_zero():
    assert coefficient(lemma_c5_factors(), (4, 5, 4, 4, 3, 3, 3, 3, 2)) == 0
    assert coefficient([(1, 2)], (1, 1)) == 0


def test_exact_beyond_machine_words():
    # (x1 - x2)^70 has a middle coefficient above 2^63
    value = coefficient([(1, 2)] * 70, (35, 35))
    assert abs(value) > 2**63
    assert value == (-1) ** 35 * math.comb(70, 35)


factor_lists = st.integers(2, 5).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda p: p[0] != p[1]), max_size=10),
    )
)


@settings(max_examples=300)
@given(factor_lists)
def test_coefficient_matches_naive_expansion(data):
    n, pairs = data
    full = naive_expand(pairs, n)
    for mono, c in full.items():
        assert coefficient(pairs, mono) == c
    # a few monomials absent from the expansion
    rng = random.Random(len(pairs))
    for _ in range(3):
        mono = [0] * n
        for _ in range(len(pairs)):
            mono[rng.randrange(n)] += 1
        assert coefficient(pairs, mono) == full.get(tuple(mono), 0)


@settings(max_examples=100)
@given(factor_lists)
def test_expand_matches_naive(data):
    n, pairs = data
    assert expand(pairs, n).terms == naive_expand(pairs, n)


@settings(max_examples=200)
@given(factor_lists, st.data())
def test_antisymmetry(data, draw):
    n, pairs = data
    if not pairs:
        return
    k = draw.draw(st.integers(0, len(pairs) - 1))
    flipped = list(pairs)
    flipped[k] = (pairs[k][1], pairs[k][0])
    mono = draw.draw(st.lists(st.integers(0, len(pairs)), min_size=n, max_size=n))
    assert coefficient(flipped, mono) == -coefficient(pairs, mono)


@given(factor_lists, st.data())
def test_homogeneity(data, draw):
    n, pairs = data
    mono = draw.draw(st.lists(st.integers(0, 4), min_size=n, max_size=n))
    if sum(mono) != len(pairs):
        assert coefficient(pairs, mono) == 0


def test_sparse_polynomial_caps_and_product():
    caps = (2, 2)
    p = SparsePolynomial.one(2, caps).mul_difference(1, 2).mul_difference(1, 2)
    assert p.terms == {(2, 0): 1, (1, 1): -2, (0, 2): 1}
    q = p.mul_difference(1, 2)
    assert all(a <= 2 and b <= 2 for a, b in q.terms)
    assert q.coefficient((2, 1)) == -3
    r = SparsePolynomial(2, {(1, 0): 1, (0, 1): -1}) * SparsePolynomial(2, {(1, 0): 1, (0, 1): -1})
    assert r == SparsePolynomial(2, {(2, 0): 1, (1, 1): -2, (0, 2): 1})
    assert 0 not in r.terms.values()


def test_candidate_monomials_order():
    got = list(candidate_monomials((2, 1, 1), 2))
    assert got == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)]


def test_cn_certificate_examples():
    cert = cn_certificate((2, 1), [(1, 2)])
    assert cert is not None and cert.target == (1, 0) and cert.coefficient == 1
    assert cn_certificate((1, 1), [(1, 2)]) is None
    cert = cn_certificate(LEMMA_C5_SIZES, lemma_c5_factors())
    assert cert.target == LEMMA_C5_TARGET and cert.coefficient == -6 and cert.degree == 32
    assert cert.degree_ok


def test_cn_certificate_budget_inconclusive():
    # three mutually conflicting indices with sizes (3,3,3): a certificate
    # exists but a budget of zero candidates cannot find it
    assert cn_certificate((3, 3, 3), [(1, 2), (1, 3), (2, 3)]) is not None
    assert cn_certificate((3, 3, 3), [(1, 2), (1, 3), (2, 3)], budget=0) is None


def test_cn_certificate_rejects_bad_sizes():
    with pytest.raises(ValueError):
        cn_certificate((0, 2), [(1, 2)])


@pytest.mark.parametrize("n", [3, 4])
def test_clique_certificate_needs_sdr_sizes(n):
    clique = list(combinations(range(1, n + 1), 2))
    assert cn_certificate(tuple(range(1, n + 1)), clique) is not None
    assert cn_certificate((n - 1,) * n, clique) is None


def test_certified_sizes_are_colourable():
    sizes = LEMMA_C5_SIZES
    conflicts = [(k - 1, l - 1) for k, l in lemma_c5_factors().pairs]
    assert cn_certificate(sizes, lemma_c5_factors()) is not None
    rng = random.Random(2024)
    for _ in range(50):
        lists = [rng.sample(range(1, 16), s) for s in sizes]
        assert extendable(lists, conflicts) is not None


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.lists(st.integers(1, 4), min_size=n, max_size=n),
    st.lists(st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda p: p[0] != p[1]), max_size=8),
    st.integers(0, 2**32),
)))
def test_certificate_soundness_random(data):
    sizes, conflicts, seed = data
    cert = cn_certificate(sizes, conflicts)
    if cert is None:
        return
    assert all(k < s for k, s in zip(cert.target, sizes))
    zero_based = [(a - 1, b - 1) for a, b in conflicts]
    rng = random.Random(seed)
    for _ in range(20):
        lists = [rng.sample(range(1, 7), s) for s in sizes]
        assert extendable(lists, zero_based) is not None
