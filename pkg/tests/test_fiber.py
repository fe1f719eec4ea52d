import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from families import BOWTIE, C4, C6_EVEN_CHORD, K4, K23, G, atlas
from toric_ci.binomial import Binomial
from toric_ci.fiber import (
    OracleBudgetExceeded,
    enumerate_fiber,
    fiber_by_common_factor,
    fiber_under_moves,
    graver_bruteforce,
    markov_mu,
    minimality_oracle,
    mixed_dominating_pair_check,
    recount_mu,
)
from toric_ci.graph_model import Graph
from toric_ci.walks import binomial_of_walk, make_walk


def test_fiber_examples():
    assert enumerate_fiber(C4, (1, 1, 1, 1)) == [(0, 1, 1, 0), (1, 0, 0, 1)]
    assert len(enumerate_fiber(K4, (1, 1, 1, 1))) == 3
    assert enumerate_fiber(C4, (1, 0, 0, 0)) == []
    for u in enumerate_fiber(K4, (2, 2, 2, 2)):
        assert K4.g_degree(u) == (2, 2, 2, 2)


def test_graver_examples():
    assert [str(b) for b in graver_bruteforce(C4, 4)] == ["e1*e4 - e2*e3"]
    assert len(graver_bruteforce(K4, 6)) == 3
    (b,) = graver_bruteforce(BOWTIE, 6)
    assert b.total_degree == 3
    with pytest.raises(ValueError):
        graver_bruteforce(C4, 0)


def test_markov_examples():
    assert markov_mu(C4).mu == 1
    r = markov_mu(K4)
    assert r.mu == 2 and list(r.per_degree.values()) == [2]
    r = markov_mu(K23)
    assert r.mu == 3 and len(r.per_degree) == 3
    assert list(r.to_json()) == ["mu", "per_degree", "generators"]
    for b in r.generators:
        assert K23.g_degree(b.plus) == K23.g_degree(b.minus)


def test_markov_budget():
    big = G([(a, b) for a in range(1, 6) for b in range(a + 1, 6)] + [(5, 6), (6, 7), (7, 8)])
    with pytest.raises(OracleBudgetExceeded):
        markov_mu(big)


def test_minimality_oracle_examples():
    (b,) = graver_bruteforce(C4)
    assert minimality_oracle(C4, b)
    mk = markov_mu(K4)
    assert all(minimality_oracle(K4, b, mk) for b in graver_bruteforce(K4))
    w = make_walk(C6_EVEN_CHORD, [1, 2, 3, 4, 5, 6])
    assert not minimality_oracle(C6_EVEN_CHORD, binomial_of_walk(C6_EVEN_CHORD, w))


def test_mixed_dominating_examples():
    assert mixed_dominating_pair_check(markov_mu(C4).generators) == (True, None)
    assert mixed_dominating_pair_check(markov_mu(K4).generators) == (True, None)
    # e1*e5 - e2*e4 and e1*e3 - e2*e6 on the 4-cycle with a pendant path
    g = G([(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6)])
    mk = lambda p, q: Binomial(p, q, (0,) * g.n)  # noqa: E731  shape only
    a = mk((1, 0, 0, 0, 1, 0), (0, 1, 0, 1, 0, 0))
    b = mk((1, 0, 1, 0, 0, 0), (0, 1, 0, 0, 0, 1))
    assert mixed_dominating_pair_check([a, b]) == (False, (0, 1))


def _relabel(g, rng):
    perm = list(g.vertices)
    rng.shuffle(perm)
    return Graph.from_edges([(perm[u - 1], perm[v - 1]) for u, v in g.edges], g.n)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(atlas(6, 9)), st.integers(0, 2**16))
def test_markov_invariances(g, seed):
    r = markov_mu(g)
    assert markov_mu(g, reverse_ties=True).mu == r.mu
    assert markov_mu(_relabel(g, random.Random(seed))).mu == r.mu
    assert r.mu == sum(r.per_degree.values())
    assert recount_mu(g, r.generators, [d for d, _, _ in r.scanned]) == r.mu


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(atlas(6, 9)))
def test_common_factor_components_match_moves(g):
    graver = graver_bruteforce(g)
    for deg in sorted({b.degree for b in graver}):
        total = sum(deg) // 2
        lower = [(b.plus, b.minus) for b in graver if b.total_degree < total]
        assert fiber_by_common_factor(g, deg).components == fiber_under_moves(g, deg, lower).components


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(atlas(6, 9)))
def test_graver_degree_bound(g):
    graver = graver_bruteforce(g, g.m + 2)
    assert all(b.total_degree <= g.m for b in graver)
    assert graver == graver_bruteforce(g)
