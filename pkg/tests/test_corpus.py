"""Corpus-wide checks beyond the acceptance gate."""
from itertools import combinations

import pytest

from families import atlas, to_nx
from toric_ci.analyzer import analyze_connected, decide_ci
from toric_ci.fiber import markov_mu
from toric_ci.graph_model import Graph, ideal_height, induced_subgraph, is_connected


def _labeled(n, max_m):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if len(edges) <= max_m:
            g = Graph.from_edges(edges, n)
            if is_connected(g):
                yield g


def test_labeled_graphs_up_to_five_vertices():
    import networkx as nx

    reps = {}
    for g in atlas(5, 9):
        reps.setdefault((g.n, g.m), []).append((to_nx(g), decide_ci(g)))
    count = 0
    for n in range(1, 6):
        for g in _labeled(n, 9):
            count += 1
            v = decide_ci(g)
            assert v.ci == (v.mu == ideal_height(g))
            # every labeled graph is isomorphic to an atlas graph with the same verdict
            h = to_nx(g)
            match = [r for r in reps[(g.n, g.m)] if nx.is_isomorphic(r[0], h)]
            assert len(match) == 1
            assert (match[0][1].ci, match[0][1].mu) == (v.ci, v.mu)
    # connected labeled graphs on 1..5 vertices (A001187), minus the 1 labeled K5
    assert count == 1 + 1 + 4 + 38 + 728 - 1


@pytest.mark.slow
def test_hereditary_up_to_seven_vertices():
    ci = {}

    def ci_of(h):
        key = (h.n, h.edges)
        if key not in ci:
            ci[key] = h.m == 0 or markov_mu(h).mu == ideal_height(h)
        return ci[key]

    checked = 0
    for g in atlas(7, 11):
        if not decide_ci(g).ci:
            continue
        checked += 1
        for k in range(2, g.n):
            for vs in combinations(g.vertices, k):
                h = induced_subgraph(g, vs)
                if is_connected(h):
                    assert ci_of(h), (g.edges, vs)
    assert checked > 0


def test_screen_soundness_up_to_nine_edges():
    # analyze_connected raises if a CI graph fails any necessary check, or if
    # the normality criterion disagrees with the odd cycle condition
    for g in atlas(6, 9):
        a = analyze_connected(g)
        if a.verdict.ci:
            assert a.screen.passed
