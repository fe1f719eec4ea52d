import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from families import BOWTIE, C4, C6, C6_EVEN_CHORD, DUMBBELL, K4, K23, TRI_SQUARE_ADJACENT, G, atlas
from toric_ci.binomial import Binomial, parse_binomial
from toric_ci.fiber import graver_bruteforce, markov_mu, minimality_oracle
from toric_ci.walks import (
    BudgetExceeded,
    ChordRecord,
    binomial_of_walk,
    classify_chord,
    classify_chords,
    cross_effectively,
    enumerate_graver,
    enumerate_minimal_binomials,
    f4_equivalent,
    find_F4s,
    is_circuit,
    is_minimal_binomial,
    is_primitive,
    is_strongly_primitive,
    make_walk,
    walk_from_subgraph,
    walks_on_subgraph,
)


def test_walk_from_subgraph_examples():
    w = walk_from_subgraph(C4, range(4))
    assert w.length == 4
    w = walk_from_subgraph(BOWTIE, range(6))
    assert w.length == 6 and len(w.positions(3)) == 2
    tail = G([(1, 2), (2, 3), (3, 1), (3, 4)])
    assert walk_from_subgraph(tail, range(4)) is None
    with pytest.raises(ValueError):
        walk_from_subgraph(G([(1, 2), (3, 4)]), [0, 1])


def test_binomials_of_walks():
    w = make_walk(C4, [1, 2, 3, 4])
    assert str(binomial_of_walk(C4, w)) == "e1*e4 - e2*e3"
    b = binomial_of_walk(BOWTIE, walk_from_subgraph(BOWTIE, range(6)))
    assert b.total_degree == 3 and not (b.plus_support & b.minus_support)
    assert BOWTIE.g_degree(b.plus) == BOWTIE.g_degree(b.minus) == b.degree


def test_dumbbell_cut_edge_sits_on_one_side():
    # the joining edge is traversed at two positions of the same parity
    (w,) = walks_on_subgraph(DUMBBELL, range(DUMBBELL.m))
    cut = DUMBBELL.edge_index(3, 4)
    k = [i for i, e in enumerate(w.edges) if e == cut]
    assert len(k) == 2 and (k[1] - k[0]) % 2 == 0
    b = binomial_of_walk(DUMBBELL, w)
    assert str(b) == "e1*e4^2*e7 - e2*e3*e5*e6"
    assert [str(x) for x in graver_bruteforce(DUMBBELL)] == [str(b)]


def test_classify_chord_examples():
    w = make_walk(K4, [1, 2, 4, 3])
    rec = classify_chord(K4, w, K4.edge_index(1, 4))
    assert rec.kind == "odd" and (rec.s, rec.j) == (1, 3)
    w = make_walk(C6_EVEN_CHORD, [1, 2, 3, 4, 5, 6])
    assert classify_chord(C6_EVEN_CHORD, w, C6_EVEN_CHORD.edge_index(1, 4)).kind == "even"
    g = G(list(BOWTIE.edges) + [(1, 5)])
    w = walk_from_subgraph(g, [g.edge_index(*e) for e in BOWTIE.edges])
    assert classify_chord(g, w, g.edge_index(1, 5)).kind == "bridge"
    with pytest.raises(ValueError):
        classify_chord(C4, make_walk(C4, [1, 2, 3, 4]), 0)


def test_cross_effectively_examples():
    w = make_walk(K4, [1, 2, 4, 3])
    f, f2 = classify_chords(K4, w)
    assert cross_effectively(f, f2) and cross_effectively(f2, f)
    assert not cross_effectively(ChordRecord(0, "odd", 1, 3), ChordRecord(1, "odd", 4, 6))
    assert not cross_effectively(f, f)
    with pytest.raises(ValueError):
        cross_effectively(f, ChordRecord(9, "even", 1, 4))


def test_find_f4s():
    # the 4-cycle 1-2-4-3 has chords {1,4} and {2,3}; both odd-position and
    # both even-position edge pairs close a 4-cycle with them
    w = make_walk(K4, [1, 2, 4, 3])
    recs = find_F4s(K4, w)
    assert len(recs) == 2
    assert {r.chords for r in recs} == {(K4.edge_index(1, 4), K4.edge_index(2, 3))}
    assert {frozenset(r.walk_edges) for r in recs} == {w.plus_edges, w.minus_edges}
    assert find_F4s(C6, make_walk(C6, [1, 2, 3, 4, 5, 6])) == []
    assert find_F4s(C4, make_walk(C4, [1, 2, 3, 4])) == []


def test_primitive_examples():
    assert is_primitive(C4, make_walk(C4, [1, 2, 3, 4]))[0]
    assert is_primitive(BOWTIE, walk_from_subgraph(BOWTIE, range(6)))[0]
    ok, why = is_primitive(C4, make_walk(C4, [1, 2, 3, 4, 1, 2, 3, 4], canonical=False))
    assert not ok and why


def test_strongly_primitive_examples():
    assert is_strongly_primitive(BOWTIE, walk_from_subgraph(BOWTIE, range(6)))
    assert is_strongly_primitive(C4, make_walk(C4, [1, 2, 3, 4]))
    g = TRI_SQUARE_ADJACENT
    (w,) = walks_on_subgraph(g, range(g.m))
    assert is_primitive(g, w)[0]
    assert not is_strongly_primitive(g, w)
    with pytest.raises(ValueError):
        is_strongly_primitive(C4, make_walk(C4, [1, 2, 3, 4, 1, 2, 3, 4], canonical=False))


def test_circuit_examples():
    assert is_circuit(C4, make_walk(C4, [1, 2, 3, 4])) == (True, 1)
    assert is_circuit(BOWTIE, walk_from_subgraph(BOWTIE, range(6))) == (True, 2)
    assert is_circuit(DUMBBELL, walk_from_subgraph(DUMBBELL, range(7))) == (True, 3)
    g = TRI_SQUARE_ADJACENT
    (w,) = walks_on_subgraph(g, range(g.m))
    assert is_circuit(g, w) == (False, None)


def test_minimal_binomial_examples():
    assert is_minimal_binomial(C4, make_walk(C4, [1, 2, 3, 4]))[0]
    for w, _ in enumerate_graver(K4):
        assert is_minimal_binomial(K4, w)[0]
    ok, why = is_minimal_binomial(C6_EVEN_CHORD, make_walk(C6_EVEN_CHORD, [1, 2, 3, 4, 5, 6]))
    assert not ok and any("even chord" in r for r in why)


def test_f4_equivalence():
    a = make_walk(K4, [1, 2, 4, 3])
    b = make_walk(K4, [1, 2, 3, 4])
    assert f4_equivalent(K4, a, a)
    assert f4_equivalent(K4, a, b)
    g = G([(1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7), (7, 8), (8, 5), (4, 5)])
    assert not f4_equivalent(g, make_walk(g, [1, 2, 3, 4]), make_walk(g, [5, 6, 7, 8]))


def test_graver_counts():
    assert len(enumerate_graver(C4)) == 1
    assert len(enumerate_graver(K4)) == 3
    assert len(enumerate_graver(BOWTIE)) == 1
    mins = enumerate_minimal_binomials(K4)
    assert len(mins) == 3 and len({b.degree for _, b in mins}) == 1
    mins = enumerate_minimal_binomials(K23)
    assert len(mins) == 3 and len({b.degree for _, b in mins}) == 3
    assert len(enumerate_minimal_binomials(C4)) == 1


def test_graver_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_graver(C6, budget_edges=5)


def test_binomial_text_round_trip():
    for w, b in enumerate_graver(DUMBBELL) + enumerate_graver(K4):
        g = DUMBBELL if len(b.plus) == DUMBBELL.m else K4
        u, v = parse_binomial(str(b), g.m)
        assert Binomial.from_pair(g, u, v) == b


def _rotations(g, w):
    vs = w.vertices
    n = len(vs)
    rev = (vs[0],) + tuple(reversed(vs[1:]))
    return [make_walk(g, seq[k:] + seq[:k], canonical=False) for seq in (vs, rev) for k in range(n)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(atlas(6, 9)))
def test_orientation_invariance(g):
    for w, b in enumerate_graver(g):
        ref_chords = sorted((c.edge, c.kind) for c in classify_chords(g, w))
        ref_min = is_minimal_binomial(g, w)[0]
        ref_sp = is_strongly_primitive(g, w)
        for r in _rotations(g, w):
            assert binomial_of_walk(g, r) == b
            assert is_primitive(g, r)[0]
            assert sorted((c.edge, c.kind) for c in classify_chords(g, r)) == ref_chords
            assert is_minimal_binomial(g, r)[0] == ref_min
            assert is_strongly_primitive(g, r) == ref_sp


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(atlas(6, 9)))
def test_containment_chain(g):
    graver = enumerate_graver(g)
    mk = markov_mu(g, [b for _, b in graver])
    for w, b in graver:
        assert g.g_degree(b.plus) == g.g_degree(b.minus)
        assert is_primitive(g, w)[0]
        if is_minimal_binomial(g, w)[0]:
            assert minimality_oracle(g, b, mk)
