import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from families import BOWTIE, C3, C4, G, K4, to_nx
from toric_ci.graph_model import (
    DisconnectedGraphError,
    Graph,
    GraphFormatError,
    connected_components,
    ideal_height,
    induced_subgraph,
    is_bipartite,
    parse_edge_list,
    parse_json_graph,
    serialize_edge_list,
    serialize_json_graph,
)


def test_parse_c4():
    g = parse_edge_list("1 2\n2 3\n3 4\n4 1")
    assert (g.n, g.m) == (4, 4)
    assert g.edges == ((1, 2), (1, 4), (2, 3), (3, 4))


def test_parse_relabels_by_first_appearance():
    g = parse_edge_list("10 7\n7 3\n# comment\n\n3 10  # trailing\n")
    assert g == Graph.from_edges([(1, 2), (2, 3), (3, 1)])


def test_parse_header_adds_isolated_vertices():
    g = parse_edge_list("n 5\n1 2\n")
    assert (g.n, g.m) == (5, 1)


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("1 2\n1 2", 2, "duplicate"),
        ("1 2\n2 1", 2, "duplicate"),
        ("1 1", 1, "loop"),
        ("1 2\n2 x", 2, "non-integer"),
        ("1 2 3", 1, "expected"),
    ],
)
def test_parse_errors_name_the_line(text, line, fragment):
    with pytest.raises(GraphFormatError) as exc:
        parse_edge_list(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_json_format():
    g = parse_json_graph('{"n": 4, "edges": [[1, 2], [2, 3], [3, 4], [4, 1]]}')
    assert g == C4
    assert parse_json_graph(serialize_json_graph(g)) == g
    with pytest.raises(GraphFormatError):
        parse_json_graph('{"edges": [[1, 1]]}')
    with pytest.raises(GraphFormatError):
        parse_json_graph("[1, 2]")


def test_components():
    assert [vs for _, vs in connected_components(C4)] == [(1, 2, 3, 4)]
    g = G([(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 7), (7, 4)])
    comps = connected_components(g)
    assert [vs for _, vs in comps] == [(1, 2, 3), (4, 5, 6, 7)]
    assert comps[0][0] == C3 and comps[1][0] == C4
    assert [h.n for h, _ in connected_components(Graph(3, ()))] == [1, 1, 1]


def test_bipartite():
    ok, colors = is_bipartite(C4)
    assert ok and colors[0] != colors[1]
    ok, cyc = is_bipartite(C3)
    assert not ok and sorted(cyc) == [1, 2, 3]
    assert not is_bipartite(BOWTIE)[0]


def test_height():
    assert ideal_height(C4) == 1
    assert ideal_height(C3) == 0
    assert ideal_height(K4) == 2
    with pytest.raises(DisconnectedGraphError):
        ideal_height(Graph(2, ()))


def test_induced_subgraph():
    assert induced_subgraph(K4, [1, 2, 3]) == C3
    assert induced_subgraph(C4, [1, 2]).m == 1
    opp = induced_subgraph(C4, [1, 3])
    assert (opp.n, opp.m) == (2, 0)
    with pytest.raises(ValueError):
        induced_subgraph(C4, [5])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(chosen, n)


@given(graphs())
def test_round_trip(g):
    assert parse_edge_list(serialize_edge_list(g)) == g
    assert parse_json_graph(serialize_json_graph(g)) == g


@given(graphs(), st.data())
def test_g_degree_sum(g, data):
    exps = data.draw(st.lists(st.integers(0, 4), min_size=g.m, max_size=g.m))
    deg = g.g_degree(exps)
    assert sum(deg) == 2 * sum(exps)


@settings(max_examples=60)
@given(graphs())
def test_bipartite_matches_networkx(g):
    import networkx as nx

    assert is_bipartite(g)[0] == nx.is_bipartite(to_nx(g))
    ok, wit = is_bipartite(g)
    if not ok:
        assert len(wit) % 2 == 1
        assert all(g.has_edge(a, b) for a, b in zip(wit, wit[1:] + wit[:1]))
