"""Named graphs and the small-graph corpus shared by the tests."""
from functools import lru_cache

from toric_ci.graph_model import Graph


def G(edges, n=None):
    return Graph.from_edges(edges, n)


def cycle(k, start=1):
    vs = list(range(start, start + k))
    return [(vs[i], vs[(i + 1) % k]) for i in range(k)]


C3 = G(cycle(3))
C4 = G(cycle(4))
C6 = G(cycle(6))
K4 = G([(a, b) for a in range(1, 5) for b in range(a + 1, 5)])
K23 = G([(a, b) for a in (1, 2) for b in (3, 4, 5)])
K33 = G([(a, b) for a in (1, 2, 3) for b in (4, 5, 6)])
BOWTIE = G([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)])
# two triangles joined by one edge (3-4)
DUMBBELL = G([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)])
# two triangles joined by the path 3-7-4
TRIANGLES_PATH2 = G([(1, 2), (2, 3), (3, 1), (3, 7), (7, 4), (4, 5), (5, 6), (6, 4)])
THREE_TRIANGLES = G([(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 1), (1, 6), (6, 7), (7, 1)])
DOMINO = G([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 5)])
C6_EVEN_CHORD = G(cycle(6) + [(1, 4)])
# triangles at opposite corners 1 and 3 of the square 1-2-3-4
TRI_SQUARE_OPPOSITE = G(cycle(4) + [(1, 5), (5, 6), (6, 1), (3, 7), (7, 8), (8, 3)])
# triangles at adjacent corners 1 and 2 of the square
TRI_SQUARE_ADJACENT = G(cycle(4) + [(1, 5), (5, 6), (6, 1), (2, 7), (7, 8), (8, 2)])
PATH3 = G([(1, 2), (2, 3)])

WORKED = {
    "C3": C3, "C4": C4, "C6": C6, "K4": K4, "K23": K23, "K33": K33, "bowtie": BOWTIE,
    "dumbbell": DUMBBELL, "triangles_path2": TRIANGLES_PATH2, "three_triangles": THREE_TRIANGLES,
    "domino": DOMINO, "c6_even_chord": C6_EVEN_CHORD, "tri_square_opposite": TRI_SQUARE_OPPOSITE,
    "tri_square_adjacent": TRI_SQUARE_ADJACENT, "path3": PATH3,
}


@lru_cache(maxsize=None)
def atlas(max_n=6, max_m=9, connected=True):
    """Non-isomorphic graphs from the networkx atlas (all graphs up to 7 vertices)."""
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or n > max_n or h.number_of_edges() > max_m:
            continue
        if connected and not nx.is_connected(h):
            continue
        out.append(G([(u + 1, v + 1) for u, v in h.edges()], n))
    return tuple(out)


def to_nx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h
