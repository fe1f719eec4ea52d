"""Simple graphs with canonical vertex/edge numbering.

Vertices are ``1..n``.  Edges are stored as ``(u, v)`` with ``u < v`` and
sorted lexicographically; edge ``i`` (0-based internally, ``e{i+1}`` in
printed output) keeps that position for every downstream enumeration.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Malformed graph input.  ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(ValueError):
    pass


Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError("vertex count must be non-negative")
        canon = []
        for u, v in self.edges:
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range 1..{self.n}")
            canon.append((min(u, v), max(u, v)))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise GraphFormatError(f"duplicate edge {a}")
        adj = [set() for _ in range(self.n + 1)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "adjacency", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(canon)})

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> "Graph":
        edges = [tuple(e) for e in edges]
        if n is None:
            n = max((max(e) for e in edges), default=0)
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._index

    def edge_index(self, u: int, v: int) -> int:
        """0-based index of edge {u, v}; KeyError if absent."""
        return self._index[(min(u, v), max(u, v))]

    def g_degree(self, exponents: Sequence[int]) -> tuple[int, ...]:
        """Vertex-multiplicity vector of the edge monomial with these exponents."""
        deg = [0] * self.n
        for (u, v), k in zip(self.edges, exponents):
            if k:
                deg[u - 1] += k
                deg[v - 1] += k
        return tuple(deg)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _relabel(n_hint: int | None, pairs: list[tuple[int, int, int]]) -> Graph:
    # pairs: (u, v, line)
    order: dict[int, int] = {}
    if n_hint is not None and all(1 <= x <= n_hint for u, v, _ in pairs for x in (u, v)):
        # labels already normalized: keep them so serialize/parse round-trips
        order = {x: x for x in range(1, n_hint + 1)}
    for u, v, _ in pairs:
        for x in (u, v):
            if x not in order:
                order[x] = len(order) + 1
    n = len(order)
    if n_hint is not None:
        if n_hint < n:
            raise GraphFormatError(f"header declares {n_hint} vertices but {n} are used")
        n = n_hint
    seen: dict[Edge, int] = {}
    edges = []
    for u, v, line in pairs:
        if u == v:
            raise GraphFormatError(f"loop at vertex {u}", line)
        a, b = order[u], order[v]
        key = (min(a, b), max(a, b))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v} (first on line {seen[key]})", line)
        seen[key] = line
        edges.append(key)
    return Graph(n, tuple(edges))


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines (optional ``n <count>`` header, ``#`` comments).

    Vertices are relabeled ``1..n`` by first appearance.  With a header
    whose count covers every label, labels are kept as written; otherwise
    unused header slots become isolated vertices after the used ones.
    """
    n_hint = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or pairs or n_hint is not None:
                raise GraphFormatError("header must be a single 'n <count>' before any edge", lineno)
            try:
                n_hint = int(tokens[1])
            except ValueError:
                raise GraphFormatError(f"non-integer token {tokens[1]!r}", lineno) from None
            if n_hint < 0:
                raise GraphFormatError("vertex count must be non-negative", lineno)
            continue
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            bad = next(t for t in tokens if not t.lstrip("-").isdigit())
            raise GraphFormatError(f"non-integer token {bad!r}", lineno) from None
        pairs.append((u, v, lineno))
    return _relabel(n_hint, pairs)


def parse_json_graph(text: str) -> Graph:
    """Parse ``{"n": int, "edges": [[u, v], ...]}``; labels must already be 1..n."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "edges" not in data:
        raise GraphFormatError('expected an object with "edges"')
    edges = data["edges"]
    n = data.get("n")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(type(x) is int for x in e) for e in edges
    ):
        raise GraphFormatError('"edges" must be a list of integer pairs')
    if n is not None and type(n) is not int:
        raise GraphFormatError('"n" must be an integer')
    return Graph.from_edges(edges, n)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def serialize_json_graph(g: Graph) -> str:
    return json.dumps(g.to_json(), separators=(",", ":"))


def connected_components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Components as (subgraph relabeled 1..k, original vertices in order).

    Components are ordered by their smallest original vertex; inside a
    component the original vertices keep their relative order.
    """
    seen = [False] * (g.n + 1)
    out = []
    for s in g.vertices:
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
        comp.sort()
        out.append((induced_subgraph(g, comp), tuple(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> tuple[bool, list[int]]:
    """Return ``(True, colors)`` or ``(False, odd_cycle)``.

    ``colors[v-1]`` is 0/1.  The odd cycle is a vertex list (closed walk
    without the repeated start).
    """
    color = [-1] * (g.n + 1)
    parent = [0] * (g.n + 1)
    for s in g.vertices:
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in sorted(g.neighbors(x)):
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    return False, _odd_cycle(parent, x, y)
    return True, color[1:]


def _odd_cycle(parent, x, y):
    # x, y: same BFS color and adjacent; join their tree paths at the LCA
    px, py = [x], [y]
    ax = {x: 0}
    while parent[px[-1]]:
        px.append(parent[px[-1]])
        ax[px[-1]] = len(px) - 1
    while py[-1] not in ax:
        py.append(parent[py[-1]])
    lca = py[-1]
    return px[: ax[lca] + 1] + list(reversed(py[:-1]))


def ideal_height(g: Graph) -> int:
    """Height of the toric ideal of a connected graph."""
    if not is_connected(g):
        raise DisconnectedGraphError("ideal_height needs a connected graph; analyze each component")
    if g.n == 0:
        return 0
    bip, _ = is_bipartite(g)
    return g.m - g.n + (1 if bip else 0)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced graph on ``vertices``, relabeled 1..k in increasing original order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} out of range 1..{g.n}")
    pos = {v: i + 1 for i, v in enumerate(vs)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Graph(len(vs), tuple(edges))


def edge_subgraph_vertices(g: Graph, edge_ids: Iterable[int]) -> set[int]:
    vs = set()
    for i in edge_ids:
        vs.update(g.edges[i])
    return vs
