"""Chordless (induced) cycle enumeration."""
from __future__ import annotations

from dataclasses import dataclass

from .graph_model import Graph


@dataclass(frozen=True, order=True)
class Cycle:
    """Cycle as a vertex tuple: smallest vertex first, then the smaller neighbour."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_odd(self) -> bool:
        return len(self.vertices) % 2 == 1

    def edge_pairs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(min(a, b), max(a, b)) for a, b in zip(vs, vs[1:] + vs[:1])]

    def edge_ids(self, g: Graph) -> frozenset[int]:
        return frozenset(g.edge_index(u, v) for u, v in self.edge_pairs())


def enumerate_chordless_cycles(g: Graph, vertices=None) -> list[Cycle]:
    """All induced cycles of ``g`` (optionally of ``g`` restricted to ``vertices``).

    Sorted by length, then vertex tuple.
    """
    allowed = set(g.vertices if vertices is None else vertices)
    adj = {v: g.neighbors(v) & allowed for v in allowed}
    found = []

    def extend(path, on_path):
        s, last = path[0], path[-1]
        for w in sorted(adj[last]):
            if w <= s or w in on_path:
                continue
            # w may only touch the last vertex (and s, when it closes the cycle)
            if any(x in adj[w] for x in path[1:-1]):
                continue
            if s in adj[w]:
                if len(path) >= 2 and path[1] < w:
                    found.append(Cycle(tuple(path) + (w,)))
                continue
            path.append(w)
            on_path.add(w)
            extend(path, on_path)
            path.pop()
            on_path.discard(w)

    for s in sorted(allowed):
        for a in sorted(adj[s]):
            if a > s:
                extend([s, a], {s, a})
    found.sort(key=lambda c: (c.length, c.vertices))
    return found
