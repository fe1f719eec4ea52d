"""Biconnected blocks, the block tree, contiguity and block typing."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cycles import Cycle, enumerate_chordless_cycles
from .graph_model import DisconnectedGraphError, Graph, is_connected


def biconnected_edge_blocks(pairs: Sequence[tuple[int, int]], ids: Sequence[int] | None = None):
    """Blocks of the graph spanned by ``pairs``.

    Returns ``(blocks, cut_vertices)`` where each block is a sorted tuple of
    edge ids (``ids[k]`` names ``pairs[k]``; default ``k``), blocks are sorted
    by smallest id and cut vertices are sorted.  Isolated vertices do not
    appear.  Iterative lowpoint DFS.
    """
    if ids is None:
        ids = range(len(pairs))
    adj: dict[int, list[tuple[int, int]]] = {}
    for (u, v), eid in zip(pairs, ids):
        adj.setdefault(u, []).append((v, eid))
        adj.setdefault(v, []).append((u, eid))
    for lst in adj.values():
        lst.sort()

    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks = []
    cuts = set()
    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = 0
        counter = 1
        edge_stack: list[int] = []
        stack = [(root, -1, iter(adj[root]))]
        root_children = 0
        while stack:
            x, parent_edge, it = stack[-1]
            advanced = False
            for y, eid in it:
                if eid == parent_edge:
                    continue
                if y not in disc:
                    disc[y] = low[y] = counter
                    counter += 1
                    edge_stack.append(eid)
                    stack.append((y, eid, iter(adj[y])))
                    advanced = True
                    break
                if disc[y] < disc[x]:
                    edge_stack.append(eid)
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[x])
            if low[x] >= disc[p]:
                block = []
                while True:
                    eid = edge_stack.pop()
                    block.append(eid)
                    if eid == parent_edge:
                        break
                blocks.append(tuple(sorted(block)))
                if p == root:
                    root_children += 1
                else:
                    cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    blocks.sort()
    return blocks, sorted(cuts)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    block_vertices: tuple[frozenset[int], ...]
    cut_vertices: tuple[int, ...]
    tree: tuple[tuple[int, int], ...]  # (block id, cut vertex), sorted

    def blocks_at(self, v: int) -> list[int]:
        return [b for b, vs in enumerate(self.block_vertices) if v in vs]

    def _check(self, *bids):
        for b in bids:
            if not 0 <= b < len(self.blocks):
                raise KeyError(f"unknown block id {b}")

    def tree_path(self, b1: int, b2: int) -> list[tuple[str, int]]:
        """Path in the block tree from block b1 to block b2 as ('B', id)/('v', cut) nodes."""
        self._check(b1, b2)
        nbrs: dict[tuple[str, int], list[tuple[str, int]]] = {}
        for b, v in self.tree:
            nbrs.setdefault(("B", b), []).append(("v", v))
            nbrs.setdefault(("v", v), []).append(("B", b))
        start, goal = ("B", b1), ("B", b2)
        prev = {start: None}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            if x == goal:
                break
            for y in nbrs.get(x, []):
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        if goal not in prev:
            raise DisconnectedGraphError("blocks lie in different components")
        path = [goal]
        while prev[path[-1]] is not None:
            path.append(prev[path[-1]])
        return path[::-1]


def decompose(g: Graph) -> BlockDecomposition:
    if not is_connected(g):
        raise DisconnectedGraphError("block decomposition needs a connected graph")
    blocks, cuts = biconnected_edge_blocks(g.edges)
    bverts = []
    for blk in blocks:
        vs = set()
        for i in blk:
            vs.update(g.edges[i])
        bverts.append(frozenset(vs))
    tree = sorted((b, v) for v in cuts for b, vs in enumerate(bverts) if v in vs)
    return BlockDecomposition(tuple(blocks), tuple(bverts), tuple(cuts), tuple(tree))


def contiguous(g: Graph, d: BlockDecomposition, b1: int, b2: int) -> bool:
    """Is there a path between the blocks using each block at most once?

    Walk the block-tree path; every internal block must contain the edge
    joining its entry and exit cut vertices.
    """
    d._check(b1, b2)
    if b1 == b2:
        raise ValueError("contiguity needs two distinct blocks")
    path = d.tree_path(b1, b2)
    # path alternates B, v, B, v, ..., B
    for k in range(2, len(path) - 1, 2):
        x, y = path[k - 1][1], path[k + 1][1]
        if not g.has_edge(x, y):
            return False
    return True


def vertex_set_distance(g: Graph, a: Iterable[int], b: Iterable[int]) -> int | None:
    """Graph distance between two vertex sets (None if unreachable)."""
    targets = set(b)
    dist = {v: 0 for v in a}
    if targets & dist.keys():
        return 0
    queue = deque(sorted(dist))
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                if y in targets:
                    return dist[y]
                queue.append(y)
    return None


def block_distance(g: Graph, d: BlockDecomposition, b1: int, b2: int) -> int:
    d._check(b1, b2)
    if b1 == b2:
        raise ValueError("block distance needs two distinct blocks")
    return vertex_set_distance(g, d.block_vertices[b1], d.block_vertices[b2])


@dataclass(frozen=True)
class BlockProfile:
    block: int
    edges: tuple[int, ...]
    is_edge: bool
    bipartite: bool
    t_type: int
    chordless_odd_cycles: tuple[Cycle, ...]

    def to_json(self) -> dict:
        return {
            "edges": [i + 1 for i in self.edges],
            "bipartite": self.bipartite,
            "t_type": self.t_type,
        }


def block_profile(g: Graph, d: BlockDecomposition, b: int) -> BlockProfile:
    d._check(b)
    edges = d.blocks[b]
    if len(edges) == 1:
        return BlockProfile(b, edges, True, True, 0, ())
    odd = tuple(c for c in enumerate_chordless_cycles(g, d.block_vertices[b]) if c.is_odd)
    return BlockProfile(b, edges, False, not odd, len(odd), odd)


def block_profiles(g: Graph, d: BlockDecomposition) -> list[BlockProfile]:
    return [block_profile(g, d, b) for b in range(len(d.blocks))]


def strongly_contiguous(g: Graph, d: BlockDecomposition, b1: int, b2: int, profiles=None) -> bool:
    p1 = profiles[b1] if profiles else block_profile(g, d, b1)
    p2 = profiles[b2] if profiles else block_profile(g, d, b2)
    if p1.bipartite or p2.bipartite:
        raise ValueError("strong contiguity is defined for non-bipartite blocks only")
    types = sorted((p1.t_type, p2.t_type))
    dist = block_distance(g, d, b1, b2)
    if types == [1, 1]:
        return dist <= 1
    if types == [1, 2]:
        return dist == 0
    return False


def block_report(g: Graph, d: BlockDecomposition, profiles=None) -> dict:
    profiles = profiles or block_profiles(g, d)
    return {
        "blocks": [p.to_json() for p in profiles],
        "cut_vertices": list(d.cut_vertices),
        "tree": [list(t) for t in d.tree],
    }
