"""Even closed walks, their binomials, and the walk-level characterizations
of primitive, circuit and minimal binomials of a graph's toric ideal.

Positions are 1-based in reports: edge ``k`` of a walk joins its ``k``-th and
``(k+1)``-th vertices, odd positions form the plus side.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .binomial import Binomial
from .blocks import biconnected_edge_blocks
from .cycles import enumerate_chordless_cycles  # noqa: F401  (re-exported)
from .graph_model import Graph

DEFAULT_EDGE_BUDGET = 16


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ClosedWalk:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def plus_edges(self) -> frozenset[int]:
        return frozenset(self.edges[0::2])

    @property
    def minus_edges(self) -> frozenset[int]:
        return frozenset(self.edges[1::2])

    @property
    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edges)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def positions(self, v: int) -> list[int]:
        return [k + 1 for k, x in enumerate(self.vertices) if x == v]

    def exponents(self, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Raw exponent vectors of E+(w) and E-(w), nothing cancelled."""
        u, v = [0] * m, [0] * m
        for k, e in enumerate(self.edges):
            (u if k % 2 == 0 else v)[e] += 1
        return tuple(u), tuple(v)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [e + 1 for e in self.edges]}

    def __str__(self):
        return "-".join(map(str, self.vertices + self.vertices[:1]))


def make_walk(g: Graph, vertices: Sequence[int], canonical: bool = True) -> ClosedWalk:
    """Closed walk through ``vertices`` (start vertex not repeated at the end)."""
    vs = tuple(vertices)
    if len(vs) < 2 or len(vs) % 2:
        raise ValueError("a closed even walk needs an even, positive number of steps")
    edges = []
    for a, b in zip(vs, vs[1:] + vs[:1]):
        if not g.has_edge(a, b):
            raise ValueError(f"{a}-{b} is not an edge")
        edges.append(g.edge_index(a, b))
    w = ClosedWalk(vs, tuple(edges))
    return canonical_walk(g, w) if canonical else w


def canonical_walk(g: Graph, w: ClosedWalk) -> ClosedWalk:
    """Lexicographically least vertex sequence over all rotations and both directions."""
    vs = w.vertices
    n = len(vs)
    rev = (vs[0],) + tuple(reversed(vs[1:]))
    best = min(seq[k:] + seq[:k] for seq in (vs, rev) for k in range(n))
    if best == vs:
        return w
    return make_walk(g, best, canonical=False)


def binomial_of_walk(g: Graph, w: ClosedWalk) -> Binomial:
    u, v = w.exponents(g.m)
    return Binomial.from_pair(g, u, v)


# -- block structure of the walk subgraph ---------------------------------------


@dataclass(frozen=True)
class SubgraphBlocks:
    blocks: tuple[tuple[int, ...], ...]
    block_vertices: tuple[frozenset[int], ...]
    cut_vertices: tuple[int, ...]
    vertex_blocks: dict

    def is_cyclic(self, b: int) -> bool:
        return len(self.blocks[b]) > 1


def subgraph_blocks(g: Graph, edge_ids: Iterable[int]) -> SubgraphBlocks:
    ids = sorted(set(edge_ids))
    blocks, cuts = biconnected_edge_blocks([g.edges[i] for i in ids], ids)
    bverts = []
    vblocks: dict[int, list[int]] = {}
    for b, blk in enumerate(blocks):
        vs = set()
        for i in blk:
            vs.update(g.edges[i])
        bverts.append(frozenset(vs))
        for x in vs:
            vblocks.setdefault(x, []).append(b)
    return SubgraphBlocks(tuple(blocks), tuple(bverts), tuple(cuts), vblocks)


def _walk_blocks(g: Graph, w: ClosedWalk) -> SubgraphBlocks:
    return subgraph_blocks(g, w.edge_set)


def _is_cycle_block(g: Graph, s: SubgraphBlocks, b: int) -> bool:
    return len(s.blocks[b]) >= 3 and len(s.blocks[b]) == len(s.block_vertices[b])


def is_sink(w: ClosedWalk, block_edges: Iterable[int], x: int, g: Graph) -> bool:
    """``x`` meets two walk steps of the block with the same parity."""
    block_edges = set(block_edges)
    parities = [k % 2 for k, e in enumerate(w.edges) if e in block_edges and x in g.edges[e]]
    return parities.count(0) >= 2 or parities.count(1) >= 2


def is_primitive(g: Graph, w: ClosedWalk) -> tuple[bool, list[str]]:
    """Primitive-walk test on the walk itself; returns the violated conditions."""
    s = _walk_blocks(g, w)
    problems = []
    for b, blk in enumerate(s.blocks):
        if len(blk) > 1 and not _is_cycle_block(g, s, b):
            problems.append(f"block {_fmt_edges(blk)} is neither a cycle nor a cut edge")
    counts: dict[int, int] = {}
    for e in w.edges:
        counts[e] = counts.get(e, 0) + 1
    single = {blk[0] for blk in s.blocks if len(blk) == 1}
    for e, c in sorted(counts.items()):
        if c > 2:
            problems.append(f"edge e{e + 1} traversed {c} times")
        elif c == 2 and e not in single:
            problems.append(f"edge e{e + 1} traversed twice but is not a cut edge of the walk")
    both = w.plus_edges & w.minus_edges
    if both:
        problems.append(f"edges {_fmt_edges(both)} lie on both sides")
    for x in s.cut_vertices:
        bl = s.vertex_blocks[x]
        if len(bl) != 2:
            problems.append(f"cut vertex {x} lies in {len(bl)} blocks")
            continue
        for b in bl:
            if not is_sink(w, s.blocks[b], x, g):
                problems.append(f"cut vertex {x} is not a sink of block {_fmt_edges(s.blocks[b])}")
    return not problems, problems


def is_strongly_primitive(g: Graph, w: ClosedWalk) -> bool:
    ok, why = is_primitive(g, w)
    if not ok:
        raise ValueError("strong primitivity is defined for primitive walks: " + "; ".join(why))
    s = _walk_blocks(g, w)
    cuts = set(s.cut_vertices)
    for b, blk in enumerate(s.blocks):
        if not s.is_cyclic(b):
            continue
        for e in blk:
            u, v = g.edges[e]
            if u in cuts and v in cuts:
                return False
    return True


def is_circuit(g: Graph, w: ClosedWalk) -> tuple[bool, int | None]:
    """Circuit test for a primitive walk; the tag is 1 (even cycle),
    2 (two odd cycles sharing a vertex) or 3 (two disjoint odd cycles and a path)."""
    if not is_primitive(g, w)[0]:
        return False, None
    s = _walk_blocks(g, w)
    cyclic = [b for b in range(len(s.blocks)) if s.is_cyclic(b)]
    if len(s.blocks) == 1:
        return (True, 1) if len(cyclic) == 1 and len(s.blocks[0]) % 2 == 0 else (False, None)
    if len(cyclic) != 2:
        return False, None
    b1, b2 = cyclic
    if s.block_vertices[b1] & s.block_vertices[b2]:
        return True, 2
    return True, 3


# -- chords ---------------------------------------------------------------------


@dataclass(frozen=True)
class ChordRecord:
    edge: int
    kind: str  # "bridge" | "even" | "odd"
    s: int | None = None
    j: int | None = None


def chords_of(g: Graph, w: ClosedWalk) -> list[int]:
    vs, es = w.vertex_set, w.edge_set
    return [i for i, (a, b) in enumerate(g.edges) if a in vs and b in vs and i not in es]


def classify_chord(g: Graph, w: ClosedWalk, f: int, blocks: SubgraphBlocks | None = None) -> ChordRecord:
    a, b = g.edges[f]
    if a not in w.vertex_set or b not in w.vertex_set or f in w.edge_set:
        raise ValueError(f"e{f + 1} is not a chord of the walk")
    s = blocks or _walk_blocks(g, w)
    ba, bb = s.vertex_blocks[a], s.vertex_blocks[b]
    # bridge: some block holds one endpoint and a different block the other
    if not (len(ba) == 1 and ba == bb):
        return ChordRecord(f, "bridge")
    p, q = sorted((w.positions(a)[0], w.positions(b)[0]))
    return ChordRecord(f, "odd" if (q - p) % 2 == 0 else "even", p, q)


def classify_chords(g: Graph, w: ClosedWalk) -> list[ChordRecord]:
    s = _walk_blocks(g, w)
    return [classify_chord(g, w, f, s) for f in chords_of(g, w)]


def cross_effectively(f: ChordRecord, f2: ChordRecord) -> bool:
    if f.kind != "odd" or f2.kind != "odd":
        raise ValueError("effective crossing is defined for odd chords")
    if f.edge == f2.edge:
        return False
    s, j, s2, j2 = f.s, f.j, f2.s, f2.j
    return (s2 - s) % 2 == 1 and (s < s2 < j < j2 or s2 < s < j2 < j)


@dataclass(frozen=True)
class F4Record:
    cycle: tuple[int, int, int, int]  # vertex order a-b-c-d: ab, cd walk edges; bc, da chords
    walk_edges: tuple[int, int]
    chords: tuple[int, int]


def find_F4s(g: Graph, w: ClosedWalk, chords: list[ChordRecord] | None = None) -> list[F4Record]:
    if chords is None:
        chords = classify_chords(g, w)
    odd = [c for c in chords if c.kind == "odd"]
    plus, minus = w.plus_edges, w.minus_edges
    found = set()
    for i, f in enumerate(odd):
        for f2 in odd[i + 1:]:
            if not cross_effectively(f, f2):
                continue
            p, q = w.vertices[f.s - 1], w.vertices[f.j - 1]
            r, t = w.vertices[f2.s - 1], w.vertices[f2.j - 1]
            # 4-cycle p-x-y-q... with f = pq, f2 = rt as opposite sides
            for x, y in ((r, t), (t, r)):
                # walk edges {p, x} and {q, y}; chords {p, q} and {x, y}
                if not (g.has_edge(p, x) and g.has_edge(q, y)):
                    continue
                e1, e2 = g.edge_index(p, x), g.edge_index(q, y)
                if e1 not in w.edge_set or e2 not in w.edge_set:
                    continue
                same = ({e1, e2} <= plus and not ({e1, e2} & minus)) or (
                    {e1, e2} <= minus and not ({e1, e2} & plus)
                )
                if not same:
                    continue
                cyc = (x, p, q, y)
                found.add(F4Record(_rotate_min(cyc), tuple(sorted((e1, e2))), tuple(sorted((f.edge, f2.edge)))))
    return sorted(found, key=lambda r: (r.chords, r.walk_edges))


def _rotate_min(cyc):
    n = len(cyc)
    rev = tuple(reversed(cyc))
    return min(seq[k:] + seq[:k] for seq in (cyc, rev) for k in range(n))


def is_minimal_binomial(g: Graph, w: ClosedWalk) -> tuple[bool, list[str]]:
    """Minimal-binomial test for ``B_w`` from the walk's chords and F4s.

    Two odd chords cross strongly effectively when they cross effectively
    without forming an F4; an odd chord crosses an F4 when it crosses either
    of its chords effectively.
    """
    ok, why = is_primitive(g, w)
    if not ok:
        return False, ["not primitive: " + "; ".join(why)]
    problems = []
    if not is_strongly_primitive(g, w):
        problems.append("not strongly primitive")
    chords = classify_chords(g, w)
    for c in chords:
        if c.kind != "odd":
            problems.append(f"{c.kind} chord e{c.edge + 1}")
    f4s = find_F4s(g, w, chords)
    f4_pairs = {r.chords for r in f4s}
    odd = [c for c in chords if c.kind == "odd"]
    for i, f in enumerate(odd):
        for f2 in odd[i + 1:]:
            if cross_effectively(f, f2) and tuple(sorted((f.edge, f2.edge))) not in f4_pairs:
                problems.append(f"odd chords e{f.edge + 1}, e{f2.edge + 1} cross strongly effectively")
    by_edge = {c.edge: c for c in odd}
    for r in f4s:
        a, b = (by_edge[x] for x in r.chords)
        for c in odd:
            if c.edge in r.chords:
                continue
            if cross_effectively(c, a) or cross_effectively(c, b):
                problems.append(f"odd chord e{c.edge + 1} crosses the F4 {r.cycle}")
    return not problems, problems


def f4_replacements(g: Graph, w: ClosedWalk) -> list[ClosedWalk]:
    """Walks differing from ``w`` by one F4."""
    out = set()
    n = w.length
    for r in find_F4s(g, w):
        e1, e2 = r.walk_edges
        for i in range(n):
            if w.edges[i] != e1:
                continue
            for k in range(n):
                if w.edges[k] != e2 or (k - i) % 2:
                    continue
                # rotate so the walk is (e1, w2, e2, w1)
                vs = w.vertices[i:] + w.vertices[:i]
                kk = (k - i) % n
                a, b = vs[0], vs[1]
                c, d = vs[kk], vs[(kk + 1) % n]
                if not (g.has_edge(a, c) and g.has_edge(b, d)):
                    continue
                if {g.edge_index(a, c), g.edge_index(b, d)} != set(r.chords):
                    continue
                w2 = vs[1:kk + 1]  # b .. c
                w1 = vs[kk + 1:]  # d .. (back to a)
                new = (a,) + tuple(reversed(w2)) + w1
                try:
                    out.add(make_walk(g, new))
                except ValueError:
                    continue
    return sorted(out, key=lambda x: x.vertices)


def f4_equivalent(g: Graph, w1: ClosedWalk, w2: ClosedWalk, limit: int = 10_000) -> bool:
    a, b = canonical_walk(g, w1), canonical_walk(g, w2)
    if a == b:
        return True
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for y in f4_replacements(g, x):
            if y == b:
                return True
            if y not in seen:
                if len(seen) >= limit:
                    raise BudgetExceeded("F4 replacement search exceeded its limit")
                seen.add(y)
                queue.append(y)
    return False


# -- primitive walks from subgraphs ----------------------------------------------


def primitive_subgraph_blocks(g: Graph, edge_ids: Iterable[int]) -> SubgraphBlocks | None:
    """Block data if the edge set is the subgraph of a primitive walk, else None.

    Accepted shapes: an even cycle, or a non-biconnected connected subgraph
    whose blocks are cycles or cut edges, with every cut vertex in exactly two
    blocks and an odd number of cyclic-block edges on each side of it.
    """
    ids = sorted(set(edge_ids))
    if not ids:
        return None
    deg: dict[int, int] = {}
    for i in ids:
        for x in g.edges[i]:
            deg[x] = deg.get(x, 0) + 1
    if any(d < 2 or d > 4 for d in deg.values()):
        return None
    s = subgraph_blocks(g, ids)
    if not _connected(g, ids, deg):
        return None
    if len(s.blocks) == 1:
        if _is_cycle_block(g, s, 0) and len(ids) % 2 == 0:
            return s
        return None
    for b, blk in enumerate(s.blocks):
        if len(blk) > 1 and not _is_cycle_block(g, s, b):
            return None
    for x in s.cut_vertices:
        if len(s.vertex_blocks[x]) != 2:
            return None
    total = sum(len(blk) for b, blk in enumerate(s.blocks) if s.is_cyclic(b))
    for x in s.cut_vertices:
        b1, _ = s.vertex_blocks[x]
        side = _side_cyclic_edges(s, b1, x)
        if side % 2 == 0 or (total - side) % 2 == 0:
            return None
    return s


def _connected(g, ids, deg):
    start = g.edges[ids[0]][0]
    adj: dict[int, list[int]] = {}
    for i in ids:
        u, v = g.edges[i]
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(deg)


def _side_cyclic_edges(s: SubgraphBlocks, b: int, avoid: int) -> int:
    """Cyclic edges in the blocks reachable from block ``b`` without crossing ``avoid``."""
    seen = {b}
    stack = [b]
    cuts = set(s.cut_vertices)
    count = 0
    while stack:
        x = stack.pop()
        if s.is_cyclic(x):
            count += len(s.blocks[x])
        for v in s.block_vertices[x]:
            if v == avoid or v not in cuts:
                continue
            for y in s.vertex_blocks[v]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def walks_on_subgraph(g: Graph, edge_ids: Iterable[int]) -> list[ClosedWalk]:
    """All primitive walks whose subgraph is exactly this edge set, one per
    distinct binomial, in canonical form and sorted by binomial."""
    ids = sorted(set(edge_ids))
    s = primitive_subgraph_blocks(g, ids)
    if s is None:
        return []
    cyclic = [b for b in range(len(s.blocks)) if s.is_cyclic(b)]
    if len(s.blocks) == 1:
        return [_cycle_walk(g, s, 0)]
    # root at an end block (always a cycle) from a non-cut vertex
    cuts = set(s.cut_vertices)
    ends = [b for b in cyclic if len(s.block_vertices[b] & cuts) == 1]
    root = ends[0]
    start = min(s.block_vertices[root] - cuts)
    adj = _block_adjacency(g, s)
    by_binomial: dict[Binomial, ClosedWalk] = {}
    # the root direction only reverses the whole walk; fix it
    others = [b for b in cyclic if b != root]
    for mask in range(1 << len(others)):
        dirs = {root: 0}
        for k, b in enumerate(others):
            dirs[b] = (mask >> k) & 1
        seq = _tour(s, adj, root, start, dirs)
        w = make_walk(g, seq)
        bn = binomial_of_walk(g, w)
        if bn not in by_binomial or w.vertices < by_binomial[bn].vertices:
            by_binomial[bn] = w
    return [by_binomial[bn] for bn in sorted(by_binomial)]


def walk_from_subgraph(g: Graph, edge_ids: Iterable[int]) -> ClosedWalk | None:
    ids = sorted(set(edge_ids))
    if not ids or not _connected(g, ids, {x for i in ids for x in g.edges[i]}):
        raise ValueError("edge set does not induce a connected subgraph")
    walks = walks_on_subgraph(g, ids)
    return walks[0] if walks else None


def _cycle_walk(g, s, b):
    adj = _block_adjacency(g, s)[b]
    start = min(s.block_vertices[b])
    seq = [start, min(adj[start])]
    while len(seq) < len(s.blocks[b]):
        nxt = [y for y in adj[seq[-1]] if y != seq[-2]]
        seq.append(nxt[0])
    return make_walk(g, seq)


def _block_adjacency(g, s):
    out = []
    for blk in s.blocks:
        adj: dict[int, list[int]] = {}
        for i in blk:
            u, v = g.edges[i]
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        for lst in adj.values():
            lst.sort()
        out.append(adj)
    return out


def _tour(s, adj, b, x, dirs):
    """Vertex sequence of block ``b`` entered at ``x`` with excursions into the
    other block at each further cut vertex; ends before returning to ``x``."""
    cuts = set(s.cut_vertices)

    def excursion(y):
        other = next(c for c in s.vertex_blocks[y] if c != b)
        return _tour(s, adj, other, y, dirs)[1:] + [y]

    if not s.is_cyclic(b):
        (y,) = [v for v in s.block_vertices[b] if v != x]
        seq = [x, y]
        if y in cuts:
            seq += excursion(y)
        return seq
    nb = adj[b][x]
    order = [x, nb[dirs.get(b, 0)]]
    while len(order) < len(s.blocks[b]):
        nxt = [y for y in adj[b][order[-1]] if y != order[-2]]
        order.append(nxt[0])
    seq = [x]
    for y in order[1:]:
        seq.append(y)
        if y in cuts:
            seq += excursion(y)
    return seq


def enumerate_graver(g: Graph, budget_edges: int = DEFAULT_EDGE_BUDGET) -> list[tuple[ClosedWalk, Binomial]]:
    """Graver basis from primitive-walk subgraphs, sorted by binomial."""
    if g.m > budget_edges:
        raise BudgetExceeded(f"{g.m} edges exceed the subset-enumeration budget of {budget_edges}")
    incident = [[i for i, e in enumerate(g.edges) if v in e] for v in range(g.n + 1)]
    found: dict[Binomial, ClosedWalk] = {}
    for mask in range(1, 1 << g.m):
        if mask & (mask - 1) == 0:
            continue
        ok = True
        for v in g.vertices:
            d = sum((mask >> i) & 1 for i in incident[v])
            if d == 1 or d > 4:
                ok = False
                break
        if not ok:
            continue
        ids = [i for i in range(g.m) if (mask >> i) & 1]
        for w in walks_on_subgraph(g, ids):
            bn = binomial_of_walk(g, w)
            if bn not in found or w.vertices < found[bn].vertices:
                found[bn] = w
    return [(found[bn], bn) for bn in sorted(found)]


def enumerate_minimal_binomials(
    g: Graph, budget_edges: int = DEFAULT_EDGE_BUDGET, graver=None
) -> list[tuple[ClosedWalk, Binomial]]:
    if graver is None:
        graver = enumerate_graver(g, budget_edges)
    return [(w, bn) for w, bn in graver if is_minimal_binomial(g, w)[0]]


def _fmt_edges(ids) -> str:
    return "{" + ",".join(f"e{i + 1}" for i in sorted(ids)) + "}"
