"""Brute-force toric algebra over G-degree fibers.

Nothing here looks at walks: the Graver basis comes from exhaustive kernel
search under the conformal order, and the minimal number of generators from
connectivity of fibers under moves of lower degree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .binomial import Binomial
from .graph_model import Graph

DEFAULT_FIBER_EDGE_BUDGET = 12
DEFAULT_FIBER_SIZE_LIMIT = 200_000
DEFAULT_KERNEL_LIMIT = 2_000_000


class OracleBudgetExceeded(RuntimeError):
    pass


def _edge_order(g: Graph):
    """Per edge, the vertices whose last incident edge it is."""
    last = {}
    for i, (u, v) in enumerate(g.edges):
        last[u] = i
        last[v] = i
    closes = [[] for _ in range(g.m)]
    for x, i in last.items():
        closes[i].append(x)
    return closes


def enumerate_fiber(g: Graph, degree: Sequence[int], limit: int = DEFAULT_FIBER_SIZE_LIMIT) -> list[tuple[int, ...]]:
    """All exponent vectors u >= 0 with G-degree ``degree``, sorted."""
    if len(degree) != g.n:
        raise ValueError("degree vector has the wrong length")
    if any(x < 0 for x in degree):
        return []
    if sum(degree) % 2:
        return []
    rem = [0] + list(degree)
    closes = _edge_order(g)
    for x in g.vertices:
        if rem[x] and not g.neighbors(x):
            return []
    out: list[tuple[int, ...]] = []
    cur = [0] * g.m

    def rec(i):
        if i == g.m:
            out.append(tuple(cur))
            if len(out) > limit:
                raise OracleBudgetExceeded(f"fiber larger than {limit} elements")
            return
        u, v = g.edges[i]
        for k in range(min(rem[u], rem[v]), -1, -1):
            rem[u] -= k
            rem[v] -= k
            if all(rem[x] == 0 for x in closes[i]):
                cur[i] = k
                rec(i + 1)
            rem[u] += k
            rem[v] += k
        cur[i] = 0

    rec(0)
    out.sort()
    return out


def _conformal_le(a: Sequence[int], b: Sequence[int]) -> bool:
    """a is conformally below b: same signs, |a_i| <= |b_i|."""
    for x, y in zip(a, b):
        if x == 0:
            continue
        if (x > 0) != (y > 0) or abs(x) > abs(y) or y == 0:
            return False
    return True


def kernel_elements(g: Graph, degree_bound: int, limit: int = DEFAULT_KERNEL_LIMIT) -> list[tuple[int, ...]]:
    """Nonzero z with A_G z = 0 and positive part summing to at most ``degree_bound``.

    Only one of z, -z is returned (first nonzero entry positive).
    """
    m = g.m
    remaining = [0] * (g.n + 1)
    for u, v in g.edges:
        remaining[u] += 1
        remaining[v] += 1
    bal = [0] * (g.n + 1)
    cur = [0] * m
    out: list[tuple[int, ...]] = []
    budget = [degree_bound, degree_bound]  # positive, negative mass left

    def feasible(x):
        b = bal[x]
        if remaining[x] == 0:
            return b == 0
        return b <= budget[1] and -b <= budget[0]

    def rec(i, started):
        if i == m:
            if started:
                out.append(tuple(cur))
                if len(out) > limit:
                    raise OracleBudgetExceeded(f"more than {limit} kernel elements")
            return
        u, v = g.edges[i]
        remaining[u] -= 1
        remaining[v] -= 1
        lo = -budget[1] if started else 0
        for k in range(lo, budget[0] + 1):
            bal[u] += k
            bal[v] += k
            if k > 0:
                budget[0] -= k
            elif k < 0:
                budget[1] += k
            if feasible(u) and feasible(v):
                cur[i] = k
                rec(i + 1, started or k != 0)
            if k > 0:
                budget[0] += k
            elif k < 0:
                budget[1] -= k
            bal[u] -= k
            bal[v] -= k
        cur[i] = 0
        remaining[u] += 1
        remaining[v] += 1

    rec(0, False)
    return out


def graver_bruteforce(g: Graph, degree_bound: int | None = None) -> list[Binomial]:
    """Conformally minimal kernel elements of total degree <= ``degree_bound``."""
    if degree_bound is None:
        degree_bound = max(g.m, 1)
    if degree_bound < 1:
        raise ValueError("degree_bound must be positive")
    zs = kernel_elements(g, degree_bound)
    zs.sort(key=lambda z: (sum(x for x in z if x > 0), z))
    graver: list[tuple[int, ...]] = []
    negs: list[tuple[int, ...]] = []
    for z in zs:
        if any(_conformal_le(h, z) for h in graver) or any(_conformal_le(h, z) for h in negs):
            continue
        graver.append(z)
        negs.append(tuple(-x for x in z))
    out = [Binomial.from_pair(g, [max(x, 0) for x in z], [max(-x, 0) for x in z]) for z in graver]
    return sorted(out)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


@dataclass
class FiberGraph:
    degree: tuple[int, ...]
    elements: list[tuple[int, ...]]
    components: list[list[int]]  # indices into elements, each sorted, list sorted

    @property
    def component_count(self) -> int:
        return len(self.components)


def _components(uf: _UnionFind, n: int) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(uf.find(i), []).append(i)
    return sorted(groups.values())


def fiber_under_moves(g: Graph, degree, moves: Iterable[tuple[Sequence[int], Sequence[int]]], elements=None) -> FiberGraph:
    """Fiber of ``degree`` with u ~ u - p + q for each move (p, q) and its reverse."""
    elements = enumerate_fiber(g, degree) if elements is None else elements
    index = {u: i for i, u in enumerate(elements)}
    uf = _UnionFind(len(elements))
    moves = list(moves)
    for i, u in enumerate(elements):
        for p, q in moves:
            for a, b in ((p, q), (q, p)):
                if all(x >= y for x, y in zip(u, a)):
                    v = tuple(x - y + z for x, y, z in zip(u, a, b))
                    uf.union(i, index[v])
    return FiberGraph(tuple(degree), elements, _components(uf, len(elements)))


def fiber_by_common_factor(g: Graph, degree, elements=None) -> FiberGraph:
    """Fiber with u ~ v whenever the monomials share a variable.

    Its components coincide with those under all moves of strictly lower
    degree, without reference to any chosen generators.
    """
    elements = enumerate_fiber(g, degree) if elements is None else elements
    uf = _UnionFind(len(elements))
    by_var: dict[int, int] = {}
    for i, u in enumerate(elements):
        for e, k in enumerate(u):
            if k:
                if e in by_var:
                    uf.union(by_var[e], i)
                else:
                    by_var[e] = i
    return FiberGraph(tuple(degree), elements, _components(uf, len(elements)))


@dataclass
class MarkovResult:
    mu: int
    per_degree: dict  # degree tuple -> components - 1 (only degrees with > 0)
    generators: list[Binomial]
    scanned: list = field(default_factory=list)  # (degree, fiber size, components)

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "per_degree": [
                {"degree": list(d), "count": c} for d, c in sorted(self.per_degree.items(), key=lambda t: (sum(t[0]), t[0]))
            ],
            "generators": [b.to_json() for b in self.generators],
        }


def _degree_order(degrees, reverse_ties=False):
    degs = sorted(set(degrees))
    if reverse_ties:
        return sorted(degs, key=lambda d: (sum(d), tuple(-x for x in d)))
    return sorted(degs, key=lambda d: (sum(d), d))


def markov_mu(
    g: Graph,
    graver: list[Binomial] | None = None,
    reverse_ties: bool = False,
    budget_edges: int = DEFAULT_FIBER_EDGE_BUDGET,
) -> MarkovResult:
    """Minimal number of generators by graded fiber connectivity."""
    if g.m > budget_edges:
        raise OracleBudgetExceeded(f"{g.m} edges exceed the fiber budget of {budget_edges}")
    if graver is None:
        graver = graver_bruteforce(g)
    chosen: list[Binomial] = []
    per_degree = {}
    scanned = []
    for deg in _degree_order((b.degree for b in graver), reverse_ties):
        lower = [(b.plus, b.minus) for b in chosen if sum(b.degree) < sum(deg)]
        fib = fiber_under_moves(g, deg, lower)
        scanned.append((deg, len(fib.elements), fib.component_count))
        if fib.component_count < 2:
            continue
        per_degree[deg] = fib.component_count - 1
        reps = [fib.elements[c[0]] for c in fib.components]
        for r in reps[1:]:
            chosen.append(Binomial.from_pair(g, reps[0], r))
    return MarkovResult(sum(per_degree.values()), per_degree, chosen, scanned)


def recount_mu(g: Graph, generators: list[Binomial], degrees) -> int:
    """Recompute sum of (components - 1) over ``degrees`` using a final generator set."""
    total = 0
    for deg in set(degrees):
        lower = [(b.plus, b.minus) for b in generators if sum(b.degree) < sum(deg)]
        total += fiber_under_moves(g, deg, lower).component_count - 1
    return total


def minimality_oracle(g: Graph, b: Binomial, markov: MarkovResult | None = None) -> bool:
    """Is ``b`` part of some minimal generating set?

    True iff its two monomials fall in different components of their fiber
    under the moves chosen in strictly lower degrees.
    """
    if g.g_degree(b.plus) != g.g_degree(b.minus):
        raise ValueError("binomial is not in the toric ideal")
    if markov is None:
        markov = markov_mu(g)
    lower = [(c.plus, c.minus) for c in markov.generators if c.total_degree < b.total_degree]
    fib = fiber_under_moves(g, b.degree, lower)
    index = {u: i for i, u in enumerate(fib.elements)}
    iu, iv = index[b.plus], index[b.minus]
    return not any(iu in c and iv in c for c in fib.components)


def mixed_dominating_pair_check(gens: Sequence[Binomial]):
    """Return ``(True, None)`` or ``(False, (i, j))`` for the first pair of
    generators sharing plus- and minus-support (or crosswise)."""
    for i in range(len(gens)):
        pi, mi = gens[i].plus_support, gens[i].minus_support
        for j in range(i + 1, len(gens)):
            pj, mj = gens[j].plus_support, gens[j].minus_support
            if (pi & pj and mi & mj) or (pi & mj and mi & pj):
                return False, (i, j)
    return True, None
