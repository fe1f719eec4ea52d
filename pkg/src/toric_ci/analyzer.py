"""Complete-intersection and normality decisions for connected graphs.

The fiber oracle (mu == height) is the final word on CI; the combinatorial
route through blocks, minimal walks and the bipartite chordless-cycle test
runs alongside it and must agree.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .binomial import Binomial
from .blocks import (
    BlockDecomposition,
    BlockProfile,
    block_profiles,
    contiguous,
    decompose,
    strongly_contiguous,
    vertex_set_distance,
)
from .cycles import Cycle, enumerate_chordless_cycles
from .fiber import (
    DEFAULT_FIBER_EDGE_BUDGET,
    MarkovResult,
    OracleBudgetExceeded,
    graver_bruteforce,
    markov_mu,
)
from .graph_model import DisconnectedGraphError, Graph, ideal_height, induced_subgraph, is_bipartite, is_connected
from .walks import (
    DEFAULT_EDGE_BUDGET,
    BudgetExceeded,
    ClosedWalk,
    chords_of,
    enumerate_graver,
    enumerate_minimal_binomials,
    is_circuit,
    subgraph_blocks,
)


class InternalInconsistencyError(RuntimeError):
    """The combinatorial and algebraic routes disagree."""


@dataclass(frozen=True)
class Budgets:
    walk_edges: int = DEFAULT_EDGE_BUDGET
    fiber_edges: int = DEFAULT_FIBER_EDGE_BUDGET
    degree_bound: int | None = None

    def to_json(self) -> dict:
        return {"walk_edges": self.walk_edges, "fiber_edges": self.fiber_edges, "degree_bound": self.degree_bound}


def _require_connected(g: Graph):
    if not is_connected(g):
        raise DisconnectedGraphError("this analysis needs a connected graph; split it into components first")


# -- ring graphs and the bipartite case -----------------------------------------


def is_ring_graph(g: Graph) -> bool:
    """Every block is an edge or reduces to one cycle by deleting ears:
    chains of degree-2 vertices whose two ends are adjacent."""
    if g.m == 0:
        return True
    comps = [g] if is_connected(g) else [induced_subgraph(g, vs) for vs in _vertex_components(g)]
    for h in comps:
        if h.m == 0:
            continue
        d = decompose(h)
        for blk in d.blocks:
            if len(blk) == 1:
                continue
            edges = frozenset(h.edges[i] for i in blk)
            if not _reduces_to_cycle(edges):
                return False
    return True


def _vertex_components(g):
    from .graph_model import connected_components

    return [vs for _, vs in connected_components(g)]


@lru_cache(maxsize=4096)
def _reduces_to_cycle(edges: frozenset) -> bool:
    adj: dict[int, set[int]] = defaultdict(set)
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    if all(len(s) == 2 for s in adj.values()):
        return True  # biconnected and 2-regular: a cycle
    for path in _ears(adj):
        inner = path[1:-1]
        rest = frozenset(e for e in edges if e[0] not in inner and e[1] not in inner)
        if _reduces_to_cycle(rest):
            return True
    return False


def _ears(adj):
    """Maximal chains of degree-2 vertices whose two ends are adjacent."""
    seen = set()
    for x in sorted(adj):
        if len(adj[x]) != 2 or x in seen:
            continue
        sides = []
        for start in sorted(adj[x]):
            prev, cur, part = x, start, []
            while len(adj[cur]) == 2 and cur != x:
                part.append(cur)
                prev, cur = cur, next(y for y in adj[cur] if y != prev)
            sides.append((part, cur))
        (p1, a), (p2, b) = sides
        chain = list(reversed(p1)) + [x] + p2
        seen.update(chain)
        if a != b and b in adj[a]:
            yield [a] + chain + [b]


def bipartite_ci(g: Graph) -> tuple[bool, tuple[Cycle, Cycle] | None]:
    """Chordless cycles pairwise share at most one edge; witness is a bad pair.

    Also cross-checks the chordless-cycle count and ring-graph recognition.
    """
    _require_connected(g)
    bip, _ = is_bipartite(g)
    if not bip:
        raise ValueError("bipartite_ci needs a bipartite graph")
    cycles = enumerate_chordless_cycles(g)
    edge_sets = [c.edge_ids(g) for c in cycles]
    witness = None
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if len(edge_sets[i] & edge_sets[j]) > 1:
                witness = (cycles[i], cycles[j])
                break
        if witness:
            break
    ok = witness is None
    if ok and len(cycles) != g.m - g.n + 1:
        raise InternalInconsistencyError(
            f"{len(cycles)} chordless cycles but m - n + 1 = {g.m - g.n + 1} for a CI bipartite graph"
        )
    if ok != is_ring_graph(g):
        raise InternalInconsistencyError("ring-graph recognition disagrees with the chordless-cycle test")
    return ok, witness


# -- normality ------------------------------------------------------------------


def odd_cycle_condition(g: Graph, vertices=None) -> tuple[bool, tuple[Cycle, Cycle] | None]:
    odd = [c for c in enumerate_chordless_cycles(g, vertices) if c.is_odd]
    for i in range(len(odd)):
        a = set(odd[i].vertices)
        for j in range(i + 1, len(odd)):
            b = set(odd[j].vertices)
            if a & b:
                continue
            if any(g.neighbors(x) & b for x in a):
                continue
            return False, (odd[i], odd[j])
    return True, None


def is_normal(g: Graph) -> tuple[bool, tuple[Cycle, Cycle] | None]:
    """Normality of the edge ring via the odd cycle condition."""
    _require_connected(g)
    return odd_cycle_condition(g)


# -- screening ------------------------------------------------------------------


@dataclass
class CheckResult:
    check: str
    passed: bool
    witness: object = None
    skipped: bool = False

    def to_json(self) -> dict:
        return {"check": self.check, "passed": self.passed, "skipped": self.skipped, "witness": self.witness}


@dataclass
class ScreenReport:
    checks: list[CheckResult]
    complete: bool = True

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[str]:
        return [c.check for c in self.checks if not c.passed]

    def to_json(self) -> list:
        return [c.to_json() for c in self.checks]


CHECK_IDS = (
    "nonbipartite_block_count",
    "contiguity",
    "generators_are_circuits",
    "at_most_one_noncycle_generator",
    "exceptional_generator_placement",
    "bipartite_blocks_ci",
    "biconnected_odd_cycle_condition",
    "t_type_constraints",
)


@dataclass
class _Context:
    g: Graph
    d: BlockDecomposition
    profiles: list[BlockProfile]
    minimal: list[tuple[ClosedWalk, Binomial]] | None

    @property
    def nonbipartite(self) -> list[int]:
        return [p.block for p in self.profiles if not p.bipartite]


def _context(g: Graph, budgets: Budgets, minimal=None) -> _Context:
    d = decompose(g)
    profiles = block_profiles(g, d)
    if minimal is None:
        try:
            minimal = enumerate_minimal_binomials(g, budgets.walk_edges)
        except BudgetExceeded:
            minimal = None
    return _Context(g, d, profiles, minimal)


def _cycle_json(c: Cycle) -> list[int]:
    return list(c.vertices)


def _walk_json(w: ClosedWalk, b: Binomial) -> dict:
    return {"walk": list(w.vertices), "binomial": str(b)}


def _odd_cycles_of_walk(g: Graph, w: ClosedWalk) -> list[frozenset[int]]:
    s = subgraph_blocks(g, w.edge_set)
    return [s.block_vertices[b] for b in range(len(s.blocks)) if s.is_cyclic(b) and len(s.blocks[b]) % 2]


def _is_even_cycle(g: Graph, w: ClosedWalk) -> bool:
    ok, tag = is_circuit(g, w)
    return ok and tag == 1


def _connecting_cuts(d: BlockDecomposition, b1: int, b2: int) -> tuple[int, int]:
    path = d.tree_path(b1, b2)
    return path[1][1], path[-2][1]


def screen_structural(g: Graph, budgets: Budgets = Budgets(), ctx: _Context | None = None) -> ScreenReport:
    """Necessary conditions for CI.  A failed check proves the ideal is not a
    complete intersection; passing every check proves nothing."""
    _require_connected(g)
    if g.m == 0:
        return ScreenReport([CheckResult(c, True) for c in CHECK_IDS])
    ctx = ctx or _context(g, budgets)
    d, profiles, nb = ctx.d, ctx.profiles, ctx.nonbipartite
    checks = []

    checks.append(CheckResult("nonbipartite_block_count", len(nb) <= 2, None if len(nb) <= 2 else _blocks_json(d, nb)))

    if len(nb) == 2:
        ok = contiguous(g, d, nb[0], nb[1])
        checks.append(CheckResult("contiguity", ok, None if ok else _blocks_json(d, nb)))
    else:
        checks.append(CheckResult("contiguity", True))

    complete = ctx.minimal is not None
    if complete:
        minimal = ctx.minimal
        noncircuit = [(w, b) for w, b in minimal if not is_circuit(g, w)[0]]
        checks.append(
            CheckResult(
                "generators_are_circuits",
                not noncircuit,
                [_walk_json(w, b) for w, b in noncircuit] or None,
            )
        )
        noncycle = [(w, b) for w, b in minimal if not _is_even_cycle(g, w)]
        checks.append(
            CheckResult(
                "at_most_one_noncycle_generator",
                len(noncycle) <= 1,
                [_walk_json(w, b) for w, b in noncycle] if len(noncycle) > 1 else None,
            )
        )
        bad = []
        for w, b in noncycle:
            if not is_circuit(g, w)[0]:
                continue
            odd_sets = _odd_cycles_of_walk(g, w)
            homes = []
            for vs in odd_sets:
                homes.append(next((p.block for p in profiles if vs <= d.block_vertices[p.block]), None))
            placed = (
                len(homes) == 2
                and None not in homes
                and homes[0] != homes[1]
                and contiguous(g, d, homes[0], homes[1])
            )
            if not placed or chords_of(g, w):
                bad.append(_walk_json(w, b))
        checks.append(CheckResult("exceptional_generator_placement", not bad, bad or None))
    else:
        for cid in ("generators_are_circuits", "at_most_one_noncycle_generator", "exceptional_generator_placement"):
            checks.append(CheckResult(cid, True, None, skipped=True))

    bad = []
    for p in profiles:
        if p.bipartite and not p.is_edge:
            h = induced_subgraph(g, d.block_vertices[p.block])
            ok, wit = bipartite_ci(h)
            if not ok:
                vs = sorted(d.block_vertices[p.block])
                bad.append([[vs[x - 1] for x in c.vertices] for c in wit])
    checks.append(CheckResult("bipartite_blocks_ci", not bad, bad or None))

    bad = []
    for b in nb:
        ok, wit = odd_cycle_condition(g, d.block_vertices[b])
        if not ok:
            bad.append([_cycle_json(c) for c in wit])
    checks.append(CheckResult("biconnected_odd_cycle_condition", not bad, bad or None))

    bad = []
    if len(nb) == 2:
        ys = _connecting_cuts(d, nb[0], nb[1])
        for b, y in zip(nb, ys):
            p = profiles[b]
            through = [c for c in p.chordless_odd_cycles if y in c.vertices]
            away = [c for c in p.chordless_odd_cycles if y not in c.vertices]
            if p.t_type not in (1, 2) or len(through) != 1:
                bad.append({"block": b, "t_type": p.t_type, "through_cut": len(through)})
            elif any(vertex_set_distance(g, c.vertices, [y]) != 1 for c in away):
                bad.append({"block": b, "t_type": p.t_type, "far_cycle": [_cycle_json(c) for c in away]})
    checks.append(CheckResult("t_type_constraints", not bad, bad or None))
    return ScreenReport(checks, complete)


def _blocks_json(d: BlockDecomposition, ids) -> list[list[int]]:
    return [[e + 1 for e in d.blocks[b]] for b in ids]


# -- the decision ---------------------------------------------------------------


def structural_generator_count(minimal: list[tuple[ClosedWalk, Binomial]]) -> int:
    """Minimal generator count from the set of minimal binomials alone.

    In each degree the minimal binomials join exactly the pairs of monomials
    in different fiber components, so they form a complete multipartite
    graph whose parts are the components.
    """
    by_degree: dict[tuple, list[Binomial]] = defaultdict(list)
    for _, b in minimal:
        by_degree[b.degree].append(b)
    total = 0
    for deg, bs in by_degree.items():
        nbr: dict[tuple, set] = defaultdict(set)
        for b in bs:
            nbr[b.plus].add(b.minus)
            nbr[b.minus].add(b.plus)
        monos = set(nbr)
        parts = {frozenset(monos - nbr[u]) for u in monos}
        # complete multipartite: each part is an independent set fully joined to the rest
        if sum(len(p) for p in parts) != len(monos):
            raise InternalInconsistencyError(f"minimal binomials of degree {deg} are not complete multipartite")
        total += len(parts) - 1
    return total


@dataclass
class StructuralVerdict:
    ci: bool
    noncycle_generators: int
    block_ci: list[bool]
    generator_count: int

    def to_json(self) -> dict:
        return {
            "ci": self.ci,
            "noncycle_generators": self.noncycle_generators,
            "block_ci": self.block_ci,
            "generator_count": self.generator_count,
        }


def structural_ci(g: Graph, budgets: Budgets = Budgets(), ctx: _Context | None = None) -> StructuralVerdict:
    """CI from minimal walks and blocks: at most one minimal generator is not
    an even cycle, and every block's ideal is CI."""
    _require_connected(g)
    ctx = ctx or _context(g, budgets)
    if ctx.minimal is None:
        raise BudgetExceeded("structural route needs the walk enumeration")
    noncycle = sum(1 for w, _ in ctx.minimal if not _is_even_cycle(g, w))
    block_ok = []
    for p in ctx.profiles:
        if p.is_edge:
            block_ok.append(True)
            continue
        h = induced_subgraph(g, ctx.d.block_vertices[p.block])
        if p.bipartite:
            block_ok.append(bipartite_ci(h)[0])
        else:
            mins = enumerate_minimal_binomials(h, budgets.walk_edges)
            block_ok.append(structural_generator_count(mins) == h.m - h.n)
    count = structural_generator_count(ctx.minimal)
    return StructuralVerdict(noncycle <= 1 and all(block_ok), noncycle, block_ok, count)


@dataclass
class CIVerdict:
    ci: bool
    mu: int
    height: int
    method: str  # "structural+oracle" | "oracle-only" | "structural-only"
    generators: list[Binomial]
    structural: StructuralVerdict | None = None
    markov: MarkovResult | None = None
    minimal: list | None = field(default=None, repr=False)
    graver: list | None = field(default=None, repr=False)


def decide_ci(g: Graph, budgets: Budgets = Budgets(), ctx: _Context | None = None) -> CIVerdict:
    _require_connected(g)
    h = ideal_height(g)
    if g.m == 0:
        return CIVerdict(True, 0, 0, "structural+oracle", [], StructuralVerdict(True, 0, [], 0), None, [], [])
    markov = graver = None
    if g.m <= budgets.fiber_edges:
        try:
            graver = graver_bruteforce(g, budgets.degree_bound)
            markov = markov_mu(g, graver, budget_edges=budgets.fiber_edges)
        except OracleBudgetExceeded:
            markov = graver = None
    structural = None
    walk_graver = None
    if g.m <= budgets.walk_edges:
        walk_graver = enumerate_graver(g, budgets.walk_edges)
        minimal = enumerate_minimal_binomials(g, graver=walk_graver)
        ctx = ctx or _context(g, budgets, minimal)
        structural = structural_ci(g, budgets, ctx)
    else:
        minimal = None
    if markov is None and structural is None:
        raise BudgetExceeded(f"graph with {g.m} edges exceeds both the walk and the fiber budgets")
    if markov is not None and structural is not None:
        ci = markov.mu == h
        if structural.ci != ci or structural.generator_count != markov.mu:
            raise InternalInconsistencyError(
                f"oracle mu={markov.mu}, h={h} but structural ci={structural.ci}, "
                f"count={structural.generator_count} for edges {g.edges}"
            )
        return CIVerdict(ci, markov.mu, h, "structural+oracle", markov.generators, structural, markov, minimal, graver)
    if markov is not None:
        return CIVerdict(markov.mu == h, markov.mu, h, "oracle-only", markov.generators, None, markov, None, graver)
    gens = _generators_from_minimal(minimal)
    return CIVerdict(structural.ci, structural.generator_count, h, "structural-only", gens, structural, None, minimal, None)


def _generators_from_minimal(minimal) -> list[Binomial]:
    """A minimal generating set picked from the minimal binomials: per degree,
    join the first monomial's part to one representative of each other part."""
    by_degree: dict[tuple, list[Binomial]] = defaultdict(list)
    for _, b in minimal:
        by_degree[b.degree].append(b)
    out = []
    for deg in sorted(by_degree, key=lambda d: (sum(d), d)):
        bs = by_degree[deg]
        nbr: dict[tuple, set] = defaultdict(set)
        for b in bs:
            nbr[b.plus].add(b.minus)
            nbr[b.minus].add(b.plus)
        monos = sorted(nbr)
        parts = sorted({frozenset(set(monos) - nbr[u]) for u in monos}, key=min)
        reps = [min(p) for p in parts]
        for b in bs:
            pair = {b.plus, b.minus}
            if reps[0] in pair and pair & set(reps[1:]):
                out.append(b)
    return out


@dataclass
class NormalityCheck:
    normal: bool
    criterion: bool
    nonbipartite_blocks: int
    witness: tuple | None

    @property
    def consistent(self) -> bool:
        return self.normal == self.criterion


def ci_normality_check(g: Graph, verdict: CIVerdict | None = None, ctx: _Context | None = None) -> NormalityCheck:
    """For a CI graph: normal iff at most one non-bipartite block, or two
    strongly contiguous ones."""
    _require_connected(g)
    verdict = verdict or decide_ci(g)
    if not verdict.ci:
        raise ValueError("the normality criterion applies to complete intersection graphs only")
    normal, witness = is_normal(g)
    if g.m == 0:
        return NormalityCheck(normal, True, 0, witness)
    d = ctx.d if ctx else decompose(g)
    profiles = ctx.profiles if ctx else block_profiles(g, d)
    nb = [p.block for p in profiles if not p.bipartite]
    if len(nb) <= 1:
        criterion = True
    elif len(nb) == 2:
        criterion = strongly_contiguous(g, d, nb[0], nb[1], profiles)
    else:
        criterion = False
    res = NormalityCheck(normal, criterion, len(nb), witness)
    if not res.consistent:
        raise InternalInconsistencyError(f"normality {normal} but block criterion {criterion} for {g.edges}")
    return res


# -- full analysis of one connected graph ---------------------------------------


@dataclass
class Analysis:
    graph: Graph
    verdict: CIVerdict
    normal: bool
    normal_witness: tuple | None
    decomposition: BlockDecomposition | None
    profiles: list[BlockProfile]
    screen: ScreenReport
    normality_check: NormalityCheck | None


def analyze_connected(g: Graph, budgets: Budgets = Budgets()) -> Analysis:
    _require_connected(g)
    if g.m == 0:
        verdict = decide_ci(g, budgets)
        return Analysis(g, verdict, True, None, None, [], screen_structural(g, budgets), NormalityCheck(True, True, 0, None))
    verdict = decide_ci(g, budgets)
    ctx = _context(g, budgets, verdict.minimal)
    screen = screen_structural(g, budgets, ctx)
    if verdict.ci and not screen.passed:
        raise InternalInconsistencyError(f"CI graph failed necessary checks {screen.failed()}")
    normal, witness = is_normal(g)
    nc = ci_normality_check(g, verdict, ctx) if verdict.ci else None
    return Analysis(g, verdict, normal, witness, ctx.d, ctx.profiles, screen, nc)
