"""Command-line front end.

Exit codes: 0 the property holds (or the command succeeded), 3 it fails,
1 internal error, 2 bad input, 4 a budget was exceeded (report is
flagged incomplete).
"""
from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .analyzer import Budgets, decide_ci, is_normal, screen_structural
from .blocks import block_profiles, block_report, decompose
from .fiber import OracleBudgetExceeded, graver_bruteforce, markov_mu
from .graph_model import Graph, GraphFormatError, connected_components, parse_edge_list, parse_json_graph
from .report import TOOL, analysis_report, dumps
from .walks import BudgetExceeded, enumerate_graver

EXIT_OK, EXIT_ERROR, EXIT_BAD_INPUT, EXIT_FALSE, EXIT_BUDGET = 0, 1, 2, 3, 4
# worst first when several files are processed
_SEVERITY = (EXIT_ERROR, EXIT_BAD_INPUT, EXIT_BUDGET, EXIT_FALSE, EXIT_OK)

COMMANDS = ("analyze", "is-ci", "is-normal", "blocks", "generators", "graver", "oracle", "screen")


def parse_graph(text: str, fmt: str | None, name: str = "") -> Graph:
    if fmt is None:
        fmt = "json" if name.endswith(".json") or text.lstrip().startswith("{") else "edgelist"
    return parse_json_graph(text) if fmt == "json" else parse_edge_list(text)


# -- per-command payloads --------------------------------------------------------
# Each returns (json payload, text lines, exit code) for one input graph.


def _components(g: Graph):
    return connected_components(g) if g.n else []


def _cmd_analyze(g, budgets, opts):
    rep = analysis_report(g, budgets, timings=not opts.no_timings, source=opts.source)
    return rep, _analyze_text(rep), EXIT_OK if rep["complete"] else EXIT_BUDGET


def _analyze_text(rep):
    lines = [f"graph: n={rep['n']} m={rep['m']} components={len(rep['components'])}"]
    for i, c in enumerate(rep["components"], start=1):
        head = f"component {i} (vertices {' '.join(map(str, c['vertices']))})"
        if not c["complete"]:
            lines.append(f"{head}: incomplete ({c['reason']}); normal={c['normal']}")
            continue
        lines.append(f"{head}: h={c['height']} mu={c['mu']} ci={c['ci']} normal={c['normal']} method={c['method']}")
        types = ", ".join(f"T{b['t_type']}" if not b["bipartite"] else "bipartite" for b in c["blocks"])
        lines.append(f"  blocks: [{types}] cut vertices: {c['cut_vertices']}")
        failed = [s["check"] for s in c["screen"] if not s["passed"]]
        lines.append(f"  screen: {'all passed' if not failed else 'failed ' + ', '.join(failed)}")
        for b in c["generators_text"]:
            lines.append(f"  generator: {b}")
    if rep["complete"]:
        lines.append(f"{'CI' if rep['ci'] else 'not CI'}: mu={rep['mu']} h={rep['height']}; {'normal' if rep['normal'] else 'not normal'}")
    else:
        lines.append("incomplete: budget exceeded")
    return lines


def _verdicts(g, budgets):
    out = []
    for h, vs in _components(g):
        out.append((vs, decide_ci(h, budgets)))
    return out


def _cmd_is_ci(g, budgets, opts):
    vs = _verdicts(g, budgets)
    ci = all(v.ci for _, v in vs)
    mu = sum(v.mu for _, v in vs)
    h = sum(v.height for _, v in vs)
    payload = {"ci": ci, "mu": mu, "height": h, "components": [{"vertices": list(c), "ci": v.ci, "mu": v.mu, "height": v.height, "method": v.method} for c, v in vs]}
    line = f"{'CI' if ci else 'not CI'}: mu={mu} h={h}"
    return payload, [line], EXIT_OK if ci else EXIT_FALSE


def _cmd_is_normal(g, budgets, opts):
    comps = []
    for h, vs in _components(g):
        ok, wit = is_normal(h)
        comps.append({"vertices": list(vs), "normal": ok, "witness": None if wit is None else [[vs[x - 1] for x in c.vertices] for c in wit]})
    normal = all(c["normal"] for c in comps)
    if normal:
        line = "normal"
    else:
        bad = next(c for c in comps if not c["normal"])
        a, b = ("-".join(map(str, cyc)) for cyc in bad["witness"])
        line = f"not normal: odd cycles {a} and {b}"
    return {"normal": normal, "components": comps}, [line], EXIT_OK if normal else EXIT_FALSE


def _cmd_blocks(g, budgets, opts):
    comps, lines = [], []
    for h, vs in _components(g):
        rep = {"vertices": list(vs), "graph": h.to_json(), "blocks": [], "cut_vertices": [], "tree": []}
        if h.m:
            d = decompose(h)
            rep.update(block_report(h, d, block_profiles(h, d)))
        comps.append(rep)
        lines.append(f"component (vertices {' '.join(map(str, vs))}): cut vertices {rep['cut_vertices']}")
        for i, b in enumerate(rep["blocks"], start=1):
            kind = "bipartite" if b["bipartite"] else f"T{b['t_type']}"
            lines.append(f"  block {i}: {kind} edges {b['edges']}")
    return {"components": comps}, lines, EXIT_OK


def _cmd_generators(g, budgets, opts):
    comps, lines = [], []
    for (h, vs), (_, v) in zip(_components(g), _verdicts(g, budgets)):
        rep = {"vertices": list(vs), "graph": h.to_json(), "mu": v.mu, "generators": [b.to_json() for b in v.generators]}
        if v.minimal is not None:
            rep["minimal_binomials"] = [{"walk": list(w.vertices), "binomial": str(b)} for w, b in v.minimal]
        comps.append(rep)
        lines.append(f"component (vertices {' '.join(map(str, vs))}): mu={v.mu}")
        lines.extend(f"  {b}" for b in v.generators)
    return {"components": comps}, lines, EXIT_OK


def _cmd_graver(g, budgets, opts):
    comps, lines = [], []
    for h, vs in _components(g):
        if h.m <= budgets.walk_edges:
            items = [{"walk": list(w.vertices), "binomial": str(b)} for w, b in enumerate_graver(h, budgets.walk_edges)]
            method = "walks"
        elif h.m <= budgets.fiber_edges:
            items = [{"walk": None, "binomial": str(b)} for b in graver_bruteforce(h, budgets.degree_bound)]
            method = "kernel search"
        else:
            raise BudgetExceeded(f"{h.m} edges exceed the walk and fiber budgets")
        comps.append({"vertices": list(vs), "graph": h.to_json(), "method": method, "graver": items})
        lines.append(f"component (vertices {' '.join(map(str, vs))}): {len(items)} elements")
        lines.extend(f"  {it['binomial']}" for it in items)
    return {"components": comps}, lines, EXIT_OK


def _cmd_oracle(g, budgets, opts):
    comps, lines = [], []
    for h, vs in _components(g):
        if h.m == 0:
            res = {"mu": 0, "per_degree": [], "generators": []}
            gens = []
        else:
            if h.m > budgets.fiber_edges:
                raise OracleBudgetExceeded(f"{h.m} edges exceed the fiber budget of {budgets.fiber_edges}")
            mr = markov_mu(h, graver_bruteforce(h, budgets.degree_bound), budget_edges=budgets.fiber_edges)
            res, gens = mr.to_json(), mr.generators
        comps.append({"vertices": list(vs), "graph": h.to_json(), **res})
        lines.append(f"component (vertices {' '.join(map(str, vs))}): mu={res['mu']}")
        for d in res["per_degree"]:
            lines.append(f"  degree {d['degree']}: {d['count']}")
        lines.extend(f"  {b}" for b in gens)
    mu = sum(c["mu"] for c in comps)
    return {"mu": mu, "components": comps}, lines + [f"mu={mu}"], EXIT_OK


def _cmd_screen(g, budgets, opts):
    comps, lines, ok = [], [], True
    for h, vs in _components(g):
        rep = screen_structural(h, budgets)
        ok = ok and rep.passed
        comps.append({"vertices": list(vs), "graph": h.to_json(), "complete": rep.complete, "passed": rep.passed, "checks": rep.to_json()})
        lines.append(f"component (vertices {' '.join(map(str, vs))}): {'passed' if rep.passed else 'failed'}")
        for c in rep.checks:
            state = "skipped" if c.skipped else ("ok" if c.passed else "FAIL")
            lines.append(f"  {c.check}: {state}" + ("" if c.passed or c.witness is None else f" {c.witness}"))
    complete = all(c["complete"] for c in comps)
    payload = {"passed": ok, "complete": complete, "components": comps}
    if not complete and ok:
        return payload, lines, EXIT_BUDGET
    return payload, lines, EXIT_OK if ok else EXIT_FALSE


HANDLERS = {
    "analyze": _cmd_analyze,
    "is-ci": _cmd_is_ci,
    "is-normal": _cmd_is_normal,
    "blocks": _cmd_blocks,
    "generators": _cmd_generators,
    "graver": _cmd_graver,
    "oracle": _cmd_oracle,
    "screen": _cmd_screen,
}


# -- running one input --------------------------------------------------------------


def _envelope(opts, payload):
    if opts.command == "analyze":
        return payload
    return {"tool": TOOL, "version": __version__, "command": opts.command, "source": opts.source, **payload}


def run_one(opts, text: str) -> tuple[str, int]:
    """Analyze one input and return (rendered output, exit code)."""
    budgets = opts.budgets
    try:
        g = parse_graph(text, opts.format, opts.source or "")
    except GraphFormatError as exc:
        return _render_error(opts, "bad input", str(exc)), EXIT_BAD_INPUT
    except ValueError as exc:
        return _render_error(opts, "bad input", str(exc)), EXIT_BAD_INPUT
    try:
        payload, lines, code = HANDLERS[opts.command](g, budgets, opts)
    except (BudgetExceeded, OracleBudgetExceeded) as exc:
        return _render_error(opts, "incomplete", str(exc)), EXIT_BUDGET
    except Exception as exc:  # surfaced as exit 1, never a traceback
        return _render_error(opts, "error", f"{type(exc).__name__}: {exc}"), EXIT_ERROR
    if opts.out == "json":
        return dumps(_envelope(opts, payload)) + "\n", code
    return "\n".join(lines) + "\n", code


def _render_error(opts, status, message):
    if opts.out == "json":
        body = {"tool": TOOL, "version": __version__, "command": opts.command, "source": opts.source, "status": status, "complete": False, "message": message}
        return dumps(body) + "\n"
    return f"{status}: {message}\n"


def _worker(args):
    opts, path = args
    opts.source = path.name
    try:
        text = path.read_text()
    except OSError as exc:
        return _render_error(opts, "bad input", str(exc)), EXIT_BAD_INPUT
    return run_one(opts, text)


def worst(codes) -> int:
    codes = set(codes)
    for c in _SEVERITY:
        if c in codes:
            return c
    return EXIT_OK


def run_batch(opts, directory: Path, out) -> int:
    files = sorted(p for p in directory.iterdir() if p.is_file())
    tasks = [(opts, p) for p in files]
    if opts.jobs > 1:
        with ProcessPoolExecutor(max_workers=opts.jobs) as pool:
            results = list(pool.map(_worker, tasks))
    else:
        results = [_worker(t) for t in tasks]
    if opts.out == "json":
        docs = [f'{{"file": {dumps(p.name)}, "exit": {code}, "report": {_indent(text.rstrip())}}}' for p, (text, code) in zip(files, results)]
        out.write("[\n" + ",\n".join(docs) + "\n]\n" if docs else "[]\n")
    else:
        for p, (text, code) in zip(files, results):
            out.write(f"== {p.name} (exit {code})\n{text}")
    return worst(code for _, code in results) if results else EXIT_OK


def _indent(text):
    return text.replace("\n", "\n  ")


# -- argument parsing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog=TOOL, description="Complete intersection and normality checks for graph toric ideals.")
    p.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", default="-", help="graph file, directory (batch), or - for stdin")
    p.add_argument("--format", choices=("edgelist", "json"), default=None, help="input format (default: guess)")
    p.add_argument("--out", choices=("json", "text"), default="text")
    p.add_argument("--budget-edges", type=int, default=None, help="edge limit for walk enumeration (env TORIC_BUDGET_EDGES)")
    p.add_argument("--fiber-budget-edges", type=int, default=Budgets.fiber_edges, help="edge limit for the fiber oracle")
    p.add_argument("--degree-bound", type=int, default=None, help="total degree bound for the kernel search")
    p.add_argument("--no-timings", action="store_true", help="omit timings so reports are byte-reproducible")
    p.add_argument("--seed", type=int, default=None, help="accepted for compatibility; no command is randomized")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers in batch mode")
    return p


def _budget_edges(arg) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("TORIC_BUDGET_EDGES")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"{TOOL}: TORIC_BUDGET_EDGES must be an integer, got {env!r}") from None
    return Budgets.walk_edges


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        opts = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    try:
        walk = _budget_edges(opts.budget_edges)
    except SystemExit as exc:
        print(exc, file=sys.stderr)
        return EXIT_BAD_INPUT
    if walk < 0 or opts.fiber_budget_edges < 0 or (opts.degree_bound is not None and opts.degree_bound < 1) or opts.jobs < 1:
        print(f"{TOOL}: budgets and --jobs must be positive", file=sys.stderr)
        return EXIT_BAD_INPUT
    opts.budgets = Budgets(walk, opts.fiber_budget_edges, opts.degree_bound)
    if opts.input == "-":
        opts.source = None
        text, code = run_one(opts, stdin.read())
        stdout.write(text)
        return code
    path = Path(opts.input)
    if path.is_dir():
        opts.source = None
        return run_batch(opts, path, stdout)
    text, code = _worker((opts, path))
    opts.source = path.name
    stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
