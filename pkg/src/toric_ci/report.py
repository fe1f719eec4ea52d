"""JSON analysis reports over possibly disconnected graphs."""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .analyzer import Analysis, Budgets, analyze_connected, is_normal
from .blocks import block_profiles, block_report, decompose
from .fiber import OracleBudgetExceeded
from .graph_model import Graph, connected_components
from .walks import BudgetExceeded

TOOL = "toric-ci"


def _cycles(pair):
    return None if pair is None else [list(c.vertices) for c in pair]


def component_report(g: Graph, vertices, budgets: Budgets, timings: bool = True) -> dict:
    """Report for one connected component (vertices are the original labels)."""
    t0 = time.perf_counter()
    rep = {
        "vertices": list(vertices),
        "graph": g.to_json(),
        "complete": True,
    }
    try:
        a = analyze_connected(g, budgets)
    except (BudgetExceeded, OracleBudgetExceeded) as exc:
        rep["complete"] = False
        rep["reason"] = str(exc)
        normal, wit = is_normal(g)
        rep["normal"] = normal
        rep["normal_witness"] = _cycles(wit)
        if g.m:
            d = decompose(g)
            rep.update(block_report(g, d, block_profiles(g, d)))
        if timings:
            rep["seconds"] = round(time.perf_counter() - t0, 6)
        return rep
    rep.update(_analysis_json(a))
    if timings:
        rep["seconds"] = round(time.perf_counter() - t0, 6)
    return rep


def _analysis_json(a: Analysis) -> dict:
    v = a.verdict
    out = {
        "height": v.height,
        "mu": v.mu,
        "ci": v.ci,
        "normal": a.normal,
        "normal_witness": _cycles(a.normal_witness),
        "method": v.method,
    }
    if a.decomposition is not None:
        out.update(block_report(a.graph, a.decomposition, a.profiles))
    else:
        out.update({"blocks": [], "cut_vertices": [], "tree": []})
    out["screen"] = a.screen.to_json()
    out["generators"] = [b.to_json() for b in v.generators]
    out["generators_text"] = [str(b) for b in v.generators]
    if v.minimal is not None:
        out["minimal_binomials"] = [{"walk": list(w.vertices), "binomial": str(b)} for w, b in v.minimal]
    if v.graver is not None:
        out["graver"] = [str(b) for b in v.graver]
    if v.structural is not None:
        out["structural"] = v.structural.to_json()
    if a.normality_check is not None:
        nc = a.normality_check
        out["normality_criterion"] = {"normal": nc.normal, "criterion": nc.criterion, "nonbipartite_blocks": nc.nonbipartite_blocks}
    return out


def analysis_report(g: Graph, budgets: Budgets = Budgets(), timings: bool = True, source: str | None = None) -> dict:
    comps = connected_components(g) if g.n else []
    reports = [component_report(h, vs, budgets, timings) for h, vs in comps]
    complete = all(r["complete"] for r in reports)
    rep = {
        "tool": TOOL,
        "version": __version__,
        "source": source,
        "budgets": budgets.to_json(),
        "n": g.n,
        "m": g.m,
        "complete": complete,
        "ci": all(r.get("ci") for r in reports) if complete else None,
        "normal": all(r["normal"] for r in reports),
        "components": reports,
    }
    if complete:
        rep["mu"] = sum(r["mu"] for r in reports)
        rep["height"] = sum(r["height"] for r in reports)
    return rep


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _report_job(args):
    g, budgets, timings, source = args
    return dumps(analysis_report(g, budgets, timings, source))


def analysis_reports(items, budgets: Budgets = Budgets(), timings: bool = False, jobs: int = 1) -> list[str]:
    """Serialized reports for ``(source, graph)`` items, in input order.

    With ``jobs > 1`` the graphs are analyzed in worker processes; each
    report is serialized in its worker so output never interleaves.
    """
    tasks = [(g, budgets, timings, src) for src, g in items]
    if jobs <= 1:
        return [_report_job(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_report_job, tasks, chunksize=4))


__all__ = ["analysis_report", "analysis_reports", "component_report", "dumps"]
