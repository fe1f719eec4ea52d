"""Complete-intersection and normality analysis of graph toric ideals."""

__version__ = "0.1.0"

from .analyzer import Budgets, analyze_connected, decide_ci, is_normal, screen_structural  # noqa: E402
from .binomial import Binomial  # noqa: E402
from .graph_model import Graph, parse_edge_list, parse_json_graph  # noqa: E402

__all__ = [
    "Binomial",
    "Budgets",
    "Graph",
    "analyze_connected",
    "decide_ci",
    "is_normal",
    "parse_edge_list",
    "parse_json_graph",
    "screen_structural",
    "__version__",
]
