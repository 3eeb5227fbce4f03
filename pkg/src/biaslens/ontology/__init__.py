from .models import ObjectDecl, OntologyDocument, RelationshipDecl
from .prompt import build_prompt
from .parse import ParseError, parse_reply
from .extract import (
    CannedReplyClient,
    HttpLlmClient,
    RequestBudget,
    BudgetExhausted,
    extract,
    extract_batch,
)
from .consistency import ConsistencyReport, check_consistency, prune
from .graph import OntologyGraph, build_graph, communities, filter_graph
from .export import edges_to_csv, graph_from_csv, graph_to_gexf

__all__ = [
    "ObjectDecl",
    "OntologyDocument",
    "RelationshipDecl",
    "build_prompt",
    "ParseError",
    "parse_reply",
    "CannedReplyClient",
    "HttpLlmClient",
    "RequestBudget",
    "BudgetExhausted",
    "extract",
    "extract_batch",
    "ConsistencyReport",
    "check_consistency",
    "prune",
    "OntologyGraph",
    "build_graph",
    "communities",
    "filter_graph",
    "edges_to_csv",
    "graph_from_csv",
    "graph_to_gexf",
]
