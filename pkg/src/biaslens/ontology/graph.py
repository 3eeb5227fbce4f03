"""Ontology graphs: the all-articles core reference graph and its filters.

Nodes come from relationship endpoints, keyed case-insensitively; labels
that differ only in casing merge into one node whose label concatenates the
casings with "," in first-seen order. A user alias map can merge further
keys. Filtering by newspaper yields a domain ontology and by article a local
ontology; degrees are kept from the core graph by default so node sizes stay
comparable across filters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .models import OntologyDocument

MAX_PROPAGATION_SWEEPS = 100


@dataclass
class GraphNode:
    node_id: int
    label: str
    merged_labels: list[str]
    degree: int = 0
    community_id: int = -1

    def to_dict(self) -> dict:
        return {
            "node_id": self.node_id,
            "label": self.label,
            "merged_labels": list(self.merged_labels),
            "degree": self.degree,
            "community_id": self.community_id,
        }


@dataclass(frozen=True)
class GraphEdge:
    label: str
    from_node: int
    to_node: int
    article_id: str
    newspaper_id: str

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "from_node": self.from_node,
            "to_node": self.to_node,
            "article_id": self.article_id,
            "newspaper_id": self.newspaper_id,
        }


@dataclass
class OntologyGraph:
    nodes: dict[int, GraphNode] = field(default_factory=dict)
    edges: list[GraphEdge] = field(default_factory=list)

    def node_by_label(self, label: str) -> GraphNode | None:
        folded = label.casefold()
        for node in self.nodes.values():
            if any(l.casefold() == folded for l in node.merged_labels):
                return node
        return None

    def degree_sum(self) -> int:
        return sum(n.degree for n in self.nodes.values())

    def to_dict(self) -> dict:
        return {
            "nodes": [self.nodes[k].to_dict() for k in sorted(self.nodes)],
            "edges": [e.to_dict() for e in self.edges],
        }


def _recompute_degrees(graph: OntologyGraph) -> None:
    counts: Counter = Counter()
    for edge in graph.edges:
        counts[edge.from_node] += 1
        counts[edge.to_node] += 1
    for node in graph.nodes.values():
        node.degree = counts.get(node.node_id, 0)


def build_graph(
    documents: list[OntologyDocument],
    newspaper_by_article: dict[str, str],
    alias_map: dict[str, str] | None = None,
) -> OntologyGraph:
    """Core reference ontology over the pruned documents.

    Failed extractions contribute nothing. Documents are processed in
    article-id order so node ids and first-seen casings are reproducible.
    """
    aliases = {k.casefold(): v for k, v in (alias_map or {}).items()}
    graph = OntologyGraph()
    key_to_id: dict[str, int] = {}

    def node_for(raw_label: str) -> int:
        label = aliases.get(raw_label.casefold(), raw_label)
        key = label.casefold()
        if key not in key_to_id:
            nid = len(key_to_id)
            key_to_id[key] = nid
            graph.nodes[nid] = GraphNode(
                node_id=nid, label=label, merged_labels=[label]
            )
        else:
            node = graph.nodes[key_to_id[key]]
            if label not in node.merged_labels:
                node.merged_labels.append(label)
                node.label = ",".join(node.merged_labels)
        return key_to_id[key]

    for doc in sorted(documents, key=lambda d: d.article_id):
        if doc.failed:
            continue
        newspaper = newspaper_by_article.get(doc.article_id, "")
        for rel in doc.relationships:
            src = node_for(rel.from_object)
            dst = node_for(rel.to_object)
            graph.edges.append(
                GraphEdge(
                    label=rel.name,
                    from_node=src,
                    to_node=dst,
                    article_id=doc.article_id,
                    newspaper_id=newspaper,
                )
            )
    _recompute_degrees(graph)
    communities(graph)
    return graph


def filter_graph(
    graph: OntologyGraph,
    newspaper_id: str | None = None,
    article_id: str | None = None,
    article_ids: set[str] | None = None,
    recompute_degrees: bool = False,
) -> OntologyGraph:
    """Domain (newspaper) or local (article) subgraph of the core ontology.

    article_ids restricts to a topic's articles before the other filters.
    Node degrees and communities carry over unchanged unless asked to
    recompute, easing visual comparison against the core graph.
    """
    edges = [
        e
        for e in graph.edges
        if (article_ids is None or e.article_id in article_ids)
        and (newspaper_id is None or e.newspaper_id == newspaper_id)
        and (article_id is None or e.article_id == article_id)
    ]
    used = {e.from_node for e in edges} | {e.to_node for e in edges}
    sub = OntologyGraph(
        nodes={
            nid: GraphNode(
                node_id=nid,
                label=graph.nodes[nid].label,
                merged_labels=list(graph.nodes[nid].merged_labels),
                degree=graph.nodes[nid].degree,
                community_id=graph.nodes[nid].community_id,
            )
            for nid in sorted(used)
        },
        edges=edges,
    )
    if recompute_degrees:
        _recompute_degrees(sub)
    return sub


def communities(graph: OntologyGraph) -> dict[int, int]:
    """Deterministic synchronous label propagation.

    Labels start as node ids; every sweep each node adopts the smallest
    most-frequent label among itself and its neighbors (edge multiplicity
    counts). Stops at a fixpoint or after 100 sweeps. Isolated nodes keep
    their own label, ending up in singleton communities. Final ids are
    renumbered densely in node-id order.
    """
    node_ids = sorted(graph.nodes)
    neighbors: dict[int, Counter] = {nid: Counter() for nid in node_ids}
    for edge in graph.edges:
        neighbors[edge.from_node][edge.to_node] += 1
        neighbors[edge.to_node][edge.from_node] += 1
    labels = {nid: nid for nid in node_ids}
    for _ in range(MAX_PROPAGATION_SWEEPS):
        new_labels = {}
        for nid in node_ids:
            votes: Counter = Counter({labels[nid]: 1})
            for other, mult in neighbors[nid].items():
                votes[labels[other]] += mult
            top = max(votes.values())
            new_labels[nid] = min(l for l, c in votes.items() if c == top)
        if new_labels == labels:
            break
        labels = new_labels
    dense: dict[int, int] = {}
    for nid in node_ids:
        dense.setdefault(labels[nid], len(dense))
        graph.nodes[nid].community_id = dense[labels[nid]]
    return {nid: graph.nodes[nid].community_id for nid in node_ids}
