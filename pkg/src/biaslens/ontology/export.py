"""Graph serialization: GEXF 1.3 and a flat edge CSV, both round-trippable
enough for external graph tooling."""

from __future__ import annotations

import csv
import io
import json
import xml.etree.ElementTree as ET
from pathlib import Path

from .graph import GraphEdge, GraphNode, OntologyGraph

GEXF_NS = "http://gexf.net/1.3"

NODE_ATTRS = (("0", "degree", "integer"), ("1", "community_id", "integer"),
              ("2", "merged_labels", "string"))
EDGE_ATTRS = (("0", "label", "string"), ("1", "article_id", "string"),
              ("2", "newspaper_id", "string"))

CSV_COLUMNS = ("source", "target", "label", "article_id", "newspaper_id",
               "source_degree", "target_degree", "source_community",
               "target_community")


def graph_to_gexf(graph: OntologyGraph) -> str:
    ET.register_namespace("", GEXF_NS)
    root = ET.Element(f"{{{GEXF_NS}}}gexf", version="1.3")
    g = ET.SubElement(root, f"{{{GEXF_NS}}}graph", defaultedgetype="directed")

    for cls, attrs in (("node", NODE_ATTRS), ("edge", EDGE_ATTRS)):
        block = ET.SubElement(g, f"{{{GEXF_NS}}}attributes")
        block.set("class", cls)
        for aid, title, typ in attrs:
            ET.SubElement(
                block, f"{{{GEXF_NS}}}attribute", id=aid, title=title, type=typ
            )

    nodes_el = ET.SubElement(g, f"{{{GEXF_NS}}}nodes")
    for nid in sorted(graph.nodes):
        node = graph.nodes[nid]
        el = ET.SubElement(
            nodes_el, f"{{{GEXF_NS}}}node", id=str(nid), label=node.label
        )
        values = ET.SubElement(el, f"{{{GEXF_NS}}}attvalues")
        for aid, value in (
            ("0", str(node.degree)),
            ("1", str(node.community_id)),
            ("2", json.dumps(node.merged_labels, ensure_ascii=False)),
        ):
            ET.SubElement(values, f"{{{GEXF_NS}}}attvalue")
            values[-1].set("for", aid)
            values[-1].set("value", value)

    edges_el = ET.SubElement(g, f"{{{GEXF_NS}}}edges")
    for i, edge in enumerate(graph.edges):
        el = ET.SubElement(
            edges_el,
            f"{{{GEXF_NS}}}edge",
            id=str(i),
            source=str(edge.from_node),
            target=str(edge.to_node),
            label=edge.label,
        )
        values = ET.SubElement(el, f"{{{GEXF_NS}}}attvalues")
        for aid, value in (
            ("0", edge.label),
            ("1", edge.article_id),
            ("2", edge.newspaper_id),
        ):
            ET.SubElement(values, f"{{{GEXF_NS}}}attvalue")
            values[-1].set("for", aid)
            values[-1].set("value", value)

    ET.indent(root)
    return ET.tostring(root, encoding="unicode", xml_declaration=True) + "\n"


def edges_to_csv(graph: OntologyGraph) -> str:
    """Flat edge list carrying the same columns as the GEXF attributes."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for edge in graph.edges:
        src = graph.nodes[edge.from_node]
        dst = graph.nodes[edge.to_node]
        writer.writerow(
            [src.label, dst.label, edge.label, edge.article_id,
             edge.newspaper_id, src.degree, dst.degree,
             src.community_id, dst.community_id]
        )
    return buf.getvalue()


def graph_from_csv(text: str) -> OntologyGraph:
    """Rebuild a graph from an edge CSV; labels are taken verbatim."""
    graph = OntologyGraph()
    key_to_id: dict[str, int] = {}

    def node_for(label: str, degree: str, community: str) -> int:
        key = label.casefold()
        if key not in key_to_id:
            nid = len(key_to_id)
            key_to_id[key] = nid
            graph.nodes[nid] = GraphNode(
                node_id=nid,
                label=label,
                merged_labels=[label],
                degree=int(degree or 0),
                community_id=int(community or -1),
            )
        return key_to_id[key]

    for row in csv.DictReader(io.StringIO(text)):
        src = node_for(row["source"], row.get("source_degree", "0"),
                       row.get("source_community", "-1"))
        dst = node_for(row["target"], row.get("target_degree", "0"),
                       row.get("target_community", "-1"))
        graph.edges.append(
            GraphEdge(
                label=row["label"],
                from_node=src,
                to_node=dst,
                article_id=row["article_id"],
                newspaper_id=row["newspaper_id"],
            )
        )
    return graph


def write_gexf(graph: OntologyGraph, path: str | Path) -> None:
    Path(path).write_text(graph_to_gexf(graph), encoding="utf-8")
