/**
 * Ontology graph panel: force-directed layout, node size by degree, color
 * by community, with chips that narrow the core reference ontology to a
 * newspaper (domain) or a single article (local).
 */

import { fmt } from "./format.js";
import type { OntologyFilter, OntologyGraph } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 560;
const HEIGHT = 460;

export interface OntologyCallbacks {
  onFilter: (filter: OntologyFilter) => void;
}

const PALETTE = [
  "#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2",
  "#b279a2", "#eeca3b", "#9d755d", "#bab0ac", "#6b4c9a",
];

export function communityColor(communityId: number): string {
  return PALETTE[((communityId % PALETTE.length) + PALETTE.length) % PALETTE.length];
}

interface LaidOutNode {
  id: number;
  x: number;
  y: number;
  vx: number;
  vy: number;
}

/**
 * Small deterministic force simulation: seeded circular start, spring edges,
 * pairwise repulsion, fixed step count. No randomness, so a given graph
 * always lays out the same way.
 */
export function forceLayout(
  graph: OntologyGraph,
  steps = 120,
): Map<number, { x: number; y: number }> {
  const nodes: LaidOutNode[] = graph.nodes.map((n, i) => {
    const angle = (2 * Math.PI * i) / Math.max(1, graph.nodes.length);
    return {
      id: n.node_id,
      x: WIDTH / 2 + 150 * Math.cos(angle),
      y: HEIGHT / 2 + 150 * Math.sin(angle),
      vx: 0,
      vy: 0,
    };
  });
  const index = new Map(nodes.map((n) => [n.id, n]));
  const springLength = 90;
  for (let step = 0; step < steps; step++) {
    for (let i = 0; i < nodes.length; i++) {
      for (let j = i + 1; j < nodes.length; j++) {
        const a = nodes[i];
        const b = nodes[j];
        const dx = b.x - a.x;
        const dy = b.y - a.y;
        const d2 = Math.max(25, dx * dx + dy * dy);
        const push = 2200 / d2;
        const d = Math.sqrt(d2);
        a.vx -= (dx / d) * push;
        a.vy -= (dy / d) * push;
        b.vx += (dx / d) * push;
        b.vy += (dy / d) * push;
      }
    }
    for (const edge of graph.edges) {
      const a = index.get(edge.from_node);
      const b = index.get(edge.to_node);
      if (!a || !b || a === b) continue;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const d = Math.max(5, Math.hypot(dx, dy));
      const pull = 0.01 * (d - springLength);
      a.vx += (dx / d) * pull;
      a.vy += (dy / d) * pull;
      b.vx -= (dx / d) * pull;
      b.vy -= (dy / d) * pull;
    }
    for (const node of nodes) {
      node.x = Math.min(WIDTH - 20, Math.max(20, node.x + node.vx));
      node.y = Math.min(HEIGHT - 20, Math.max(20, node.y + node.vy));
      node.vx *= 0.55;
      node.vy *= 0.55;
    }
  }
  return new Map(nodes.map((n) => [n.id, { x: n.x, y: n.y }]));
}

export function renderOntology(
  container: HTMLElement,
  graph: OntologyGraph,
  filter: OntologyFilter,
  callbacks: OntologyCallbacks,
): void {
  container.textContent = "";

  const chips = document.createElement("div");
  chips.className = "chips";
  const newspapers = [...new Set(graph.edges.map((e) => e.newspaper_id))].sort();
  const articles = [...new Set(graph.edges.map((e) => e.article_id))].sort();
  chips.appendChild(
    chip("core", filter.kind === "none", () => callbacks.onFilter({ kind: "none" })),
  );
  for (const np of newspapers) {
    chips.appendChild(
      chip(
        np,
        filter.kind === "newspaper" && filter.newspaper === np,
        () => callbacks.onFilter({ kind: "newspaper", newspaper: np }),
        "chip-newspaper",
      ),
    );
  }
  for (const article of articles) {
    chips.appendChild(
      chip(
        article,
        filter.kind === "article" && filter.article === article,
        () => callbacks.onFilter({ kind: "article", article }),
        "chip-article",
      ),
    );
  }
  container.appendChild(chips);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute("class", "ontology");
  const positions = forceLayout(graph);
  const maxDegree = Math.max(1, ...graph.nodes.map((n) => n.degree));

  for (const edge of graph.edges) {
    const a = positions.get(edge.from_node);
    const b = positions.get(edge.to_node);
    if (!a || !b) continue;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("class", "edge");
    line.setAttribute("x1", String(a.x));
    line.setAttribute("y1", String(a.y));
    line.setAttribute("x2", String(b.x));
    line.setAttribute("y2", String(b.y));
    const tip = document.createElementNS(SVG_NS, "title");
    tip.textContent = `${edge.label} (${edge.article_id}, ${edge.newspaper_id})`;
    line.appendChild(tip);
    svg.appendChild(line);
  }
  for (const node of graph.nodes) {
    const pos = positions.get(node.node_id);
    if (!pos) continue;
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", "node");
    group.dataset.nodeId = String(node.node_id);
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(pos.x));
    circle.setAttribute("cy", String(pos.y));
    circle.setAttribute("r", String(5 + 13 * Math.sqrt(node.degree / maxDegree)));
    circle.setAttribute("fill", communityColor(node.community_id));
    const tip = document.createElementNS(SVG_NS, "title");
    tip.textContent = `${node.label}\ndegree: ${fmt(node.degree)}`;
    circle.appendChild(tip);
    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(pos.x + 8));
    text.setAttribute("y", String(pos.y - 8));
    text.textContent = node.label;
    group.append(circle, text);
    svg.appendChild(group);
  }
  container.appendChild(svg);

  const counts = document.createElement("div");
  counts.className = "graph-counts";
  counts.textContent = `${fmt(graph.nodes.length)} nodes, ${fmt(graph.edges.length)} edges`;
  container.appendChild(counts);
}

function chip(
  text: string,
  active: boolean,
  onClick: () => void,
  extra = "",
): HTMLElement {
  const el = document.createElement("button");
  el.className = `chip ${extra}` + (active ? " active" : "");
  el.textContent = text;
  el.addEventListener("click", onClick);
  return el;
}
