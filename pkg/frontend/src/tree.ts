/** Topic browser: hierarchy list with a level slider. */

import { fmt } from "./format.js";
import type { TopicNode } from "./types.js";

export interface TreeCallbacks {
  onSelect: (topicId: number) => void;
  onLevel: (level: number) => void;
}

export function maxLevel(nodes: TopicNode[]): number {
  return Math.max(0, ...nodes.map((n) => n.level));
}

/**
 * Topics visible at a level cut: level <= cut and the parent, if any, above
 * the cut. Noise (-1) stays out of the tree panel.
 */
export function nodesAtLevel(nodes: TopicNode[], level: number): TopicNode[] {
  const byId = new Map(nodes.map((n) => [n.topic_id, n]));
  return nodes
    .filter((n) => {
      if (n.topic_id === -1 || n.level > level) return false;
      const parent = n.parent_id === null ? null : byId.get(n.parent_id);
      return parent === null || parent === undefined || parent.level > level;
    })
    .sort((a, b) => a.topic_id - b.topic_id);
}

export function renderTree(
  container: HTMLElement,
  nodes: TopicNode[],
  level: number,
  selected: number | null,
  callbacks: TreeCallbacks,
): void {
  container.textContent = "";
  const top = maxLevel(nodes);

  const sliderRow = document.createElement("div");
  sliderRow.className = "level-row";
  const label = document.createElement("label");
  label.textContent = `level ${fmt(level)}`;
  const slider = document.createElement("input");
  slider.type = "range";
  slider.min = "0";
  slider.max = String(top);
  slider.value = String(level);
  slider.className = "level-slider";
  slider.addEventListener("input", () => callbacks.onLevel(Number(slider.value)));
  sliderRow.append(slider, label);
  container.appendChild(sliderRow);

  const list = document.createElement("ul");
  list.className = "topic-list";
  for (const node of nodesAtLevel(nodes, level)) {
    const item = document.createElement("li");
    item.className = "topic-item" + (node.topic_id === selected ? " selected" : "");
    item.dataset.topicId = String(node.topic_id);
    const name = document.createElement("span");
    name.className = "topic-name";
    name.textContent = node.name;
    name.title = node.name;
    const count = document.createElement("span");
    count.className = "article-count";
    count.textContent = fmt(node.article_count);
    item.append(name, count);
    item.addEventListener("click", () => callbacks.onSelect(node.topic_id));
    list.appendChild(item);
  }
  container.appendChild(list);
}
