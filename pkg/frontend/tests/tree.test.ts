import { describe, expect, it } from "vitest";

import { maxLevel, nodesAtLevel, renderTree } from "../src/tree.js";
import type { TopicNode } from "../src/types.js";
import { container, fixture } from "./helpers.js";

const tree = fixture<TopicNode[]>("topics");

describe("level cut", () => {
  it("base level lists exactly the leaf topics", () => {
    const leaves = tree.filter((n) => n.level === 0 && n.topic_id !== -1);
    const cut = nodesAtLevel(tree, 0);
    expect(cut.map((n) => n.topic_id).sort()).toEqual(
      leaves.map((n) => n.topic_id).sort(),
    );
  });

  it("every cut covers the same article total", () => {
    const total = nodesAtLevel(tree, 0).reduce((s, n) => s + n.article_count, 0);
    for (let level = 1; level <= maxLevel(tree); level++) {
      const sum = nodesAtLevel(tree, level).reduce(
        (s, n) => s + n.article_count,
        0,
      );
      expect(sum).toBe(total);
    }
  });

  it("a selected upper-level node counts the sum of its leaves", () => {
    const byId = new Map(tree.map((n) => [n.topic_id, n]));
    const upper = tree.filter((n) => n.level >= 2);
    expect(upper.length).toBeGreaterThan(0);
    for (const node of upper) {
      const leafSum = (id: number): number => {
        const rec = byId.get(id)!;
        if (rec.children.length === 0) return rec.article_count;
        return rec.children.reduce((s, c) => s + leafSum(c), 0);
      };
      expect(node.article_count).toBe(leafSum(node.topic_id));
    }
  });
});

describe("tree panel", () => {
  it("renders one item per visible topic and reacts to clicks", () => {
    const host = container();
    const selections: number[] = [];
    renderTree(host, tree, 0, null, {
      onSelect: (id) => selections.push(id),
      onLevel: () => undefined,
    });
    const items = host.querySelectorAll(".topic-item");
    expect(items.length).toBe(nodesAtLevel(tree, 0).length);
    (items[0] as HTMLElement).click();
    expect(selections.length).toBe(1);
  });

  it("displays article counts verbatim from the API payload", () => {
    const host = container();
    renderTree(host, tree, 0, null, {
      onSelect: () => undefined,
      onLevel: () => undefined,
    });
    for (const item of host.querySelectorAll(".topic-item")) {
      const id = Number((item as HTMLElement).dataset.topicId);
      const node = tree.find((n) => n.topic_id === id)!;
      expect(item.querySelector(".article-count")!.textContent).toBe(
        String(node.article_count),
      );
    }
  });

  it("level slider reports the chosen level", () => {
    const host = container();
    const levels: number[] = [];
    renderTree(host, tree, 0, null, {
      onSelect: () => undefined,
      onLevel: (level) => levels.push(level),
    });
    const slider = host.querySelector(".level-slider") as HTMLInputElement;
    slider.value = "2";
    slider.dispatchEvent(new Event("input"));
    expect(levels).toEqual([2]);
  });
});
