/**
 * App smoke test against the captured demo API: panels render, every
 * displayed number is verbatim in some API response, and stale fetches are
 * aborted when the selection changes.
 */

import { beforeEach, describe, expect, it } from "vitest";

import { startApp } from "../src/main.js";
import { renderCrossTopic } from "../src/crosstopic.js";
import { renderMap } from "../src/mapview.js";
import type {
  MapResponse,
  SentimentRow,
  SpectrumPoint,
  TopicNode,
} from "../src/types.js";
import {
  container,
  fixture,
  makeClient,
  meta,
  type RecordedRequest,
} from "./helpers.js";

const PANELS = [
  "tree", "topic-header", "spectrum", "entities",
  "ontology", "map", "cross-topic", "articles",
];

function mountDom(): void {
  document.body.innerHTML = PANELS
    .map((id) => `<div id="${id}"></div>`)
    .join("");
}

async function settle(): Promise<void> {
  for (let i = 0; i < 12; i++) await Promise.resolve();
  await new Promise((resolve) => setTimeout(resolve, 0));
}

describe("app smoke", () => {
  beforeEach(mountDom);

  it("topic tree renders and selecting a topic fills every panel", async () => {
    const requests: RecordedRequest[] = [];
    const store = startApp(document, makeClient(requests));
    await settle();
    expect(document.querySelectorAll("#tree .topic-item").length).toBeGreaterThan(0);

    store.update({ topicId: meta.base_topic });
    await settle();

    const points = fixture<SpectrumPoint[]>("spectrum_title");
    expect(document.querySelectorAll("#spectrum .mark").length).toBe(points.length);
    expect(document.querySelectorAll("#entities .entity-row").length).toBeGreaterThan(0);
    expect(document.querySelectorAll("#ontology .node").length).toBeGreaterThan(0);
    expect(document.querySelectorAll("#map .map-mark").length).toBeGreaterThan(0);
    const detail = fixture<{ name: string }>("topic_detail");
    const header = document.getElementById("topic-header")!.textContent!;
    expect(header).toContain(detail.name);
  });

  it("changing topic aborts the previous generation's fetches", async () => {
    const requests: RecordedRequest[] = [];
    const store = startApp(document, makeClient(requests));
    await settle();
    const first = store.update({ topicId: meta.base_topic });
    const second = store.update({ topicId: meta.base_topic });
    expect(first.aborted).toBe(true);
    expect(second.aborted).toBe(false);
    await settle();
  });

  it("no displayed number differs from its API source", async () => {
    startApp(document, makeClient()).update({ topicId: meta.base_topic });
    await settle();

    const tree = fixture<TopicNode[]>("topics");
    for (const item of document.querySelectorAll("#tree .topic-item")) {
      const id = Number((item as HTMLElement).dataset.topicId);
      const node = tree.find((n) => n.topic_id === id)!;
      expect(item.querySelector(".article-count")!.textContent).toBe(
        String(node.article_count),
      );
    }
    const points = fixture<SpectrumPoint[]>("spectrum_title");
    for (const mark of document.querySelectorAll("#spectrum .mark")) {
      const np = (mark as SVGElement).dataset.newspaper!;
      const point = points.find((p) => p.newspaper_id === np)!;
      const tip = mark.querySelector("title")!.textContent!;
      for (const value of [point.x, point.y, point.size, point.color_value]) {
        expect(tip).toContain(String(value));
      }
    }
  });

  it("clicking a spectrum point lists exactly that newspaper's titles", async () => {
    startApp(document, makeClient()).update({ topicId: meta.base_topic });
    await settle();
    const mark = document.querySelector("#spectrum .mark") as SVGElement;
    const np = mark.dataset.newspaper!;
    mark.dispatchEvent(new Event("click"));
    await settle();
    const titles = [...document.querySelectorAll("#articles li")].map(
      (li) => li.textContent,
    );
    const rows = fixture<Array<{ newspaper_id: string; title: string }>>(
      "articles",
    ).filter((r) => r.newspaper_id === np);
    expect(titles).toEqual(rows.map((r) => r.title));
  });
});

describe("map and cross-topic panels", () => {
  beforeEach(mountDom);

  it("negative rate deviation renders hollow, positive filled", () => {
    const data = fixture<MapResponse>("map");
    const host = container();
    renderMap(host, data);
    for (const mark of host.querySelectorAll(".map-mark")) {
      const np = (mark as SVGElement).dataset.newspaper!;
      const point = data.points.find((p) => p.newspaper_id === np)!;
      if (point.size_value < 0) {
        expect(mark.getAttribute("fill")).toBe("none");
      } else {
        expect(mark.getAttribute("fill")).not.toBe("none");
      }
    }
  });

  it("bar order matches deviations sorted ascending", () => {
    const rows = fixture<SentimentRow[]>("cross_topic");
    const host = container();
    renderCrossTopic(host, rows);
    const labels = [...host.querySelectorAll(".bar-label")].map(
      (el) => el.textContent,
    );
    const expected = [...rows]
      .sort((a, b) => a.sentiment_deviation - b.sentiment_deviation)
      .map((r) => r.newspaper_id);
    expect(labels).toEqual(expected);
    for (const row of host.querySelectorAll(".bar-row")) {
      const np = row.querySelector(".bar-label")!.textContent!;
      const source = rows.find((r) => r.newspaper_id === np)!;
      expect(row.querySelector(".bar-value")!.textContent).toBe(
        String(source.sentiment_deviation),
      );
    }
  });
});
