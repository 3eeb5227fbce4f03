/** Cross-topic sentiment deviation bars, sorted ascending by deviation. */

import { fmt, signClass } from "./format.js";
import type { SentimentRow } from "./types.js";

export function renderCrossTopic(
  container: HTMLElement,
  rows: SentimentRow[],
): void {
  container.textContent = "";
  const list = document.createElement("div");
  list.className = "bars";
  const sorted = [...rows].sort(
    (a, b) => a.sentiment_deviation - b.sentiment_deviation,
  );
  const maxAbs = Math.max(1e-9, ...rows.map((r) => Math.abs(r.sentiment_deviation)));
  for (const row of sorted) {
    const item = document.createElement("div");
    item.className = "bar-row";
    const label = document.createElement("span");
    label.className = "bar-label";
    label.textContent = row.newspaper_id;
    const bar = document.createElement("span");
    bar.className = `bar ${signClass(row.sentiment_deviation)}`;
    bar.style.width = `${(Math.abs(row.sentiment_deviation) / maxAbs) * 160}px`;
    const value = document.createElement("span");
    value.className = "bar-value";
    value.textContent = fmt(row.sentiment_deviation);
    item.append(label, bar, value);
    list.appendChild(item);
  }
  container.appendChild(list);
}
