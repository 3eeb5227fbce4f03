/** Application wiring: state changes fan out to panel refetches. */

import { ApiClient } from "./api.js";
import { renderCrossTopic } from "./crosstopic.js";
import { fmt } from "./format.js";
import { renderMap } from "./mapview.js";
import { renderOntology } from "./ontology.js";
import { renderSpectrum } from "./spectrum.js";
import { StateStore } from "./state.js";
import { renderTree } from "./tree.js";
import type { EntityRow, TopicNode } from "./types.js";

export function startApp(
  root: Document,
  api: ApiClient,
  store = new StateStore(),
): StateStore {
  const panel = (id: string) => root.getElementById(id) as HTMLElement;
  let tree: TopicNode[] = [];

  async function refreshTree(signal: AbortSignal, state = store.current) {
    tree = await api.topics(signal);
    renderTree(panel("tree"), tree, state.level, state.topicId, {
      onSelect: (topicId) => store.update({ topicId }),
      onLevel: (level) => store.update({ level }),
    });
  }

  async function refreshTopicPanels(signal: AbortSignal) {
    const state = store.current;
    if (state.topicId === null) return;
    const id = state.topicId;

    const detail = await api.topicDetail(id, signal);
    const header = panel("topic-header");
    header.textContent = "";
    const title = root.createElement("h2");
    title.textContent =
      `${detail.name} (level ${fmt(detail.level)}, ` +
      `${fmt(detail.article_count)} articles)`;
    const terms = root.createElement("div");
    terms.className = "terms";
    terms.textContent = detail.top_terms.map(([t]) => t).join(", ");
    header.append(title, terms);
    if (detail.quality_flags.length) {
      const flags = root.createElement("div");
      flags.className = "quality-flags";
      flags.textContent = `quality flags: ${detail.quality_flags.join(", ")}`;
      header.appendChild(flags);
    }

    const points = await api.spectrum(id, state.spectrumMode, signal);
    renderSpectrum(panel("spectrum"), points, {
      onPointClick: async (newspaperId) => {
        const rows = await api.articles(id, newspaperId);
        const out = panel("articles");
        out.textContent = "";
        const heading = root.createElement("h3");
        heading.textContent = `${newspaperId} articles`;
        out.appendChild(heading);
        const list = root.createElement("ul");
        for (const row of rows) {
          const item = root.createElement("li");
          item.textContent = row.title;
          list.appendChild(item);
        }
        out.appendChild(list);
      },
    });

    const entities = await api.entities(id, signal);
    renderEntityTable(panel("entities"), entities);

    const graph = await api.ontology(id, state.ontologyFilter, signal);
    renderOntology(panel("ontology"), graph, state.ontologyFilter, {
      onFilter: (ontologyFilter) => store.update({ ontologyFilter }),
    });

    renderMap(panel("map"), await api.map(id, signal));
  }

  function renderEntityTable(container: HTMLElement, rows: EntityRow[]) {
    container.textContent = "";
    const table = root.createElement("table");
    table.className = "entity-table";
    const head = root.createElement("tr");
    for (const column of ["entity", "group", "mentions", "mean sentiment"]) {
      const th = root.createElement("th");
      th.textContent = column;
      head.appendChild(th);
    }
    table.appendChild(head);
    for (const row of rows) {
      const tr = root.createElement("tr");
      tr.className = "entity-row";
      tr.dataset.entity = `${row.surface}|${row.entity_group}`;
      for (const value of [
        row.surface,
        row.entity_group,
        fmt(row.mention_count),
        fmt(row.mean_simplified),
      ]) {
        const td = root.createElement("td");
        td.textContent = value;
        tr.appendChild(td);
      }
      tr.addEventListener("click", () =>
        store.update({
          spectrumMode: {
            kind: "entity",
            entity: `${row.surface}|${row.entity_group}`,
          },
        }),
      );
      table.appendChild(tr);
    }
    container.appendChild(table);
  }

  store.subscribe((state, signal) => {
    refreshTree(signal, state).catch(ignoreAbort);
    refreshTopicPanels(signal).catch(ignoreAbort);
  });

  const initial = store.update({});
  api
    .crossTopic("title")
    .then((rows) => renderCrossTopic(panel("cross-topic"), rows))
    .catch(ignoreAbort);
  refreshTree(initial).catch(ignoreAbort);
  return store;
}

function ignoreAbort(error: unknown): void {
  if ((error as { name?: string }).name !== "AbortError") throw error;
}
