/** Fixture-backed fetch stub: responses captured from the demo project API. */

import { readFileSync } from "node:fs";
import { join } from "node:path";

import { ApiClient } from "../src/api.js";

const FIXTURES = join(__dirname, "fixtures");

export function fixture<T = unknown>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURES, `${name}.json`), "utf-8")) as T;
}

export const meta = fixture<{
  base_topic: number;
  entity_key: string;
  domain_newspaper: string;
  local_article: string;
}>("meta");

/** Routes GET paths to fixture payloads the way the live API would. */
export function routeToFixture(path: string): unknown {
  const t = meta.base_topic;
  const url = new URL(path, "http://test");
  const p = url.pathname;
  const q = url.searchParams;
  if (p === "/api/topics") return fixture("topics");
  if (p === `/api/topics/${t}`) return fixture("topic_detail");
  if (p === `/api/topics/${t}/spectrum`) {
    if (q.get("mode") === "entity" && q.get("entity") === meta.entity_key) {
      return fixture("spectrum_entity");
    }
    return fixture("spectrum_title");
  }
  if (p === `/api/topics/${t}/entities`) return fixture("entities");
  if (p === `/api/topics/${t}/ontology`) {
    if (q.get("newspaper") === meta.domain_newspaper) return fixture("ontology_domain");
    if (q.get("article") === meta.local_article) return fixture("ontology_local");
    return fixture("ontology_core");
  }
  if (p === `/api/topics/${t}/map`) return fixture("map");
  if (p === "/api/cross-topic") return fixture("cross_topic");
  if (p === "/api/newspapers") return fixture("newspapers");
  if (p === `/api/topics/${t}/articles`) {
    const rows = fixture<Array<{ newspaper_id: string }>>("articles");
    const np = q.get("newspaper");
    return np ? rows.filter((r) => r.newspaper_id === np) : rows;
  }
  throw new Error(`no fixture for ${path}`);
}

export interface RecordedRequest {
  path: string;
  signal: AbortSignal | undefined;
}

export function makeClient(requests: RecordedRequest[] = []): ApiClient {
  const stub = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const path = String(input);
    requests.push({ path, signal: init?.signal ?? undefined });
    if (init?.signal?.aborted) {
      throw Object.assign(new Error("aborted"), { name: "AbortError" });
    }
    const payload = routeToFixture(path);
    return {
      ok: true,
      status: 200,
      json: async () => payload,
    } as Response;
  }) as typeof fetch;
  return new ApiClient("", stub);
}

export function container(): HTMLElement {
  const el = document.createElement("div");
  document.body.appendChild(el);
  return el;
}
