/** Typed client for the read-only analysis API. */

import type {
  ArticleRow,
  EntityRow,
  MapResponse,
  Newspaper,
  OntologyFilter,
  OntologyGraph,
  SentimentRow,
  SpectrumMode,
  SpectrumPoint,
  TopicDetail,
  TopicNode,
} from "./types.js";

export class ApiClient {
  constructor(
    private baseUrl: string = "",
    private fetchFn: typeof fetch = fetch,
  ) {}

  private async get<T>(path: string, signal?: AbortSignal): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, { signal });
    if (!response.ok) {
      throw new Error(`GET ${path} failed: ${response.status}`);
    }
    return (await response.json()) as T;
  }

  topics(signal?: AbortSignal): Promise<TopicNode[]> {
    return this.get("/api/topics", signal);
  }

  topicDetail(id: number, signal?: AbortSignal): Promise<TopicDetail> {
    return this.get(`/api/topics/${id}`, signal);
  }

  spectrum(
    id: number,
    mode: SpectrumMode,
    signal?: AbortSignal,
  ): Promise<SpectrumPoint[]> {
    if (mode.kind === "entity") {
      const entity = encodeURIComponent(mode.entity);
      return this.get(
        `/api/topics/${id}/spectrum?mode=entity&entity=${entity}`,
        signal,
      );
    }
    return this.get(`/api/topics/${id}/spectrum?mode=${mode.kind}`, signal);
  }

  entities(id: number, signal?: AbortSignal): Promise<EntityRow[]> {
    return this.get(`/api/topics/${id}/entities`, signal);
  }

  ontology(
    id: number,
    filter: OntologyFilter,
    signal?: AbortSignal,
  ): Promise<OntologyGraph> {
    let query = "";
    if (filter.kind === "newspaper") {
      query = `?newspaper=${encodeURIComponent(filter.newspaper)}`;
    } else if (filter.kind === "article") {
      query = `?article=${encodeURIComponent(filter.article)}`;
    }
    return this.get(`/api/topics/${id}/ontology${query}`, signal);
  }

  map(id: number, signal?: AbortSignal): Promise<MapResponse> {
    return this.get(`/api/topics/${id}/map`, signal);
  }

  crossTopic(
    mode: "title" | "body",
    signal?: AbortSignal,
  ): Promise<SentimentRow[]> {
    return this.get(`/api/cross-topic?mode=${mode}`, signal);
  }

  newspapers(signal?: AbortSignal): Promise<Newspaper[]> {
    return this.get("/api/newspapers", signal);
  }

  articles(
    id: number,
    newspaper?: string,
    signal?: AbortSignal,
  ): Promise<ArticleRow[]> {
    const query = newspaper ? `?newspaper=${encodeURIComponent(newspaper)}` : "";
    return this.get(`/api/topics/${id}/articles${query}`, signal);
  }
}
