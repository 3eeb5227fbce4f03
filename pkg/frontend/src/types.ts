/** Shapes of the read-only analysis API responses. */

export interface TopicNode {
  topic_id: number;
  name: string;
  parent_id: number | null;
  level: number;
  children: number[];
  article_count: number;
}

export interface TopicDetail {
  topic_id: number;
  name: string;
  level: number;
  parent_id: number | null;
  article_count: number;
  newspaper_ids: string[];
  top_terms: [string, number][];
  quality_flags: string[];
  merged_into_noise: boolean;
}

export interface SpectrumPoint {
  newspaper_id: string;
  x: number;
  y: number;
  size: number;
  color_value: number;
}

export interface EntityRow {
  surface: string;
  entity_group: string;
  mention_count: number;
  mean_simplified: number;
  mean_neutral: number;
  per_newspaper: Record<string, unknown>;
}

export interface GraphNode {
  node_id: number;
  label: string;
  merged_labels: string[];
  degree: number;
  community_id: number;
}

export interface GraphEdge {
  label: string;
  from_node: number;
  to_node: number;
  article_id: string;
  newspaper_id: string;
}

export interface OntologyGraph {
  nodes: GraphNode[];
  edges: GraphEdge[];
}

export interface MapPoint {
  newspaper_id: string;
  latitude: number;
  longitude: number;
  size_value: number;
  color_value: number;
}

export interface MapResponse {
  points: MapPoint[];
  newspapers_without_coordinates: number;
}

export interface SentimentRow {
  newspaper_id: string;
  scope: string;
  subject: string;
  mean_simplified: number;
  unit_count: number;
  sentiment_deviation: number;
}

export interface Newspaper {
  id: string;
  name: string;
  country: string;
  city: string;
  latitude: number | null;
  longitude: number | null;
}

export interface ArticleRow {
  article_id: string;
  newspaper_id: string;
  title: string;
}

export type SpectrumMode =
  | { kind: "title" }
  | { kind: "body" }
  | { kind: "entity"; entity: string };

export type OntologyFilter =
  | { kind: "none" }
  | { kind: "newspaper"; newspaper: string }
  | { kind: "article"; article: string };
