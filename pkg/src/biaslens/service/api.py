"""Read-only HTTP API over a project store.

Every response is a projection of stored artifacts; no metric is computed
here that the CLI did not already export. Responses carry an ETag derived
from the backing stage hash so clients can cache aggressively. Unknown ids
give 404; artifacts whose upstream has changed give 409 until rebuilt.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query, Response
from pydantic import BaseModel

from ..errors import BiasLensError, MissingUpstreamError
from ..ontology.graph import GraphEdge, GraphNode, OntologyGraph
from .store import ProjectStore


class TopicNode(BaseModel):
    topic_id: int
    name: str
    parent_id: int | None
    level: int
    children: list[int]
    article_count: int


class TopicDetail(BaseModel):
    topic_id: int
    name: str
    level: int
    parent_id: int | None
    article_count: int
    newspaper_ids: list[str]
    top_terms: list[tuple[str, float]]
    quality_flags: list[str]
    merged_into_noise: bool


class SpectrumPointModel(BaseModel):
    newspaper_id: str
    x: float
    y: float
    size: int
    color_value: float


class EntityRow(BaseModel):
    surface: str
    entity_group: str
    mention_count: int
    mean_simplified: float
    mean_neutral: float
    per_newspaper: dict


class MapPointModel(BaseModel):
    newspaper_id: str
    latitude: float
    longitude: float
    size_value: float
    color_value: float


class MapResponse(BaseModel):
    points: list[MapPointModel]
    newspapers_without_coordinates: int


class SentimentRow(BaseModel):
    newspaper_id: str
    scope: str
    subject: str
    mean_simplified: float
    unit_count: int
    sentiment_deviation: float


class NewspaperModel(BaseModel):
    id: str
    name: str
    country: str = ""
    city: str = ""
    latitude: float | None = None
    longitude: float | None = None
    source_rank: int | None = None


class ArticleRow(BaseModel):
    article_id: str
    newspaper_id: str
    title: str


class GraphModel(BaseModel):
    nodes: list[dict]
    edges: list[dict]


def graph_from_store(store: ProjectStore) -> OntologyGraph:
    data = store.read_json("ontology", "graph.json")
    graph = OntologyGraph()
    for rec in data["nodes"]:
        graph.nodes[rec["node_id"]] = GraphNode(
            node_id=rec["node_id"], label=rec["label"],
            merged_labels=rec["merged_labels"], degree=rec["degree"],
            community_id=rec["community_id"],
        )
    for rec in data["edges"]:
        graph.edges.append(
            GraphEdge(
                label=rec["label"], from_node=rec["from_node"],
                to_node=rec["to_node"], article_id=rec["article_id"],
                newspaper_id=rec["newspaper_id"],
            )
        )
    return graph


def create_app(store: ProjectStore) -> FastAPI:
    app = FastAPI(title="biaslens", version="0.1.0")

    def fresh(stage: str) -> str:
        status = store.stage_status(stage)
        if status == "missing":
            raise HTTPException(404, f"stage '{stage}' has not been built")
        if status == "stale":
            raise HTTPException(
                409, f"stage '{stage}' is stale; rerun the pipeline"
            )
        return store.stage_hash(stage) or ""

    def etag(response: Response, stage_hash: str) -> None:
        response.headers["ETag"] = f'"{stage_hash}"'
        response.headers["Cache-Control"] = "max-age=31536000, immutable"

    def topic_index() -> dict[int, dict]:
        return {rec["topic_id"]: rec for rec in store.read_json("topics", "topics.json")}

    def topic_or_404(topic_id: int) -> dict:
        index = topic_index()
        if topic_id not in index:
            raise HTTPException(404, f"unknown topic {topic_id}")
        return index[topic_id]

    @app.get("/api/topics", response_model=list[TopicNode])
    def topics(response: Response):
        etag(response, fresh("topics"))
        return store.read_json("topics", "topic_tree.json")

    @app.get("/api/topics/{topic_id}", response_model=TopicDetail)
    def topic_detail(topic_id: int, response: Response):
        etag(response, fresh("topics"))
        rec = topic_or_404(topic_id)
        quality = store.read_json("clusters", "quality.json")
        merged = store.read_json("topics", "merge_report.json")["merged_into_noise"]
        return TopicDetail(
            topic_id=rec["topic_id"],
            name=rec.get("name", str(rec["topic_id"])),
            level=rec["level"],
            parent_id=rec["parent_id"],
            article_count=len(rec["article_ids"]),
            newspaper_ids=rec["newspaper_ids"],
            top_terms=[(t, w) for t, w in rec["top_terms"]],
            quality_flags=quality["flags"],
            merged_into_noise=rec["topic_id"] in merged,
        )

    @app.get(
        "/api/topics/{topic_id}/spectrum",
        response_model=list[SpectrumPointModel],
    )
    def spectrum(
        topic_id: int,
        response: Response,
        mode: str = Query("title", pattern="^(title|body|entity)$"),
        entity: str | None = None,
    ):
        etag(response, fresh("metrics"))
        topic_or_404(topic_id)
        try:
            if mode == "entity":
                if not entity:
                    raise HTTPException(422, "entity mode needs ?entity=Surface|GROUP")
                spectra = store.read_json(
                    "metrics", f"spectrum/{topic_id}/entity.json"
                )
                if entity not in spectra:
                    raise HTTPException(404, f"no spectrum for entity {entity!r}")
                return spectra[entity]
            return store.read_json("metrics", f"spectrum/{topic_id}/{mode}.json")
        except MissingUpstreamError as exc:
            raise HTTPException(404, str(exc)) from exc

    @app.get("/api/topics/{topic_id}/entities", response_model=list[EntityRow])
    def entities(topic_id: int, response: Response):
        etag(response, fresh("metrics"))
        topic_or_404(topic_id)
        try:
            return store.read_json("metrics", f"entities/{topic_id}.json")
        except MissingUpstreamError as exc:
            raise HTTPException(404, str(exc)) from exc

    @app.get("/api/topics/{topic_id}/ontology", response_model=GraphModel)
    def ontology(
        topic_id: int,
        response: Response,
        newspaper: str | None = None,
        article: str | None = None,
    ):
        from ..ontology import filter_graph

        etag(response, fresh("ontology"))
        rec = topic_or_404(topic_id)
        graph = graph_from_store(store)
        sub = filter_graph(
            graph,
            newspaper_id=newspaper,
            article_id=article,
            article_ids=set(rec["article_ids"]),
        )
        return sub.to_dict()

    @app.get("/api/topics/{topic_id}/map", response_model=MapResponse)
    def topic_map(topic_id: int, response: Response):
        etag(response, fresh("metrics"))
        topic_or_404(topic_id)
        try:
            return store.read_json("metrics", f"map/{topic_id}.json")
        except MissingUpstreamError as exc:
            raise HTTPException(404, str(exc)) from exc

    @app.get("/api/topics/{topic_id}/articles", response_model=list[ArticleRow])
    def topic_articles(
        topic_id: int, response: Response, newspaper: str | None = None
    ):
        etag(response, fresh("topics"))
        rec = topic_or_404(topic_id)
        wanted = set(rec["article_ids"])
        rows = []
        for a in store.read_jsonl("corpus", "articles.jsonl"):
            if a["id"] in wanted and (
                newspaper is None or a["newspaper_id"] == newspaper
            ):
                rows.append(
                    ArticleRow(
                        article_id=a["id"],
                        newspaper_id=a["newspaper_id"],
                        title=a["title"],
                    )
                )
        return sorted(rows, key=lambda r: r.article_id)

    @app.get("/api/cross-topic", response_model=list[SentimentRow])
    def cross_topic(
        response: Response,
        mode: str = Query("title", pattern="^(title|body)$"),
    ):
        etag(response, fresh("metrics"))
        return store.read_json("metrics", "cross_topic.json")[mode]

    @app.get("/api/newspapers", response_model=list[NewspaperModel])
    def newspapers(response: Response):
        etag(response, fresh("corpus"))
        return store.read_json("corpus", "newspapers.json")

    @app.exception_handler(BiasLensError)
    def on_error(request, exc):
        from fastapi.responses import JSONResponse

        return JSONResponse(status_code=500, content={"detail": str(exc)})

    return app
