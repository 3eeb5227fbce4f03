"""Pipeline stage implementations over the project store.

Each function loads what it needs from upstream stage artifacts, computes,
and writes its own stage directory. All iteration orders are sorted and all
JSON is key-sorted, so a stage rerun on identical inputs is byte-identical.
"""

from __future__ import annotations

import json
from collections import Counter
from pathlib import Path

import numpy as np

from .. import biasmetrics as bm
from ..clustering import (
    EmbeddingSet,
    extract_clusters,
    hdbscan_fit,
    quality_report,
    reduce_pca,
)
from ..corpus import clean_corpus, filter_language, ingest_corpus, load_noise_rules
from ..corpus.models import Article, Corpus, Newspaper
from ..entities import (
    load_entity_sentiments,
    load_mentions,
    make_context,
    sentence_index,
    top_entities,
    entity_newspaper_stats,
)
from ..errors import ValidationError
from ..ontology import (
    build_graph,
    check_consistency,
    extract_batch,
    graph_to_gexf,
    prune,
)
from ..ontology.models import OntologyDocument
from ..scoring import (
    ScoreSet,
    DocumentSentiment,
    baseline_document_scores,
    baseline_lexicon_score,
    load_scores,
    truncation_audit,
)
from ..topics import build_base_topics, build_hierarchy, merge_single_source_topics
from ..topics.tree import NOISE_TOPIC, TopicRecord, TopicTree
from .store import ProjectStore, jsonl, pretty


# -- corpus ----------------------------------------------------------------

def run_ingest(store: ProjectStore, articles_path: str, newspapers_path: str) -> dict:
    corpus, stats, errors = ingest_corpus(articles_path, newspapers_path)
    files = {
        "articles.jsonl": jsonl(
            {
                "id": a.id,
                "newspaper_id": a.newspaper_id,
                "title": a.title,
                "body": a.body,
                "published_at": a.published_at,
                "url": a.url,
                "language_tag": a.language_tag,
            }
            for a in corpus
        ),
        "newspapers.json": pretty(
            [
                {
                    "id": n.id, "name": n.name, "country": n.country,
                    "city": n.city, "latitude": n.latitude,
                    "longitude": n.longitude, "source_rank": n.source_rank,
                }
                for n in (corpus.newspapers[k] for k in sorted(corpus.newspapers))
            ]
        ),
        "stats.json": pretty(stats.to_dict()),
        "errors.json": pretty([e.__dict__ for e in errors]),
    }
    stage_hash = store.write_stage("corpus", files)
    return {"stage_hash": stage_hash, "stats": stats.to_dict(),
            "errors": len(errors)}


def load_corpus(store: ProjectStore) -> Corpus:
    papers = {
        rec["id"]: Newspaper(
            id=rec["id"], name=rec["name"], country=rec.get("country", ""),
            city=rec.get("city", ""), latitude=rec.get("latitude"),
            longitude=rec.get("longitude"), source_rank=rec.get("source_rank"),
        )
        for rec in store.read_json("corpus", "newspapers.json")
    }
    corpus = Corpus(newspapers=papers)
    for rec in store.read_jsonl("corpus", "articles.jsonl"):
        corpus.add(
            Article(
                id=rec["id"], newspaper_id=rec["newspaper_id"],
                title=rec["title"], body=rec["body"],
                published_at=rec.get("published_at"), url=rec.get("url"),
                language_tag=rec.get("language_tag"),
            )
        )
    return corpus


# -- clean -----------------------------------------------------------------

def run_clean(store: ProjectStore, rules_path: str | None = None) -> dict:
    store.require_fresh("corpus")
    corpus = load_corpus(store)
    keep = store.config()["keep_language"]
    kept, removed = filter_language(corpus, keep)
    removed_set = set(removed)
    rules = load_noise_rules(rules_path) if rules_path else []
    report = clean_corpus(corpus, rules)
    records = []
    for article in corpus:
        result = report.results[article.id]
        records.append(
            {
                "article_id": article.id,
                "body": result.body,
                "excluded": article.id in removed_set,
                "rules_applied": result.rules_applied,
                "chars_removed": result.chars_removed,
                "emptied": result.emptied,
            }
        )
    files = {
        "cleaned.jsonl": jsonl(records),
        "report.json": pretty(
            {
                "keep_language": keep,
                "kept": len(kept),
                "excluded": len(removed),
                "emptied": sorted(report.emptied_ids),
                "chars_removed": report.total_chars_removed,
                "truncation_audit": truncation_audit(corpus),
            }
        ),
    }
    stage_hash = store.write_stage("clean", files)
    return {"stage_hash": stage_hash, "kept": len(kept), "excluded": len(removed)}


def load_clean(store: ProjectStore) -> tuple[dict[str, str], set[str]]:
    """Cleaned bodies for all articles plus the kept (non-excluded) id set."""
    bodies: dict[str, str] = {}
    kept: set[str] = set()
    for rec in store.read_jsonl("clean", "cleaned.jsonl"):
        bodies[rec["article_id"]] = rec["body"]
        if not rec["excluded"]:
            kept.add(rec["article_id"])
    return bodies, kept


# -- clusters ----------------------------------------------------------------

def run_cluster(
    store: ProjectStore, embeddings_path: str, skip_reduce: bool = False
) -> dict:
    store.require_fresh("corpus", "clean")
    cfg = store.config()
    _, kept = load_clean(store)
    embeddings = EmbeddingSet.load(embeddings_path)
    missing = kept - set(embeddings.article_ids)
    if missing:
        raise ValidationError(
            f"{len(missing)} kept articles lack embeddings, e.g. {sorted(missing)[:3]}"
        )
    keep_rows = [i for i, aid in enumerate(embeddings.article_ids) if aid in kept]
    embeddings = EmbeddingSet(
        [embeddings.article_ids[i] for i in keep_rows],
        embeddings.matrix[keep_rows],
    )
    if not skip_reduce and cfg["target_dim"] < embeddings.dim:
        reduced = reduce_pca(embeddings, cfg["target_dim"])
    else:
        reduced = embeddings
    tree = hdbscan_fit(
        reduced,
        min_cluster_size=cfg["min_cluster_size"],
        min_samples=cfg["min_samples"],
    )
    assignment = extract_clusters(
        tree,
        reduced.article_ids,
        params={
            "min_cluster_size": cfg["min_cluster_size"],
            "min_samples": cfg["min_samples"] or cfg["min_cluster_size"],
            "target_dim": None if skip_reduce else cfg["target_dim"],
        },
    )
    quality = quality_report(
        assignment, cfg["noise_threshold"], cfg["dominance_threshold"]
    )
    files = {
        "clusters.json": pretty(
            {
                "params": {k: v for k, v in assignment.params.items()
                           if k != "chosen_nodes"},
                "assignments": assignment.to_records(),
                "condensed_tree": tree.to_dict(),
            }
        ),
        "reduced.jsonl": jsonl(
            {"article_id": aid, "vector": [round(float(x), 9) for x in row]}
            for aid, row in zip(reduced.article_ids, reduced.matrix)
        ),
        "quality.json": pretty(quality.to_dict()),
    }
    stage_hash = store.write_stage("clusters", files)
    return {
        "stage_hash": stage_hash,
        "clusters": quality.cluster_count,
        "noise_fraction": quality.noise_fraction,
        "flags": quality.flags,
    }


def load_assignment(store: ProjectStore) -> dict[str, int]:
    data = store.read_json("clusters", "clusters.json")
    return {rec["article_id"]: rec["cluster_id"] for rec in data["assignments"]}


# -- topics ----------------------------------------------------------------

def run_topics(store: ProjectStore) -> dict:
    store.require_fresh("corpus", "clean", "clusters")
    cfg = store.config()
    corpus = load_corpus(store)
    bodies, _ = load_clean(store)
    labels = load_assignment(store)
    vectors = {
        rec["article_id"]: np.array(rec["vector"])
        for rec in store.read_jsonl("clusters", "reduced.jsonl")
    }
    texts = {
        aid: f"{corpus.articles[aid].title}\n\n{bodies[aid]}" for aid in labels
    }
    papers = {aid: corpus.articles[aid].newspaper_id for aid in labels}
    tree = build_base_topics(
        labels, papers, texts, vectors, cfg["terms_per_topic"]
    )
    tree = merge_single_source_topics(tree)
    tree = build_hierarchy(tree)
    files = {
        "topics.json": pretty(tree.to_records()),
        "topic_tree.json": pretty(tree.adjacency()),
        "merge_report.json": pretty({"merged_into_noise": tree.merge_report}),
    }
    stage_hash = store.write_stage("topics", files)
    return {
        "stage_hash": stage_hash,
        "base_topics": len(tree.base_topics()),
        "merged": len(tree.merge_report),
        "levels": tree.max_level() + 1,
    }


def load_topic_tree(store: ProjectStore) -> TopicTree:
    records = {}
    for rec in store.read_json("topics", "topics.json"):
        records[rec["topic_id"]] = TopicRecord(
            topic_id=rec["topic_id"],
            level=rec["level"],
            parent_id=rec["parent_id"],
            article_ids=set(rec["article_ids"]),
            newspaper_ids=set(rec["newspaper_ids"]),
            top_terms=[(t, w) for t, w in rec["top_terms"]],
            centroid=rec.get("centroid"),
        )
    return TopicTree(records=records)


# -- scores ----------------------------------------------------------------

def run_scores(
    store: ProjectStore, path: str | None = None, baseline: bool = False
) -> dict:
    store.require_fresh("corpus", "clean")
    corpus = load_corpus(store)
    bodies, _ = load_clean(store)
    if baseline:
        score_set = baseline_document_scores(corpus, bodies)
        rejects: list[dict] = []
    elif path:
        score_set, rejects = load_scores(path, corpus)
    else:
        raise ValidationError("pass a sentiment file or use the baseline scorer")
    files = {
        "sentiment.jsonl": jsonl(
            score_set.scores[k].to_dict() for k in sorted(score_set.scores)
        ),
        "coverage.json": pretty(
            {"coverage": score_set.coverage(corpus), "rejects": rejects}
        ),
    }
    stage_hash = store.write_stage("scores", files)
    return {
        "stage_hash": stage_hash,
        "scored": len(score_set),
        "rejects": len(rejects),
    }


def load_score_set(store: ProjectStore) -> ScoreSet:
    scores = {}
    for rec in store.read_jsonl("scores", "sentiment.jsonl"):
        sent = DocumentSentiment(
            article_id=rec["article_id"], doc_kind=rec["doc_kind"],
            positive=rec["positive"], neutral=rec["neutral"],
            negative=rec["negative"], model_id=rec.get("model_id", "external"),
        )
        scores[(sent.article_id, sent.doc_kind)] = sent
    return ScoreSet(scores)


# -- entities ----------------------------------------------------------------

def run_entities(
    store: ProjectStore,
    mentions_path: str,
    sentiment_path: str | None = None,
    baseline_sentiment: bool = False,
    aliases_path: str | None = None,
) -> dict:
    store.require_fresh("corpus", "clean")
    bodies, kept = load_clean(store)
    alias_map = (
        json.loads(Path(aliases_path).read_text(encoding="utf-8"))
        if aliases_path
        else None
    )
    mention_set, rejects = load_mentions(
        mentions_path, {aid: bodies[aid] for aid in kept}, alias_map
    )
    sent_rejects: list[dict] = []
    sentiments: list[dict] = []
    if baseline_sentiment:
        cfg = store.config()
        for mid in sorted(mention_set.mentions):
            mention = mention_set.mentions[mid]
            ctx = make_context(
                bodies[mention.article_id], mention, cfg["context_mode"]
            )
            p, neu, n = baseline_lexicon_score(
                f"{ctx.left}{ctx.target}{ctx.right}"
            )
            sentiments.append(
                {"mention_id": mid, "positive": p, "neutral": neu,
                 "negative": n, "model_id": "baseline-lexicon"}
            )
    elif sentiment_path:
        sent_rejects = load_entity_sentiments(sentiment_path, mention_set)
        sentiments = [
            {
                "mention_id": mid,
                "positive": s.positive,
                "neutral": s.neutral,
                "negative": s.negative,
                "model_id": s.model_id,
            }
            for mid, s in sorted(mention_set.sentiments.items())
        ]
    files = {
        "entities.jsonl": jsonl(
            mention_set.mentions[k].to_dict() for k in sorted(mention_set.mentions)
        ),
        "entity_sentiment.jsonl": jsonl(sentiments),
        "aliases.json": pretty(alias_map or {}),
        "rejects.json": pretty({"mentions": rejects, "sentiments": sent_rejects}),
    }
    stage_hash = store.write_stage("entities", files)
    return {
        "stage_hash": stage_hash,
        "mentions": len(mention_set),
        "rejects": len(rejects),
    }


def load_mention_set(store: ProjectStore):
    bodies, _ = load_clean(store)
    alias_path = store.artifact_path("entities", "aliases.json")
    alias_map = (
        json.loads(alias_path.read_text(encoding="utf-8"))
        if alias_path.is_file()
        else None
    )
    mention_set, rejects = load_mentions(
        store.artifact_path("entities", "entities.jsonl"), bodies, alias_map or None
    )
    if rejects:
        raise ValidationError(f"stored mentions failed validation: {rejects[:3]}")
    sent_rejects = load_entity_sentiments(
        store.artifact_path("entities", "entity_sentiment.jsonl"), mention_set
    )
    if sent_rejects:
        raise ValidationError(
            f"stored entity sentiments failed validation: {sent_rejects[:3]}"
        )
    return mention_set


def run_contexts(store: ProjectStore) -> dict:
    store.require_fresh("corpus", "clean", "entities")
    cfg = store.config()
    bodies, _ = load_clean(store)
    mention_set = load_mention_set(store)
    contexts = []
    spans_cache: dict[str, list] = {}
    for mid in sorted(mention_set.mentions):
        mention = mention_set.mentions[mid]
        body = bodies[mention.article_id]
        spans = spans_cache.setdefault(mention.article_id, sentence_index(body))
        contexts.append(
            make_context(body, mention, cfg["context_mode"], spans).to_dict()
        )
    stage_hash = store.write_stage("contexts", {"contexts.jsonl": jsonl(contexts)})
    return {"stage_hash": stage_hash, "contexts": len(contexts)}


# -- ontology ----------------------------------------------------------------

def run_ontology_extract(
    store: ProjectStore,
    client,
    max_retries: int = 2,
    request_cap: int | None = None,
    only_topic: int | None = None,
    sleep=None,
) -> dict:
    import time as _time

    store.require_fresh("corpus", "clean")
    corpus = load_corpus(store)
    bodies, kept = load_clean(store)
    selected = set(kept)
    if only_topic is not None:
        store.require_fresh("topics")
        tree = load_topic_tree(store)
        selected &= tree.articles_at(only_topic)
    articles = [corpus.articles[aid] for aid in sorted(selected)]
    docs = extract_batch(
        articles, client, max_retries, bodies, request_cap,
        sleep if sleep is not None else _time.sleep,
    )
    files = {
        "ontology_raw.jsonl": jsonl(
            {
                "article_id": d.article_id,
                "raw_reply": d.raw_reply,
                "attempt_count": d.attempt_count,
                "failed": d.failed,
            }
            for d in docs
        ),
        "ontology_parsed.jsonl": jsonl(d.to_dict() for d in docs),
    }
    stage_hash = store.write_stage("ontology", files)
    failed = sum(1 for d in docs if d.failed)
    return {"stage_hash": stage_hash, "documents": len(docs), "failed": failed}


def run_ontology_audit(store: ProjectStore, alias_path: str | None = None) -> dict:
    store.require_fresh("corpus", "clean", "ontology")
    parsed_path = store.artifact_path("ontology", "ontology_parsed.jsonl")
    if not parsed_path.is_file():
        raise ValidationError("run ontology-extract before ontology-audit")
    docs = [
        OntologyDocument.from_dict(rec)
        for rec in store.read_jsonl("ontology", "ontology_parsed.jsonl")
    ]
    report = check_consistency(docs)
    pruned = prune(docs)
    corpus = load_corpus(store)
    papers = {a.id: a.newspaper_id for a in corpus}
    alias_map = None
    if alias_path:
        alias_map = json.loads(Path(alias_path).read_text(encoding="utf-8"))
    graph = build_graph(pruned, papers, alias_map)
    raw = store.read_jsonl("ontology", "ontology_raw.jsonl")
    files = {
        "ontology_raw.jsonl": jsonl(raw),
        "ontology_parsed.jsonl": jsonl(d.to_dict() for d in docs),
        "ontology_clean.jsonl": jsonl(d.to_dict() for d in pruned),
        "consistency_report.json": pretty(report.to_dict()),
        "graph.json": pretty(graph.to_dict()),
        "ontology.gexf": graph_to_gexf(graph),
    }
    stage_hash = store.write_stage("ontology", files)
    return {
        "stage_hash": stage_hash,
        "object_class_rate": round(report.object_class_rate, 4),
        "object_object_rate": round(report.object_object_rate, 4),
        "object_relation_rate": round(report.object_relation_rate, 4),
        "failed_documents": sum(1 for d in docs if d.failed),
    }


# -- metrics ----------------------------------------------------------------

def run_metrics(store: ProjectStore) -> dict:
    store.require_fresh("corpus", "clean", "clusters", "topics", "scores", "entities")
    cfg = store.config()
    corpus = load_corpus(store)
    _, kept = load_clean(store)
    tree = load_topic_tree(store)
    score_set = load_score_set(store)
    mention_set = load_mention_set(store)
    papers = {a.id: a.newspaper_id for a in corpus}
    coords = {
        n.id: (n.latitude, n.longitude)
        for n in corpus.newspapers.values()
        if n.geolocated
    }
    totals = Counter(papers[aid] for aid in sorted(kept))

    def summaries_for(article_ids: set[str], doc_kind: str, scope: str):
        by_np: dict[str, list[float]] = {}
        for aid in sorted(article_ids):
            sent = score_set.get(aid, doc_kind)
            if sent is not None:
                by_np.setdefault(papers[aid], []).append(sent.simplified)
        return bm.sentiment_deviation(
            bm.newspaper_mean_sentiment(by_np, scope, doc_kind)
        )

    files: dict[str, str] = {}
    topic_shares = {}
    analyzed_topics = [t for t in sorted(tree.records) if t != NOISE_TOPIC]
    base_topics = set(tree.base_topics(include_noise=False))
    for topic_id in analyzed_topics:
        record = tree.records[topic_id]
        members = record.article_ids
        topic_counts = Counter(papers[aid] for aid in sorted(members))
        shares = bm.rate_deviation(
            topic_id, dict(topic_counts), dict(totals),
            include_zero_coverage=cfg["include_zero_coverage"],
        )
        topic_shares[str(topic_id)] = [
            shares[k].to_dict() for k in sorted(shares)
        ]
        for kind in ("title", "body"):
            summaries = summaries_for(members, kind, str(topic_id))
            points = bm.article_spectrum(shares, summaries)
            files[f"spectrum/{topic_id}/{kind}.json"] = pretty(
                [p.to_dict() for p in points]
            )
        title_summaries = summaries_for(members, "title", str(topic_id))
        points, skipped = bm.map_points(shares, title_summaries, coords)
        files[f"map/{topic_id}.json"] = pretty(
            {"points": [p.to_dict() for p in points],
             "newspapers_without_coordinates": skipped}
        )
        # entity table and per-entity spectra over the topic's top entities
        if topic_id in base_topics:
            keys = top_entities(mention_set, members, cfg["top_k_entities"])
        else:
            descendant_sets = [
                tree.records[b].article_ids
                for b in sorted(base_topics)
                if tree.records[b].article_ids <= members
            ]
            keys = top_entities(
                mention_set, members, cfg["top_k_entities"], descendant_sets
            )
        table = []
        entity_spectra = {}
        for key in keys:
            stats = entity_newspaper_stats(mention_set, key, members, papers)
            if not stats:
                continue
            table.append(
                {
                    "surface": key[0],
                    "entity_group": key[1],
                    "mention_count": sum(s.mention_count for s in stats.values()),
                    "mean_simplified": round(
                        sum(s.mean_simplified for s in stats.values()) / len(stats), 6
                    ),
                    "mean_neutral": round(
                        sum(s.mean_neutral for s in stats.values()) / len(stats), 6
                    ),
                    "per_newspaper": {k: v.to_dict() for k, v in stats.items()},
                }
            )
            counts = {k: v.mention_count for k, v in stats.items()}
            summaries = bm.sentiment_deviation(
                bm.newspaper_mean_sentiment(
                    {k: [v.mean_simplified] for k, v in stats.items()},
                    str(topic_id),
                    f"entity:{key[0]}|{key[1]}",
                )
            )
            entity_spectra["|".join(key)] = [
                p.to_dict() for p in bm.entity_spectrum(counts, summaries)
            ]
        files[f"entities/{topic_id}.json"] = pretty(table)
        files[f"spectrum/{topic_id}/entity.json"] = pretty(entity_spectra)

    non_noise = set().union(
        *(tree.records[t].article_ids for t in tree.base_topics(include_noise=False))
    ) if tree.base_topics(include_noise=False) else set()
    cross = {
        kind: [
            s.to_dict()
            for _, s in sorted(summaries_for(non_noise, kind, "ALL").items())
        ]
        for kind in ("title", "body")
    }
    files["cross_topic.json"] = pretty(cross)
    files["topic_shares.json"] = pretty(topic_shares)
    stage_hash = store.write_stage("metrics", files)
    return {"stage_hash": stage_hash, "topics": len(analyzed_topics)}
