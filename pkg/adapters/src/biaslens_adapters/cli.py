"""Emitters for the four analysis-pipeline file contracts."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .backends import (
    BackendUnavailable,
    BertNer,
    GazetteerNer,
    HashingEmbedder,
    LexiconSentiment,
    SbertEmbedder,
    TransformerSentiment,
)
from .io import corpus_hash, read_articles, read_jsonl, write_contract


def _bail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(1)


@click.group()
def main():
    """Run external models and emit biaslens input files."""


articles_opt = click.option("--articles", required=True, type=click.Path(exists=True))
cleaned_opt = click.option(
    "--cleaned", type=click.Path(exists=True), default=None,
    help="cleaned.jsonl export; bodies are swapped in and excluded articles dropped.",
)
out_opt = click.option("--out", required=True, type=click.Path())


@main.command("emit-embeddings")
@articles_opt
@cleaned_opt
@out_opt
@click.option("--backend", type=click.Choice(["hash", "sbert"]), default="hash")
@click.option("--dim", default=64, type=int, help="Vector size for the hash backend.")
@click.option("--model", default=None, help="Model name for the sbert backend.")
def emit_embeddings(articles, cleaned, out, backend, dim, model):
    """Write embeddings.jsonl: one vector per article (title + body)."""
    try:
        embedder = HashingEmbedder(dim) if backend == "hash" else SbertEmbedder(model)
        records = [
            {
                "article_id": rec["id"],
                "vector": embedder.encode(f"{rec['title']}\n\n{rec['body']}"),
            }
            for rec in read_articles(articles, cleaned)
        ]
    except (BackendUnavailable, OSError, KeyError) as exc:
        _bail(exc)
    write_contract(out, records, embedder.model_id, "embeddings", corpus_hash(articles))
    click.echo(f"wrote {len(records)} embeddings to {out}")


def _emit_sentiment(articles, cleaned, out, backend, model, doc_kind):
    try:
        scorer = LexiconSentiment() if backend == "lexicon" else TransformerSentiment(model)
        records = []
        for rec in read_articles(articles, cleaned):
            text = rec["title"] if doc_kind == "title" else rec["body"]
            p, neu, n = scorer.score(text)
            records.append(
                {
                    "article_id": rec["id"],
                    "doc_kind": doc_kind,
                    "positive": round(p, 6),
                    "neutral": round(neu, 6),
                    "negative": round(n, 6),
                    "model_id": scorer.model_id,
                }
            )
    except (BackendUnavailable, OSError, KeyError) as exc:
        _bail(exc)
    write_contract(out, records, scorer.model_id, "sentiment", corpus_hash(articles))
    click.echo(f"wrote {len(records)} {doc_kind} scores to {out}")


@main.command("emit-title-sentiment")
@articles_opt
@cleaned_opt
@out_opt
@click.option("--backend", type=click.Choice(["lexicon", "transformer"]),
              default="lexicon")
@click.option("--model", default=None)
def emit_title_sentiment(articles, cleaned, out, backend, model):
    """Write sentiment.jsonl rows for article titles."""
    _emit_sentiment(articles, cleaned, out, backend, model, "title")


@main.command("emit-body-sentiment")
@articles_opt
@cleaned_opt
@out_opt
@click.option("--backend", type=click.Choice(["lexicon", "transformer"]),
              default="lexicon")
@click.option("--model", default=None)
def emit_body_sentiment(articles, cleaned, out, backend, model):
    """Write sentiment.jsonl rows for article bodies."""
    _emit_sentiment(articles, cleaned, out, backend, model, "body")


@main.command("emit-entities")
@articles_opt
@cleaned_opt
@out_opt
@click.option("--backend", type=click.Choice(["gazetteer", "bert"]),
              default="gazetteer")
@click.option("--gazetteer", type=click.Path(exists=True), default=None,
              help='JSON {"surface": "PER|ORG|LOC|MISC"} for the gazetteer backend.')
@click.option("--model", default=None)
def emit_entities(articles, cleaned, out, backend, gazetteer, model):
    """Write entities.jsonl with offsets into the provided (cleaned) bodies."""
    try:
        if backend == "gazetteer":
            if not gazetteer:
                raise BackendUnavailable("the gazetteer backend needs --gazetteer")
            mapping = json.loads(Path(gazetteer).read_text(encoding="utf-8"))
            tagger = GazetteerNer(mapping)
        else:
            tagger = BertNer(model)
        records = []
        counter = 0
        for rec in read_articles(articles, cleaned):
            for hit in tagger.tag(rec["body"]):
                counter += 1
                records.append(
                    {"mention_id": f"{tagger.model_id}-{counter:06d}",
                     "article_id": rec["id"], **hit}
                )
    except (BackendUnavailable, OSError, KeyError, ValueError) as exc:
        _bail(exc)
    write_contract(out, records, tagger.model_id, "entities", corpus_hash(articles))
    click.echo(f"wrote {len(records)} mentions to {out}")


@main.command("emit-target-sentiment")
@click.option("--contexts", required=True, type=click.Path(exists=True),
              help="contexts.jsonl exported by the pipeline.")
@out_opt
@click.option("--backend", type=click.Choice(["lexicon", "transformer"]),
              default="lexicon")
@click.option("--model", default=None)
def emit_target_sentiment(contexts, out, backend, model):
    """Write entity_sentiment.jsonl by scoring each left/target/right context."""
    try:
        scorer = LexiconSentiment() if backend == "lexicon" else TransformerSentiment(model)
        records = []
        for ctx in read_jsonl(contexts):
            p, neu, n = scorer.score_target(ctx["left"], ctx["target"], ctx["right"])
            records.append(
                {
                    "mention_id": ctx["mention_id"],
                    "positive": round(p, 6),
                    "neutral": round(neu, 6),
                    "negative": round(n, 6),
                    "model_id": scorer.model_id,
                }
            )
    except (BackendUnavailable, OSError, KeyError) as exc:
        _bail(exc)
    write_contract(out, records, scorer.model_id, "entity_sentiment",
                   corpus_hash(contexts))
    click.echo(f"wrote {len(records)} target scores to {out}")


if __name__ == "__main__":
    main()
