"""Pipeline orchestration CLI.

Every subcommand validates its upstream stage hashes before running and
supports --json for machine-readable output. Exit codes: 0 ok, 1 validation
problem, 2 missing or stale upstream, 3 external service failure.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from ..errors import (
    ExternalServiceError,
    MissingUpstreamError,
    StaleUpstreamError,
    ValidationError,
)
from .store import DEFAULT_CONFIG, ProjectStore
from . import pipeline

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_UPSTREAM = 2
EXIT_EXTERNAL = 3


def _store(project: str | None) -> ProjectStore:
    root = project or os.environ.get("BIASLENS_PROJECT") or "."
    return ProjectStore(root)


def _emit(result: dict, as_json: bool) -> None:
    if as_json:
        click.echo(json.dumps(result, sort_keys=True))
    else:
        for key in sorted(result):
            click.echo(f"{key}: {result[key]}")


def _run(fn, as_json: bool):
    try:
        result = fn()
    except (StaleUpstreamError, MissingUpstreamError) as exc:
        _fail(str(exc), as_json, EXIT_UPSTREAM)
    except ValidationError as exc:
        _fail(str(exc), as_json, EXIT_VALIDATION)
    except ExternalServiceError as exc:
        _fail(str(exc), as_json, EXIT_EXTERNAL)
    else:
        _emit(result, as_json)


def _fail(message: str, as_json: bool, code: int):
    if as_json:
        click.echo(json.dumps({"error": message, "exit_code": code}))
    else:
        click.echo(f"error: {message}", err=True)
    sys.exit(code)


project_option = click.option(
    "--project", "-p", default=None,
    help="Project directory (default: $BIASLENS_PROJECT or cwd).",
)
json_option = click.option("--json", "as_json", is_flag=True, help="JSON output.")


@click.group()
def main():
    """Media-bias analysis pipeline."""


@main.command()
@click.argument("name")
@click.option("--set", "settings", multiple=True,
              help="Config override KEY=VALUE (repeatable).")
@project_option
@json_option
def init(name, settings, project, as_json):
    """Create a new project with default config."""
    def go():
        overrides = {}
        for item in settings:
            key, _, value = item.partition("=")
            if key not in DEFAULT_CONFIG:
                raise ValidationError(f"unknown config key {key!r}")
            overrides[key] = json.loads(value)
        store = _store(project)
        store.init(name, overrides)
        return {"project": name, "root": str(store.root)}
    _run(go, as_json)


@main.command("config")
@click.option("--set", "settings", multiple=True, help="KEY=VALUE (repeatable).")
@project_option
@json_option
def config_cmd(settings, project, as_json):
    """Show or update project config."""
    def go():
        store = _store(project)
        if settings:
            updates = {}
            for item in settings:
                key, _, value = item.partition("=")
                updates[key] = json.loads(value)
            store.set_config(updates)
        return store.config()
    _run(go, as_json)


@main.command()
@click.option("--articles", required=True, type=click.Path(exists=True))
@click.option("--newspapers", required=True, type=click.Path(exists=True))
@project_option
@json_option
def ingest(articles, newspapers, project, as_json):
    """Load the article corpus and newspaper registry."""
    _run(lambda: pipeline.run_ingest(_store(project), articles, newspapers), as_json)


@main.command()
@click.option("--rules", type=click.Path(exists=True), default=None,
              help="noise_rules.json with per-newspaper regex rules.")
@project_option
@json_option
def clean(rules, project, as_json):
    """Language-filter and noise-clean the corpus."""
    _run(lambda: pipeline.run_clean(_store(project), rules), as_json)


@main.command()
@click.option("--embeddings", required=True, type=click.Path(exists=True))
@click.option("--skip-reduce", is_flag=True,
              help="Vectors are already reduced; cluster them as-is.")
@project_option
@json_option
def cluster(embeddings, skip_reduce, project, as_json):
    """Density-cluster document embeddings into the topic hierarchy's base."""
    _run(lambda: pipeline.run_cluster(_store(project), embeddings, skip_reduce),
         as_json)


@main.command()
@project_option
@json_option
def topics(project, as_json):
    """Build labeled hierarchical topics from the clustering."""
    _run(lambda: pipeline.run_topics(_store(project)), as_json)


@main.command("score-load")
@click.option("--file", "path", type=click.Path(exists=True), default=None)
@click.option("--baseline", is_flag=True,
              help="Score with the bundled lexicon instead of a model file.")
@project_option
@json_option
def score_load(path, baseline, project, as_json):
    """Load document sentiment scores (or compute the lexicon baseline)."""
    _run(lambda: pipeline.run_scores(_store(project), path, baseline), as_json)


@main.command("entities-load")
@click.option("--file", "path", required=True, type=click.Path(exists=True))
@click.option("--sentiment", type=click.Path(exists=True), default=None,
              help="entity_sentiment.jsonl from a model adapter.")
@click.option("--baseline-sentiment", is_flag=True,
              help="Score entity contexts with the bundled lexicon.")
@click.option("--aliases", type=click.Path(exists=True), default=None,
              help="JSON map of entity surfaces to canonical surfaces.")
@project_option
@json_option
def entities_load(path, sentiment, baseline_sentiment, aliases, project, as_json):
    """Load entity mentions (and optionally their sentiment scores)."""
    _run(
        lambda: pipeline.run_entities(
            _store(project), path, sentiment, baseline_sentiment, aliases
        ),
        as_json,
    )


@main.command("contexts-export")
@project_option
@json_option
def contexts_export(project, as_json):
    """Export left/target/right contexts for the target-sentiment adapter."""
    _run(lambda: pipeline.run_contexts(_store(project)), as_json)


@main.command("ontology-extract")
@click.option("--replies", type=click.Path(exists=True), default=None,
              help="Canned replies JSONL {article_id, reply} for offline runs.")
@click.option("--model", default="default", help="Model name passthrough.")
@click.option("--temperature", default=0.0, type=float)
@click.option("--max-retries", default=2, type=int)
@click.option("--request-cap", default=None, type=int,
              help="Abort the batch after this many endpoint requests.")
@click.option("--topic", "only_topic", default=None, type=int,
              help="Extract only this topic's articles.")
@project_option
@json_option
def ontology_extract(replies, model, temperature, max_retries, request_cap,
                     only_topic, project, as_json):
    """Extract per-article ontologies via the LLM endpoint (or canned replies)."""
    def go():
        from ..ontology import CannedReplyClient, HttpLlmClient

        if replies:
            canned = {}
            with open(replies, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        rec = json.loads(line)
                        canned[rec["article_id"]] = rec["reply"]
            client = CannedReplyClient(canned)
        else:
            client = HttpLlmClient(model=model, temperature=temperature)
        return pipeline.run_ontology_extract(
            _store(project), client, max_retries, request_cap, only_topic
        )
    _run(go, as_json)


@main.command("ontology-audit")
@click.option("--aliases", type=click.Path(exists=True), default=None,
              help="JSON object mapping labels to canonical labels.")
@project_option
@json_option
def ontology_audit(aliases, project, as_json):
    """Run consistency checks, prune, and build the core reference graph."""
    _run(lambda: pipeline.run_ontology_audit(_store(project), aliases), as_json)


@main.command()
@project_option
@json_option
def metrics(project, as_json):
    """Compute rates, deviations, spectra, maps and cross-topic summaries."""
    _run(lambda: pipeline.run_metrics(_store(project)), as_json)


@main.command()
@click.option("--topic", required=True, type=int)
@click.option("--mode", type=click.Choice(["title", "body", "entity"]),
              default="title")
@click.option("--entity", "entity_key", default=None,
              help='Entity key "Surface|GROUP" for entity mode.')
@project_option
@json_option
def spectrum(topic, mode, entity_key, project, as_json):
    """Print a stored media-bias spectrum."""
    def go():
        store = _store(project)
        store.require_fresh("metrics")
        if mode == "entity":
            spectra = store.read_json("metrics", f"spectrum/{topic}/entity.json")
            if entity_key is None:
                return {"available": sorted(spectra)}
            if entity_key not in spectra:
                raise ValidationError(f"no spectrum for entity {entity_key!r}")
            return {"points": spectra[entity_key]}
        return {"points": store.read_json("metrics", f"spectrum/{topic}/{mode}.json")}
    _run(go, as_json)


@main.command("map")
@click.option("--topic", required=True, type=int)
@project_option
@json_option
def map_cmd(topic, project, as_json):
    """Print stored map points for a topic."""
    def go():
        store = _store(project)
        store.require_fresh("metrics")
        return store.read_json("metrics", f"map/{topic}.json")
    _run(go, as_json)


@main.command()
@click.option("--what", type=click.Choice(["gexf", "edge-csv"]), default="gexf")
@click.option("--out", required=True, type=click.Path())
@project_option
@json_option
def export(what, out, project, as_json):
    """Write the ontology graph as GEXF or an edge CSV."""
    def go():
        from ..ontology.export import edges_to_csv, graph_to_gexf
        from .api import graph_from_store

        store = _store(project)
        store.require_fresh("ontology")
        graph = graph_from_store(store)
        text = graph_to_gexf(graph) if what == "gexf" else edges_to_csv(graph)
        Path(out).write_text(text, encoding="utf-8")
        return {"written": out, "nodes": len(graph.nodes), "edges": len(graph.edges)}
    _run(go, as_json)


@main.command()
@click.option("--port", default=8000, type=int)
@click.option("--host", default="127.0.0.1")
@project_option
def serve(port, host, project):
    """Serve the read-only exploration API."""
    import uvicorn

    from .api import create_app

    app = create_app(_store(project))
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
