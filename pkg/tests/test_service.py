import json
import shutil
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from biaslens.service.api import create_app
from biaslens.service.cli import main
from biaslens.service.store import ProjectStore

DEMO = resources.files("biaslens.data.demo")


@pytest.fixture(scope="module")
def demo_inputs(tmp_path_factory):
    root = tmp_path_factory.mktemp("inputs")
    for name in ("articles.jsonl", "newspapers.json", "noise_rules.json",
                 "embeddings.jsonl", "entities.jsonl", "canned_replies.jsonl"):
        (root / name).write_text((DEMO / name).read_text(encoding="utf-8"))
    return root


def run_pipeline(project: Path, inputs: Path, runner: CliRunner) -> None:
    steps = [
        ["init", "demo", "--set", "min_cluster_size=4", "--set", "target_dim=5"],
        ["ingest", "--articles", str(inputs / "articles.jsonl"),
         "--newspapers", str(inputs / "newspapers.json")],
        ["clean", "--rules", str(inputs / "noise_rules.json")],
        ["cluster", "--embeddings", str(inputs / "embeddings.jsonl")],
        ["topics"],
        ["score-load", "--baseline"],
        ["entities-load", "--file", str(inputs / "entities.jsonl"),
         "--baseline-sentiment"],
        ["contexts-export"],
        ["ontology-extract", "--replies", str(inputs / "canned_replies.jsonl")],
        ["ontology-audit"],
        ["metrics"],
    ]
    for step in steps:
        result = runner.invoke(main, step + ["--project", str(project)])
        assert result.exit_code == 0, f"{step}: {result.output}"


@pytest.fixture(scope="module")
def demo_project(tmp_path_factory, demo_inputs):
    project = tmp_path_factory.mktemp("proj")
    run_pipeline(project, demo_inputs, CliRunner())
    return project


class TestCliOrdering:
    def test_metrics_before_topics_exits_2(self, tmp_path, demo_inputs):
        runner = CliRunner()
        project = tmp_path / "p"
        assert runner.invoke(main, ["init", "x", "-p", str(project)]).exit_code == 0
        result = runner.invoke(main, ["metrics", "-p", str(project)])
        assert result.exit_code == 2

    def test_cluster_before_ingest_exits_2(self, tmp_path, demo_inputs):
        runner = CliRunner()
        project = tmp_path / "p"
        runner.invoke(main, ["init", "x", "-p", str(project)])
        result = runner.invoke(
            main,
            ["cluster", "--embeddings", str(demo_inputs / "embeddings.jsonl"),
             "-p", str(project)],
        )
        assert result.exit_code == 2

    def test_error_message_names_rebuild_command(self, tmp_path):
        runner = CliRunner()
        project = tmp_path / "p"
        runner.invoke(main, ["init", "x", "-p", str(project)])
        result = runner.invoke(main, ["metrics", "-p", str(project)])
        assert "biaslens" in result.output

    def test_unknown_config_key_exits_1(self, tmp_path):
        runner = CliRunner()
        result = runner.invoke(
            main, ["init", "x", "--set", "nonsense=1", "-p", str(tmp_path / "p")]
        )
        assert result.exit_code == 1

    def test_json_flag_machine_readable(self, tmp_path):
        runner = CliRunner()
        result = runner.invoke(
            main, ["init", "x", "--json", "-p", str(tmp_path / "p")]
        )
        assert json.loads(result.output)["project"] == "x"


class TestPipelineResults:
    def test_full_pipeline_artifacts_present(self, demo_project):
        store = ProjectStore(demo_project)
        for stage in ("corpus", "clean", "clusters", "topics", "scores",
                      "entities", "contexts", "ontology", "metrics"):
            assert store.stage_status(stage) == "fresh", stage
        for rel in ("topics/topics.json", "topics/topic_tree.json",
                    "clusters/clusters.json", "scores/sentiment.jsonl",
                    "entities/entities.jsonl", "contexts/contexts.jsonl",
                    "ontology/ontology_raw.jsonl", "ontology/ontology_clean.jsonl",
                    "ontology/consistency_report.json", "ontology/ontology.gexf",
                    "metrics/cross_topic.json"):
            assert (demo_project / rel).is_file(), rel

    def test_single_newspaper_topic_merged(self, demo_project):
        store = ProjectStore(demo_project)
        merged = store.read_json("topics", "merge_report.json")["merged_into_noise"]
        assert len(merged) == 1
        topics = {r["topic_id"]: r for r in store.read_json("topics", "topics.json")}
        for t, rec in topics.items():
            if t != -1 and rec["level"] == 0:
                assert len(rec["newspaper_ids"]) >= 2

    def test_german_articles_excluded(self, demo_project):
        store = ProjectStore(demo_project)
        excluded = [
            r["article_id"]
            for r in store.read_jsonl("clean", "cleaned.jsonl")
            if r["excluded"]
        ]
        assert len(excluded) == 2

    def test_noise_rules_removed_ad_blocks(self, demo_project):
        store = ProjectStore(demo_project)
        cleaned = {r["article_id"]: r for r in store.read_jsonl("clean", "cleaned.jsonl")}
        assert any(r["chars_removed"] > 0 for r in cleaned.values())
        for r in cleaned.values():
            assert "Advertisement" not in r["body"]
            assert "Subscribe to Cove Gazette" not in r["body"]

    def test_repeated_topics_run_identical_hash(self, demo_project):
        store = ProjectStore(demo_project)
        runner = CliRunner()
        before = store.stage_hash("topics")
        result = runner.invoke(main, ["topics", "-p", str(demo_project)])
        assert result.exit_code == 0
        assert store.stage_hash("topics") == before

    def test_failed_extraction_counted_not_graphed(self, demo_project):
        store = ProjectStore(demo_project)
        raw = store.read_jsonl("ontology", "ontology_raw.jsonl")
        failed = [r for r in raw if r["failed"]]
        assert len(failed) == 1
        graph = store.read_json("ontology", "graph.json")
        failed_ids = {r["article_id"] for r in failed}
        assert not any(e["article_id"] in failed_ids for e in graph["edges"])

    def test_consistency_report_reflects_planted_errors(self, demo_project):
        store = ProjectStore(demo_project)
        report = store.read_json("ontology", "consistency_report.json")
        assert report["object_class_rate"] < 1.0
        assert report["object_object_rate"] < 1.0
        assert report["object_relation_rate"] < 1.0
        assert len(report["object_relation_errors"]) >= 1


class TestConfigInvalidation:
    def test_config_change_invalidates_reader_stages_only(self, tmp_path, demo_inputs):
        runner = CliRunner()
        project = tmp_path / "p"
        run_pipeline(project, demo_inputs, runner)
        store = ProjectStore(project)
        result = runner.invoke(
            main, ["config", "--set", "top_k_entities=5", "-p", str(project)]
        )
        assert result.exit_code == 0
        assert store.stage_status("metrics") == "stale"
        for stage in ("corpus", "clean", "clusters", "topics", "scores",
                      "entities", "contexts", "ontology"):
            assert store.stage_status(stage) == "fresh", stage

    def test_stale_stage_refused_with_exit_2(self, tmp_path, demo_inputs):
        runner = CliRunner()
        project = tmp_path / "p"
        run_pipeline(project, demo_inputs, runner)
        runner.invoke(
            main, ["config", "--set", "min_cluster_size=5", "-p", str(project)]
        )
        result = runner.invoke(main, ["topics", "-p", str(project)])
        assert result.exit_code == 2
        assert "cluster" in result.output

    def test_downstream_chain_goes_stale(self, tmp_path, demo_inputs):
        runner = CliRunner()
        project = tmp_path / "p"
        run_pipeline(project, demo_inputs, runner)
        store = ProjectStore(project)
        runner.invoke(
            main, ["config", "--set", "keep_language=\"de\"", "-p", str(project)]
        )
        assert store.stage_status("clean") == "stale"
        # clean hasn't rebuilt, so downstream stages still match its old hash
        result = runner.invoke(main, ["topics", "-p", str(project)])
        assert result.exit_code == 2


@pytest.fixture(scope="module")
def client(demo_project):
    return TestClient(create_app(ProjectStore(demo_project)))


class TestApi:
    def test_topic_tree_has_parent_ids(self, client):
        tree = client.get("/api/topics").json()
        assert any(t["parent_id"] is not None for t in tree)
        assert any(t["level"] > 0 for t in tree)

    def test_spectrum_matches_stored_file(self, client, demo_project):
        store = ProjectStore(demo_project)
        tree = client.get("/api/topics").json()
        base = [t["topic_id"] for t in tree if t["level"] == 0 and t["topic_id"] != -1]
        for t in base:
            api = client.get(f"/api/topics/{t}/spectrum?mode=title").json()
            stored = store.read_json("metrics", f"spectrum/{t}/title.json")
            assert api == stored

    def test_unknown_topic_404(self, client):
        assert client.get("/api/topics/424242").status_code == 404
        assert client.get("/api/topics/424242/spectrum").status_code == 404

    def test_entity_mode_requires_entity_param(self, client):
        tree = client.get("/api/topics").json()
        t = next(t["topic_id"] for t in tree if t["level"] == 0 and t["topic_id"] != -1)
        assert client.get(f"/api/topics/{t}/spectrum?mode=entity").status_code == 422

    def test_etag_is_stage_hash(self, client, demo_project):
        store = ProjectStore(demo_project)
        response = client.get("/api/topics")
        assert response.headers["etag"].strip('"') == store.stage_hash("topics")

    def test_stale_artifact_409(self, tmp_path, demo_inputs):
        runner = CliRunner()
        project = tmp_path / "p"
        run_pipeline(project, demo_inputs, runner)
        runner.invoke(
            main, ["config", "--set", "top_k_entities=3", "-p", str(project)]
        )
        stale_client = TestClient(create_app(ProjectStore(project)))
        tree = stale_client.get("/api/topics").json()  # topics stage still fresh
        t = next(x["topic_id"] for x in tree if x["topic_id"] != -1)
        assert stale_client.get(f"/api/topics/{t}/entities").status_code == 409

    def test_ontology_filter_chain(self, client):
        tree = client.get("/api/topics").json()
        t = next(t["topic_id"] for t in tree if t["level"] == 0 and t["topic_id"] != -1)
        core = client.get(f"/api/topics/{t}/ontology").json()
        newspapers = {e["newspaper_id"] for e in core["edges"]}
        total = 0
        for np_id in newspapers:
            domain = client.get(
                f"/api/topics/{t}/ontology", params={"newspaper": np_id}
            ).json()
            total += len(domain["edges"])
        assert total == len(core["edges"])

    def test_cross_topic_modes(self, client):
        title = client.get("/api/cross-topic?mode=title").json()
        body = client.get("/api/cross-topic?mode=body").json()
        assert title and body
        assert abs(sum(r["sentiment_deviation"] for r in title)) < 1e-6

    def test_articles_click_through(self, client):
        tree = client.get("/api/topics").json()
        t = next(t["topic_id"] for t in tree if t["level"] == 0 and t["topic_id"] != -1)
        points = client.get(f"/api/topics/{t}/spectrum?mode=title").json()
        np_id = points[0]["newspaper_id"]
        rows = client.get(
            f"/api/topics/{t}/articles", params={"newspaper": np_id}
        ).json()
        assert rows
        assert all(r["newspaper_id"] == np_id for r in rows)
