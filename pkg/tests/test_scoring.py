import json

import pytest
from hypothesis import given, strategies as st

from biaslens.corpus.models import Article, Corpus, Newspaper
from biaslens.errors import ValidationError
from biaslens.scoring import (
    DocumentSentiment,
    baseline_lexicon_score,
    load_scores,
    simplified_score,
    truncation_audit,
)


def small_corpus(n=5):
    corpus = Corpus(newspapers={"p": Newspaper(id="p", name="P")})
    for i in range(n):
        corpus.add(Article(id=f"a{i}", newspaper_id="p", title=f"T{i}", body=f"B{i}"))
    return corpus


class TestSimplified:
    def test_basic(self):
        assert simplified_score(0.6, 0.3, 0.1) == pytest.approx(0.5)

    def test_uniform_is_zero(self):
        assert simplified_score(1 / 3, 1 / 3, 1 / 3) == pytest.approx(0.0)

    def test_all_negative_boundary(self):
        assert simplified_score(0.0, 0.0, 1.0) == -1.0

    def test_bad_sum_rejected(self):
        with pytest.raises(ValidationError):
            simplified_score(0.9, 0.9, 0.1)

    @given(
        st.tuples(st.floats(0, 1), st.floats(0, 1), st.floats(0, 1)).filter(
            lambda t: sum(t) > 1e-6
        )
    )
    def test_range_and_antisymmetry(self, raw):
        total = sum(raw)
        p, neu, n = (x / total for x in raw)
        s = simplified_score(p, neu, n)
        assert -1.0 <= s <= 1.0
        assert simplified_score(n, neu, p) == pytest.approx(-s)


class TestLoadScores:
    def write(self, tmp_path, records):
        path = tmp_path / "sentiment.jsonl"
        path.write_text("\n".join(json.dumps(r) for r in records))
        return path

    def rec(self, aid, kind="title", p=0.5, neu=0.3, n=0.2, model="m1"):
        return {
            "article_id": aid, "doc_kind": kind,
            "positive": p, "neutral": neu, "negative": n, "model_id": model,
        }

    def test_empty_file(self, tmp_path):
        scores, rejects = load_scores(self.write(tmp_path, []), small_corpus())
        assert len(scores) == 0 and rejects == []

    def test_unknown_id_rejected_others_loaded(self, tmp_path):
        records = [self.rec(f"a{i}") for i in range(4)] + [self.rec("ghost")]
        scores, rejects = load_scores(self.write(tmp_path, records), small_corpus())
        assert len(scores) == 4
        assert len(rejects) == 1

    def test_duplicate_rejected(self, tmp_path):
        records = [self.rec("a0"), self.rec("a0")]
        scores, rejects = load_scores(self.write(tmp_path, records), small_corpus())
        assert len(scores) == 1
        assert "duplicate" in rejects[0]["reason"]

    def test_idempotent(self, tmp_path):
        path = self.write(tmp_path, [self.rec("a0"), self.rec("a1", kind="body")])
        corpus = small_corpus()
        s1, _ = load_scores(path, corpus)
        s2, _ = load_scores(path, corpus)
        assert s1.scores == s2.scores

    def test_coverage_fractions(self, tmp_path):
        path = self.write(tmp_path, [self.rec("a0"), self.rec("a1")])
        scores, _ = load_scores(path, small_corpus(4))
        assert scores.coverage(small_corpus(4)) == {"title": 0.5, "body": 0.0}

    def test_probability_sum_rejected_with_line(self, tmp_path):
        path = self.write(tmp_path, [self.rec("a0", p=0.9, neu=0.9, n=0.1)])
        scores, rejects = load_scores(path, small_corpus())
        assert len(scores) == 0
        assert rejects[0]["line"] == 1


class TestBaselineLexicon:
    def test_empty_text_neutral(self):
        assert baseline_lexicon_score("") == (0.0, 1.0, 0.0)

    def test_all_positive_words(self):
        p, neu, n = baseline_lexicon_score("peace hope victory")
        assert p == 1.0 and n == 0.0

    def test_hand_counted_mixed_sentence(self):
        # tokens: the attack was terrible but the rescue brought hope (9 tokens)
        # negative hits: attack, terrible (2); positive hits: rescue, hope (2)
        p, neu, n = baseline_lexicon_score(
            "The attack was terrible but the rescue brought hope"
        )
        assert p == pytest.approx(2 / 9)
        assert n == pytest.approx(2 / 9)
        assert neu == pytest.approx(5 / 9)

    def test_deterministic(self):
        text = "Victory and disaster in the same story"
        assert baseline_lexicon_score(text) == baseline_lexicon_score(text)

    def test_valid_probability_triple(self):
        p, neu, n = baseline_lexicon_score("war peace war peace war")
        assert p + neu + n == pytest.approx(1.0)
        DocumentSentiment("x", "title", p, neu, n)  # passes invariants


class TestTruncationAudit:
    def corpus_with_body(self, body):
        corpus = Corpus(newspapers={"p": Newspaper(id="p", name="P")})
        corpus.add(Article(id="a", newspaper_id="p", title="Short title", body=body))
        return corpus

    def test_short_not_listed(self):
        assert truncation_audit(self.corpus_with_body("few words here")) == []

    def test_600_tokens_listed(self):
        report = truncation_audit(self.corpus_with_body("tok " * 600))
        assert report == [{"article_id": "a", "doc_kind": "body", "tokens": 600}]

    def test_exactly_512_not_listed(self):
        assert truncation_audit(self.corpus_with_body("tok " * 512)) == []
