import json

import pytest

from biaslens.corpus import (
    Article,
    Newspaper,
    NoiseRule,
    apply_noise_rules,
    classify_language,
    filter_language,
    ingest_corpus,
)
from biaslens.corpus.models import Corpus
from biaslens.errors import ValidationError


@pytest.fixture
def newspapers_file(tmp_path):
    path = tmp_path / "newspapers.json"
    path.write_text(
        json.dumps(
            [
                {"id": "np1", "name": "Alpha Post", "country": "AA", "city": "Alda",
                 "latitude": 10.0, "longitude": 20.0},
                {"id": "np2", "name": "Beta Times", "country": "BB", "city": "Beto"},
            ]
        )
    )
    return path


def write_articles(tmp_path, records):
    path = tmp_path / "articles.jsonl"
    path.write_text("\n".join(json.dumps(r) for r in records))
    return path


class TestIngest:
    def test_empty_file_zero_stats(self, tmp_path, newspapers_file):
        path = write_articles(tmp_path, [])
        corpus, stats, errors = ingest_corpus(path, newspapers_file)
        assert stats.article_count == 0
        assert errors == []

    def test_byte_identical_duplicates_kept(self, tmp_path, newspapers_file):
        rec = {"title": "Same story", "body": "Exactly the same text."}
        path = write_articles(
            tmp_path,
            [
                {"id": "a1", "newspaper_id": "np1", **rec},
                {"id": "a2", "newspaper_id": "np2", **rec},
            ],
        )
        corpus, stats, errors = ingest_corpus(path, newspapers_file)
        assert stats.article_count == 2
        assert errors == []

    def test_unknown_newspaper_rejected_rest_kept(self, tmp_path, newspapers_file):
        path = write_articles(
            tmp_path,
            [
                {"id": "a1", "newspaper_id": "np1", "title": "t", "body": "b"},
                {"id": "a2", "newspaper_id": "nope", "title": "t", "body": "b"},
                {"id": "a3", "newspaper_id": "np2", "title": "t", "body": "b"},
            ],
        )
        corpus, stats, errors = ingest_corpus(path, newspapers_file)
        assert stats.article_count == 2
        assert len(errors) == 1
        assert errors[0].record_id == "a2"

    def test_malformed_record_collected(self, tmp_path, newspapers_file):
        path = tmp_path / "articles.jsonl"
        path.write_text('{"id": "a1", "newspaper_id": "np1", "title": "t", "body": "b"}\nnot json\n')
        corpus, stats, errors = ingest_corpus(path, newspapers_file)
        assert stats.article_count == 1
        assert len(errors) == 1

    def test_reingest_identical_hash(self, tmp_path, newspapers_file):
        path = write_articles(
            tmp_path,
            [{"id": "a1", "newspaper_id": "np1", "title": "t", "body": "b"}],
        )
        c1, _, _ = ingest_corpus(path, newspapers_file)
        c2, _, _ = ingest_corpus(path, newspapers_file)
        assert c1.content_hash() == c2.content_hash()

    def test_title_body_verbatim(self, tmp_path, newspapers_file):
        body = "Line one\n\n  weird  spacing\tand\ttabs  "
        path = write_articles(
            tmp_path,
            [{"id": "a1", "newspaper_id": "np1", "title": " T ", "body": body}],
        )
        corpus, _, _ = ingest_corpus(path, newspapers_file)
        assert corpus.articles["a1"].body == body
        assert corpus.articles["a1"].title == " T "


class TestNewspaperInvariants:
    def test_lat_without_lon_rejected(self):
        with pytest.raises(ValidationError):
            Newspaper(id="x", name="X", latitude=10.0)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValidationError):
            Newspaper(id="x", name="X", latitude=95.0, longitude=0.0)


def make_corpus(articles):
    papers = {a.newspaper_id for a in articles}
    corpus = Corpus(newspapers={p: Newspaper(id=p, name=p) for p in papers})
    for a in articles:
        corpus.add(a)
    return corpus


GERMAN_PARAGRAPH = (
    "Die Regierung hat heute angekündigt, dass die Verhandlungen über den "
    "neuen Haushalt in der kommenden Woche fortgesetzt werden sollen. Die "
    "Ministerien müssen ihre Vorschläge bis Ende des Monats einreichen."
)

FRENCH_SNIPPET = (
    "Le gouvernement a annoncé que les négociations sur le nouveau budget "
    "se poursuivraient la semaine prochaine dans la capitale."
)

SPANISH_SNIPPET = (
    "El gobierno anunció que las negociaciones sobre el nuevo presupuesto "
    "continuarán la próxima semana en la capital del país."
)

ENGLISH_SNIPPETS = [
    "The government announced that budget negotiations will continue next week.",
    "Police said the investigation into the incident is still ongoing today.",
    "The new bridge across the river opened to traffic on Monday morning.",
    "Scientists reported a significant increase in ocean temperatures this year.",
]

NON_ENGLISH_SNIPPETS = [
    GERMAN_PARAGRAPH,
    FRENCH_SNIPPET,
    SPANISH_SNIPPET,
    "Die Stadt plant den Bau einer neuen Schule im nächsten Jahr. Die Kosten werden auf mehrere Millionen geschätzt.",
    "Les habitants de la ville ont manifesté contre la fermeture de l'hôpital pendant le week-end dernier.",
    "Los vecinos del barrio protestaron contra el cierre del hospital durante el fin de semana pasado.",
]


class TestLanguage:
    def test_all_tagged_en_nothing_removed(self):
        corpus = make_corpus(
            [
                Article(id=f"a{i}", newspaper_id="n", title="t", body="b", language_tag="en")
                for i in range(3)
            ]
        )
        kept, removed = filter_language(corpus, "en")
        assert removed == []
        assert len(kept) == 3

    def test_mixed_tags_partition(self):
        corpus = make_corpus(
            [
                Article(id="a1", newspaper_id="n", title="t", body="b", language_tag="en"),
                Article(id="a2", newspaper_id="n", title="t", body="b", language_tag="de"),
                Article(id="a3", newspaper_id="n", title="t", body="b", language_tag="fr"),
                Article(id="a4", newspaper_id="n", title="t", body="b", language_tag="en-GB"),
            ]
        )
        kept, removed = filter_language(corpus, "en")
        assert sorted(removed) == ["a2", "a3"]
        assert sorted(kept) == ["a1", "a4"]

    def test_untagged_german_removed(self):
        corpus = make_corpus(
            [Article(id="de1", newspaper_id="n", title="Ankündigung", body=GERMAN_PARAGRAPH)]
        )
        kept, removed = filter_language(corpus, "en")
        assert removed == ["de1"]

    def test_trigram_scorer_on_hand_labeled_snippets(self):
        for text in ENGLISH_SNIPPETS:
            assert classify_language(text) == "en", text
        for text in NON_ENGLISH_SNIPPETS:
            assert classify_language(text) != "en", text

    def test_short_text_kept_with_warning(self, caplog):
        corpus = make_corpus(
            [Article(id="s1", newspaper_id="n", title="", body="zu kurz")]
        )
        kept, removed = filter_language(corpus, "en")
        assert kept == ["s1"]

    def test_exclusion_never_deletes(self):
        corpus = make_corpus(
            [
                Article(id=f"a{i}", newspaper_id="n", title="t", body="b",
                        language_tag=tag)
                for i, tag in enumerate(["en", "de", "fr", "en", "es"])
            ]
        )
        kept, removed = filter_language(corpus, "en")
        assert len(kept) + len(removed) == len(corpus)


class TestNoiseRules:
    def article(self, body):
        return Article(id="a1", newspaper_id="np1", title="Title", body=body)

    def test_no_match_identity(self):
        rule = NoiseRule(newspaper_id="np1", pattern=r"Advertisement\n.*?\n")
        result = apply_noise_rules(self.article("Plain body text."), [rule])
        assert result.body == "Plain body text."
        assert result.rules_applied == 0

    def test_ad_block_removed(self):
        body = "First paragraph.\nAdvertisement\nBuy now!\nSecond paragraph."
        rule = NoiseRule(newspaper_id="np1", pattern=r"Advertisement\n.*?\n")
        result = apply_noise_rules(self.article(body), [rule])
        assert result.body == "First paragraph.\nSecond paragraph."

    def test_sequential_application_in_order(self):
        body = "abcabc"
        r1 = NoiseRule(newspaper_id="np1", pattern="ab", order=1)
        r2 = NoiseRule(newspaper_id="np1", pattern="cc", order=2)
        # after r1: "cc"; then r2 removes it entirely
        result = apply_noise_rules(self.article(body), [r2, r1])
        assert result.body == ""
        assert result.emptied

    def test_order_values_decide_not_declaration_order(self):
        body = "abcabc"
        r1 = NoiseRule(newspaper_id="np1", pattern="ab", order=1)
        r2 = NoiseRule(newspaper_id="np1", pattern="cc", order=2)
        a = apply_noise_rules(self.article(body), [r1, r2]).body
        b = apply_noise_rules(self.article(body), [r2, r1]).body
        assert a == b

    def test_other_newspaper_rules_ignored(self):
        rule = NoiseRule(newspaper_id="np2", pattern=".*", order=0)
        result = apply_noise_rules(self.article("keep me"), [rule])
        assert result.body == "keep me"

    def test_title_untouched(self):
        rule = NoiseRule(newspaper_id="np1", pattern="Title")
        result = apply_noise_rules(self.article("Title in body"), [rule])
        assert result.body == " in body"

    def test_bad_pattern_rejected(self):
        with pytest.raises(ValidationError):
            NoiseRule(newspaper_id="np1", pattern="(unclosed")
