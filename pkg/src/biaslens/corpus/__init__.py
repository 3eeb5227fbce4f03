from .models import Article, Corpus, CorpusStats, Newspaper, NoiseRule, RecordError
from .ingest import ingest_corpus, load_articles, load_newspapers, load_noise_rules
from .language import classify_language, filter_language
from .cleaning import apply_noise_rules, clean_corpus

__all__ = [
    "Article",
    "Corpus",
    "CorpusStats",
    "Newspaper",
    "NoiseRule",
    "RecordError",
    "ingest_corpus",
    "load_articles",
    "load_newspapers",
    "load_noise_rules",
    "classify_language",
    "filter_language",
    "apply_noise_rules",
    "clean_corpus",
]
