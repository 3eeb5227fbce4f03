"""Noise removal driven by newspaper-specific regex rules.

Matches are deleted from the body; titles are never touched. The original
body stays on the Article record, so cleaning is non-destructive and can be
re-run with new rules without re-ingesting.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .models import Article, Corpus, NoiseRule


@dataclass
class CleanResult:
    article_id: str
    body: str
    rules_applied: int
    chars_removed: int
    emptied: bool = False


@dataclass
class CleanReport:
    results: dict[str, CleanResult] = field(default_factory=dict)
    emptied_ids: list[str] = field(default_factory=list)

    @property
    def total_chars_removed(self) -> int:
        return sum(r.chars_removed for r in self.results.values())


def apply_noise_rules(article: Article, rules: list[NoiseRule]) -> CleanResult:
    """Apply the article's newspaper rules in ascending `order`.

    A rule that empties the body is allowed but flagged.
    """
    own = sorted(
        (r for r in rules if r.newspaper_id == article.newspaper_id),
        key=lambda r: r.order,
    )
    body = article.body
    applied = 0
    for rule in own:
        new_body, n = rule.compiled().subn("", body)
        if n:
            applied += 1
        body = new_body
    emptied = bool(article.body.strip()) and not body.strip()
    return CleanResult(
        article_id=article.id,
        body=body,
        rules_applied=applied,
        chars_removed=len(article.body) - len(body),
        emptied=emptied,
    )


def clean_corpus(corpus: Corpus, rules: list[NoiseRule]) -> CleanReport:
    report = CleanReport()
    for article in corpus:
        result = apply_noise_rules(article, rules)
        report.results[article.id] = result
        if result.emptied:
            report.emptied_ids.append(article.id)
    return report
