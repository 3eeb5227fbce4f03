"""Driving the extraction endpoint, one fresh conversation per attempt.

Each attempt is a stateless single-turn request so no article leaks context
into another. Unparseable replies are retried up to max_retries; transport
failures back off exponentially. A shared request budget hard-stops a batch
before it can run away on a paid endpoint.
"""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass, field
from typing import Callable, Protocol

import httpx

from ..corpus.models import Article
from ..errors import ExternalServiceError
from .models import OntologyDocument
from .parse import ParseError, parse_reply
from .prompt import build_prompt

log = logging.getLogger(__name__)

ENV_URL = "BIASLENS_LLM_URL"
ENV_KEY = "BIASLENS_LLM_KEY"

TRANSPORT_RETRIES = 3
BACKOFF_BASE_SECONDS = 1.0
BACKOFF_FACTOR = 2.0


class BudgetExhausted(ExternalServiceError):
    pass


@dataclass
class RequestBudget:
    """Hard cap on endpoint requests for one batch; None means unlimited."""

    cap: int | None = None
    used: int = 0

    def spend(self) -> None:
        if self.cap is not None and self.used >= self.cap:
            raise BudgetExhausted(f"request budget of {self.cap} exhausted")
        self.used += 1


class LlmClient(Protocol):
    def complete(self, prompt: str, article_id: str) -> str: ...


class HttpLlmClient:
    """POSTs {model, temperature, prompt} and expects {"text": ...} back.

    Endpoint and credential come from BIASLENS_LLM_URL / BIASLENS_LLM_KEY
    unless given explicitly. Temperature defaults to 0 for reproducibility.
    """

    def __init__(
        self,
        url: str | None = None,
        key: str | None = None,
        model: str = "default",
        temperature: float = 0.0,
        timeout: float = 60.0,
    ):
        self.url = url or os.environ.get(ENV_URL, "")
        self.key = key or os.environ.get(ENV_KEY, "")
        self.model = model
        self.temperature = temperature
        self.timeout = timeout
        if not self.url:
            raise ExternalServiceError(
                f"no LLM endpoint configured; set {ENV_URL}"
            )

    def complete(self, prompt: str, article_id: str) -> str:
        headers = {"Authorization": f"Bearer {self.key}"} if self.key else {}
        try:
            response = httpx.post(
                self.url,
                json={
                    "model": self.model,
                    "temperature": self.temperature,
                    "prompt": prompt,
                },
                headers=headers,
                timeout=self.timeout,
            )
            response.raise_for_status()
            return response.json()["text"]
        except (httpx.HTTPError, KeyError, ValueError) as exc:
            raise ExternalServiceError(f"LLM request failed: {exc}") from exc


class CannedReplyClient:
    """Replies served from a mapping, for offline runs and tests.

    A list value yields one reply per attempt (repeating the last); a string
    is returned every time.
    """

    def __init__(self, replies: dict[str, str | list[str]]):
        self.replies = replies
        self._cursor: dict[str, int] = {}

    def complete(self, prompt: str, article_id: str) -> str:
        if article_id not in self.replies:
            raise ExternalServiceError(f"no canned reply for {article_id!r}")
        value = self.replies[article_id]
        if isinstance(value, str):
            return value
        i = self._cursor.get(article_id, 0)
        self._cursor[article_id] = i + 1
        return value[min(i, len(value) - 1)]


def _request_with_backoff(
    client: LlmClient,
    prompt: str,
    article_id: str,
    budget: RequestBudget,
    sleep: Callable[[float], None],
) -> str:
    delay = BACKOFF_BASE_SECONDS
    for attempt in range(TRANSPORT_RETRIES + 1):
        budget.spend()
        try:
            return client.complete(prompt, article_id)
        except BudgetExhausted:
            raise
        except ExternalServiceError:
            if attempt == TRANSPORT_RETRIES:
                raise
            sleep(delay)
            delay *= BACKOFF_FACTOR
    raise AssertionError("unreachable")


def extract(
    article: Article,
    client: LlmClient,
    max_retries: int = 2,
    body: str | None = None,
    budget: RequestBudget | None = None,
    sleep: Callable[[float], None] = time.sleep,
) -> OntologyDocument:
    """Extract one article's ontology; never mixes attempts or articles.

    Unparseable replies consume parse attempts (1 + max_retries total); when
    they run out the document is marked failed with the last raw reply kept.
    """
    budget = budget if budget is not None else RequestBudget()
    prompt = build_prompt(article, body)
    raw = ""
    for attempt in range(1, max_retries + 2):
        raw = _request_with_backoff(client, prompt, article.id, budget, sleep)
        try:
            doc = parse_reply(raw, article.id)
        except ParseError:
            log.warning("article %s: unparseable reply (attempt %d)", article.id, attempt)
            continue
        doc.attempt_count = attempt
        return doc
    return OntologyDocument(
        article_id=article.id,
        raw_reply=raw,
        attempt_count=max_retries + 1,
        failed=True,
    )


def extract_batch(
    articles: list[Article],
    client: LlmClient,
    max_retries: int = 2,
    bodies: dict[str, str] | None = None,
    request_cap: int | None = None,
    sleep: Callable[[float], None] = time.sleep,
) -> list[OntologyDocument]:
    """Extract articles in a stable order under one shared budget."""
    budget = RequestBudget(cap=request_cap)
    docs = []
    for article in sorted(articles, key=lambda a: a.id):
        body = (bodies or {}).get(article.id)
        docs.append(
            extract(article, client, max_retries, body, budget, sleep)
        )
    return docs
