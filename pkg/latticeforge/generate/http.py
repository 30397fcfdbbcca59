"""Chat-completion client for OpenAI-compatible endpoints."""

from __future__ import annotations

import logging
import os
import time
from typing import Any, Dict, List, Optional

import backoff
import requests

from ..errors import AuthError, ConfigError, TransportError
from ..prompting.builder import MetaPrompt
from .base import GenerationOutput

logger = logging.getLogger(__name__)

RETRY_STATUSES = frozenset({429, 500, 502, 503, 504})


class _RetryableStatus(Exception):
    def __init__(self, status: int):
        super().__init__(f"HTTP {status}")
        self.status = status


def completions_url(endpoint: str) -> str:
    base = endpoint.rstrip("/")
    return base if base.endswith("/chat/completions") else base + "/chat/completions"


class ChatCompletionGenerator:
    """
    Sends each meta-prompt as a single user message. Transport failures and
    429/5xx statuses are retried with exponential backoff; 401/403 fail at
    once with AuthError.
    """

    backend = "http"

    def __init__(
        self,
        endpoint: str,
        model: str,
        api_key_env: str,
        *,
        temperature: float = 1.0,
        max_tokens: int = 2048,
        timeout: float = 120.0,
        max_retries: int = 3,
        backoff_base: float = 1.0,
        session: Optional[requests.Session] = None,
    ):
        key = os.environ.get(api_key_env, "").strip()
        if not key:
            raise ConfigError(f"environment variable {api_key_env} is not set")
        self.url = completions_url(endpoint)
        self.model = model
        self.temperature = temperature
        self.max_tokens = max_tokens
        self.timeout = timeout
        self.max_retries = max_retries
        self.backoff_base = backoff_base
        self.session = session or requests.Session()
        self._api_key = key
        self.attempts = 0
        self.backoff_waits: List[float] = []

    def __repr__(self) -> str:
        return f"ChatCompletionGenerator(url={self.url!r}, model={self.model!r})"

    def _headers(self) -> Dict[str, str]:
        return {
            "Authorization": f"Bearer {self._api_key}",
            "Content-Type": "application/json",
        }

    def _on_backoff(self, details: Dict[str, Any]) -> None:
        self.backoff_waits.append(float(details["wait"]))
        logger.warning(
            "chat completion attempt %d failed (%s), retrying in %.2fs",
            details["tries"],
            details["exception"],
            details["wait"],
        )

    def _post_once(self, payload: Dict[str, Any]) -> Dict[str, Any]:
        self.attempts += 1
        resp = self.session.post(self.url, headers=self._headers(), json=payload, timeout=self.timeout)
        if resp.status_code in (401, 403):
            raise AuthError(f"endpoint rejected credentials (HTTP {resp.status_code})")
        if resp.status_code in RETRY_STATUSES:
            raise _RetryableStatus(resp.status_code)
        if resp.status_code >= 400:
            raise TransportError(f"chat completion failed with HTTP {resp.status_code}")
        try:
            data = resp.json()
        except ValueError as e:
            raise TransportError("chat completion response is not JSON") from e
        return data

    def complete(self, text: str) -> GenerationOutput:
        payload = {
            "model": self.model,
            "messages": [{"role": "user", "content": text}],
            "temperature": self.temperature,
            "max_tokens": self.max_tokens,
        }
        logger.debug("chat completion request to %s (%d prompt chars)", self.url, len(text))

        post = backoff.on_exception(
            backoff.expo,
            (_RetryableStatus, requests.exceptions.ConnectionError, requests.exceptions.Timeout),
            max_tries=self.max_retries + 1,
            factor=self.backoff_base,
            jitter=None,
            on_backoff=self._on_backoff,
            logger=None,
        )(self._post_once)

        started = time.perf_counter()
        try:
            data = post(payload)
        except (_RetryableStatus, requests.exceptions.RequestException) as e:
            raise TransportError(f"chat completion failed after {self.attempts} attempts: {e}") from e
        latency = time.perf_counter() - started

        try:
            content = data["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError) as e:
            raise TransportError("chat completion response has no message content") from e
        usage = data.get("usage") or {}
        return GenerationOutput(
            text=content or "",
            latency=latency,
            prompt_tokens=usage.get("prompt_tokens"),
            completion_tokens=usage.get("completion_tokens"),
        )

    def generate(self, prompt: MetaPrompt) -> GenerationOutput:
        return self.complete(prompt.text)
