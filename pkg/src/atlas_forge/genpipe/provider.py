"""Chat-completion providers and the validate-and-repair completion loop."""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from typing import Callable, Protocol, Sequence, TypeVar

import httpx

from .parsers import MalformedOutput
from .prompts import PromptSpec, render_messages

log = logging.getLogger(__name__)

T = TypeVar("T")

DEFAULT_MAX_RETRIES = 3


class TransportError(RuntimeError):
    """Provider unreachable or replied with a non-success status."""


class RepairExhausted(RuntimeError):
    """Provider kept replying invalid output for max_retries re-asks."""

    def __init__(self, attempts: int, problems: list[str]):
        super().__init__(f"no valid reply after {attempts} attempts; last problems: {'; '.join(problems)}")
        self.attempts = attempts
        self.problems = problems


@dataclass(frozen=True)
class ProviderConfig:
    base_url: str
    model_name: str
    auth_token_env: str = "ATLAS_FORGE_API_TOKEN"
    temperature: float = 0.0
    max_retries: int = DEFAULT_MAX_RETRIES
    timeout: float = 60.0

    def __post_init__(self) -> None:
        if not 0 <= self.max_retries <= 10:
            raise ValueError("max_retries must be in [0, 10]")
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")


def load_provider_config(path) -> ProviderConfig:
    with open(path, encoding="utf-8") as fh:
        return ProviderConfig(**json.load(fh))


class Provider(Protocol):
    """Anything that can answer a PromptSpec with reply text."""

    max_retries: int

    def complete(self, prompt: PromptSpec, feedback: Sequence[str] = ()) -> str: ...


class HttpProvider:
    """Client for the common chat-completions wire format."""

    def __init__(self, config: ProviderConfig):
        self.config = config
        self.max_retries = config.max_retries

    def _headers(self) -> dict[str, str]:
        headers = {"Content-Type": "application/json"}
        token = os.environ.get(self.config.auth_token_env, "")
        if token:
            headers["Authorization"] = f"Bearer {token}"
        return headers

    def complete(self, prompt: PromptSpec, feedback: Sequence[str] = ()) -> str:
        body = {
            "model": self.config.model_name,
            "messages": render_messages(prompt, feedback),
            "temperature": self.config.temperature,
        }
        url = self.config.base_url.rstrip("/") + "/chat/completions"
        try:
            response = httpx.post(url, json=body, headers=self._headers(), timeout=self.config.timeout)
        except httpx.HTTPError as exc:
            raise TransportError(f"provider request failed: {exc}") from exc
        if response.status_code != 200:
            raise TransportError(f"provider returned HTTP {response.status_code}")
        try:
            return response.json()["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise TransportError(f"provider reply has unexpected shape: {exc}") from exc


def complete_with_repair(
    provider: Provider,
    prompt: PromptSpec,
    parser: Callable[[str], T],
    max_retries: int | None = None,
) -> T:
    """Ask, parse, and on malformed output re-ask with the problems quoted back.

    Makes at most 1 + max_retries attempts; the first parse success wins.
    """
    retries = max_retries if max_retries is not None else getattr(provider, "max_retries", DEFAULT_MAX_RETRIES)
    problems: list[str] = []
    for attempt in range(retries + 1):
        text = provider.complete(prompt, feedback=tuple(problems))
        try:
            return parser(text)
        except MalformedOutput as exc:
            problems = exc.problems
            log.debug("attempt %d invalid (%s): %s", attempt + 1, prompt.output_schema, exc)
    raise RepairExhausted(retries + 1, problems)
