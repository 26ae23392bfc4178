"""Loaders for the text corpora and config files shipped with the package."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources


def _read_asset(name: str) -> str:
    return resources.files("atlas_forge").joinpath("assets", name).read_text("utf-8")


def _lines(text: str) -> tuple[str, ...]:
    return tuple(
        line.strip() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")
    )


@lru_cache(maxsize=None)
def default_domains() -> tuple[str, ...]:
    """The default application-domain list for the generation fan-out."""
    return _lines(_read_asset("domains.txt"))


def load_domains_file(path) -> tuple[str, ...]:
    with open(path, encoding="utf-8") as fh:
        return _lines(fh.read())


@lru_cache(maxsize=None)
def sdg_definitions() -> tuple[str, ...]:
    return _lines(_read_asset("sdgs.txt"))


@lru_cache(maxsize=None)
def udhr_articles() -> tuple[str, ...]:
    return _lines(_read_asset("udhr.txt"))


@lru_cache(maxsize=None)
def eu_ai_act_excerpts() -> tuple[str, ...]:
    return _lines(_read_asset("eu_ai_act.txt"))


@lru_cache(maxsize=None)
def default_palette() -> dict[str, str]:
    return json.loads(_read_asset("palette.json"))


def default_rules_toml() -> bytes:
    return resources.files("atlas_forge").joinpath("assets", "categories.toml").read_bytes()
