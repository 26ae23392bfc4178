"""Declarative category assignment.

Hand labeling does not reproduce, so the ten category flags are assigned by
a rule table: keyword predicates over named use fields, plus a passthrough
rule for the daily flag. The default table ships as ``assets/categories.toml``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from . import assets
from .model import CATEGORY_NAMES, CategorySet, UseCase

DEFAULT_RULE_FIELDS = ("purpose", "capability", "ai_user", "ai_subject", "domain", "short_description")


class RuleTableError(ValueError):
    """Raised when a rule table fails to load or does not cover all categories."""


@dataclass(frozen=True)
class CategoryRule:
    category: str
    keywords: tuple[str, ...] = ()
    fields: tuple[str, ...] = DEFAULT_RULE_FIELDS
    from_daily_flag: bool = False

    def matches(self, use: UseCase) -> bool:
        if self.from_daily_flag:
            return use.daily
        haystacks = [getattr(use, name).casefold() for name in self.fields]
        return any(kw.casefold() in hay for kw in self.keywords for hay in haystacks)


@dataclass(frozen=True)
class RuleTable:
    """One rule per category, covering all ten."""

    rules: tuple[CategoryRule, ...]

    def __post_init__(self) -> None:
        covered = {rule.category for rule in self.rules}
        missing = set(CATEGORY_NAMES) - covered
        unknown = covered - set(CATEGORY_NAMES)
        if missing:
            raise RuleTableError(f"rule table missing categories: {sorted(missing)}")
        if unknown:
            raise RuleTableError(f"rule table has unknown categories: {sorted(unknown)}")
        if len(self.rules) != len(covered):
            raise RuleTableError("rule table has duplicate categories")

    def rule_for(self, category: str) -> CategoryRule:
        for rule in self.rules:
            if rule.category == category:
                return rule
        raise KeyError(category)


def _rule_from_toml(category: str, body: dict) -> CategoryRule:
    if not isinstance(body, dict):
        raise RuleTableError(f"rule for {category!r} is not a table")
    allowed = {"keywords", "fields", "from_daily_flag"}
    unknown = set(body) - allowed
    if unknown:
        raise RuleTableError(f"rule for {category!r} has unknown keys: {sorted(unknown)}")
    from_daily = bool(body.get("from_daily_flag", False))
    keywords = tuple(body.get("keywords", ()))
    if not from_daily and not keywords:
        raise RuleTableError(f"rule for {category!r} needs keywords or from_daily_flag")
    fields = tuple(body.get("fields", DEFAULT_RULE_FIELDS))
    bad_fields = set(fields) - set(DEFAULT_RULE_FIELDS)
    if bad_fields:
        raise RuleTableError(f"rule for {category!r} names unknown fields: {sorted(bad_fields)}")
    return CategoryRule(category=category, keywords=keywords, fields=fields, from_daily_flag=from_daily)


def parse_rule_table(data: bytes) -> RuleTable:
    try:
        doc = tomllib.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, tomllib.TOMLDecodeError) as exc:
        raise RuleTableError(f"invalid rule table: {exc}") from None
    categories = doc.get("category")
    if not isinstance(categories, dict):
        raise RuleTableError("rule table must contain [category.\"...\"] tables")
    rules = tuple(_rule_from_toml(name, body) for name, body in categories.items())
    return RuleTable(rules)


def load_rule_table(path) -> RuleTable:
    with open(path, "rb") as fh:
        return parse_rule_table(fh.read())


@lru_cache(maxsize=1)
def default_rule_table() -> RuleTable:
    return parse_rule_table(assets.default_rules_toml())


def assign_categories(use: UseCase, rules: RuleTable) -> CategorySet:
    """Evaluate every rule against the use; pure and deterministic."""
    return CategorySet(tuple(rules.rule_for(name).matches(use) for name in CATEGORY_NAMES))
