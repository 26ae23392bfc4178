"""Domain types for the atlas: uses, impact cards, category flags, datasets.

All types are immutable value objects and safe to share across threads.
Validation never mutates and reports violations as data rather than raising.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping

SCHEMA_VERSION = 1

MAX_COMPONENT_LENGTH = 200

#: The five fields that define a use and feed its identity hash.
COMPONENT_FIELDS = ("purpose", "capability", "ai_user", "ai_subject", "domain")


class RiskLevel(str, Enum):
    """Risk tier of a use: banned, regulated, or minimal obligations."""

    UNACCEPTABLE = "unacceptable"
    HIGH = "high"
    LIMITED_LOW = "limited-low"

    @property
    def severity(self) -> int:
        """Ordering key: unacceptable > high > limited-low."""
        return _RISK_SEVERITY[self]

    @classmethod
    def from_value(cls, value: str) -> "RiskLevel":
        try:
            return cls(value)
        except ValueError:
            raise ValueError(f"unknown risk level {value!r}") from None


_RISK_SEVERITY = {
    RiskLevel.UNACCEPTABLE: 2,
    RiskLevel.HIGH: 1,
    RiskLevel.LIMITED_LOW: 0,
}


class ImplementationPotential(str, Enum):
    EXISTING = "existing"
    UPCOMING = "upcoming"
    UNLIKELY = "unlikely"


class SocioTechnicalLayer(str, Enum):
    """Layer a risk or benefit acts on."""

    CAPABILITY = "capability"
    HUMAN_INTERACTION = "human-interaction"
    SYSTEMIC_IMPACT = "systemic-impact"


class AffectedParty(str, Enum):
    SUBJECT = "subject"
    USER = "user"
    SOCIETY = "society"


#: The ten category flags, in their fixed order.
CATEGORY_NAMES = (
    "application-area:public-sector",
    "application-area:law-enforcement",
    "application-area:commerce",
    "application-area:health",
    "subject:children",
    "subject:general-public",
    "subject:workers",
    "impact:critical-infrastructure",
    "impact:entertainment",
    "use:daily",
)


@dataclass(frozen=True)
class CategorySet:
    """Ten boolean flags in the fixed :data:`CATEGORY_NAMES` order."""

    flags: tuple[bool, ...] = field(default=(False,) * 10)

    def __post_init__(self) -> None:
        if len(self.flags) != len(CATEGORY_NAMES):
            raise ValueError(f"expected {len(CATEGORY_NAMES)} flags, got {len(self.flags)}")
        if any(not isinstance(f, bool) for f in self.flags):
            raise ValueError("category flags must be booleans")

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "CategorySet":
        wanted = set(names)
        unknown = wanted - set(CATEGORY_NAMES)
        if unknown:
            raise ValueError(f"unknown categories: {sorted(unknown)}")
        return cls(tuple(name in wanted for name in CATEGORY_NAMES))

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, bool]) -> "CategorySet":
        missing = set(CATEGORY_NAMES) - set(mapping)
        unknown = set(mapping) - set(CATEGORY_NAMES)
        if missing or unknown:
            raise ValueError(f"category mapping mismatch: missing={sorted(missing)} unknown={sorted(unknown)}")
        return cls(tuple(bool(mapping[name]) for name in CATEGORY_NAMES))

    def __getitem__(self, name: str) -> bool:
        return self.flags[CATEGORY_NAMES.index(name)]

    def as_dict(self) -> dict[str, bool]:
        return dict(zip(CATEGORY_NAMES, self.flags))

    def true_names(self) -> tuple[str, ...]:
        return tuple(n for n, f in zip(CATEGORY_NAMES, self.flags) if f)


def use_id(purpose: str, capability: str, ai_user: str, ai_subject: str, domain: str) -> str:
    """Stable id derived from the five components (lowercased, joined, hashed)."""
    key = "|".join(part.strip().lower() for part in (purpose, capability, ai_user, ai_subject, domain))
    return "use-" + hashlib.sha256(key.encode("utf-8")).hexdigest()[:12]


@dataclass(frozen=True)
class UseCase:
    """One AI use in the five-component format plus descriptive fields."""

    id: str
    purpose: str
    capability: str
    ai_user: str
    ai_subject: str
    domain: str
    short_description: str
    long_description: str
    daily: bool = False
    implementation_potential: ImplementationPotential = ImplementationPotential.EXISTING
    risk_level: RiskLevel = RiskLevel.LIMITED_LOW
    categories: CategorySet = field(default_factory=CategorySet)
    source_incident_ids: frozenset[int] = frozenset()

    def components(self) -> tuple[str, str, str, str, str]:
        return (self.purpose, self.capability, self.ai_user, self.ai_subject, self.domain)

    def expected_id(self) -> str:
        return use_id(*self.components())


def make_use(
    purpose: str,
    capability: str,
    ai_user: str,
    ai_subject: str,
    domain: str,
    short_description: str,
    long_description: str = "",
    **kwargs,
) -> UseCase:
    """Build a UseCase with its id derived from the five components."""
    return UseCase(
        id=use_id(purpose, capability, ai_user, ai_subject, domain),
        purpose=purpose,
        capability=capability,
        ai_user=ai_user,
        ai_subject=ai_subject,
        domain=domain,
        short_description=short_description,
        long_description=long_description or short_description,
        **kwargs,
    )


@dataclass(frozen=True)
class AssessmentItem:
    """A single risk or benefit, layered and tagged with who it affects."""

    text: str
    layer: SocioTechnicalLayer
    affected: frozenset[AffectedParty]
    basis: str | None = None


@dataclass(frozen=True)
class Mitigation:
    text: str
    layer: SocioTechnicalLayer


@dataclass(frozen=True)
class ImpactCard:
    """Per-use assessment: risks, benefits, mitigations, and the mitigated reclassification."""

    use_id: str
    risks: tuple[AssessmentItem, ...]
    benefits: tuple[AssessmentItem, ...]
    mitigations: tuple[Mitigation, ...]
    mitigated_description: str
    mitigated_risk_level: RiskLevel
    risk_reasoning: str
    illustration_prompt: str
    illustration_ref: str | None = None


@dataclass(frozen=True)
class AtlasDataset:
    """Versioned container for an atlas: uses, cards, 2-D coordinates, palette.

    Coordinates are stored at 6-decimal precision so an in-memory dataset
    equals its serialized round trip.
    """

    technology: str
    uses: tuple[UseCase, ...]
    cards: tuple[ImpactCard, ...]
    coords: dict[str, tuple[float, float]]
    split_coords: dict[str, tuple[float, float]]
    palette: dict[str, str]
    schema_version: int = SCHEMA_VERSION

    def use_by_id(self, uid: str) -> UseCase | None:
        for use in self.uses:
            if use.id == uid:
                return use
        return None

    def card_by_use_id(self, uid: str) -> ImpactCard | None:
        for card in self.cards:
            if card.use_id == uid:
                return card
        return None


def empty_dataset(technology: str = "multi") -> AtlasDataset:
    return AtlasDataset(
        technology=technology,
        uses=(),
        cards=(),
        coords={},
        split_coords={},
        palette={},
    )


@dataclass(frozen=True)
class ValidationReport:
    """List of invariant violations; empty means valid."""

    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __iter__(self) -> Iterator[str]:
        return iter(self.violations)

    def __len__(self) -> int:
        return len(self.violations)


def validate_use(use: UseCase) -> ValidationReport:
    """Check every UseCase invariant; returns all violations found."""
    problems: list[str] = []
    for name in COMPONENT_FIELDS:
        value = getattr(use, name)
        if not value.strip():
            problems.append(f"{name} empty")
            continue
        if value != value.strip():
            problems.append(f"{name} not trimmed")
        if len(value) > MAX_COMPONENT_LENGTH:
            problems.append(f"{name} exceeds {MAX_COMPONENT_LENGTH} characters")
    if not use.short_description.strip():
        problems.append("short_description empty")
    if all(getattr(use, name).strip() for name in COMPONENT_FIELDS):
        expected = use.expected_id()
        if use.id != expected:
            problems.append(f"id mismatch: expected {expected}")
    return ValidationReport(tuple(problems))


def validate_card(card: ImpactCard, use: UseCase) -> ValidationReport:
    """Check ImpactCard invariants against its owning use."""
    problems: list[str] = []
    if card.use_id != use.id:
        problems.append(f"card use_id {card.use_id} does not match use {use.id}")
    if use.risk_level in (RiskLevel.HIGH, RiskLevel.UNACCEPTABLE) and not card.risks:
        problems.append(f"{use.id}: risks empty for {use.risk_level.value} use")
    if card.mitigated_risk_level.severity > use.risk_level.severity:
        problems.append(
            f"{use.id}: mitigated risk level {card.mitigated_risk_level.value} "
            f"exceeds pre-mitigation level {use.risk_level.value}"
        )
    for item in card.risks + card.benefits:
        if not item.text.strip():
            problems.append(f"{use.id}: assessment item with empty text")
        if not item.affected:
            problems.append(f"{use.id}: assessment item with empty affected set")
    return ValidationReport(tuple(problems))


def validate_dataset(dataset: AtlasDataset) -> ValidationReport:
    """Check dataset-level invariants plus every contained use and card.

    A dataset whose coords and split_coords are both empty is accepted as a
    valid "layout pending" state so that the layout step can consume it.
    """
    problems: list[str] = []
    ids = [use.id for use in dataset.uses]
    id_set = set(ids)
    if len(ids) != len(id_set):
        seen: set[str] = set()
        for uid in ids:
            if uid in seen:
                problems.append(f"duplicate use id {uid}")
            seen.add(uid)

    for use in dataset.uses:
        problems.extend(validate_use(use))

    card_ids = [card.use_id for card in dataset.cards]
    if sorted(card_ids) != sorted(ids):
        problems.append("card use_ids do not match use ids")
    else:
        by_id = {use.id: use for use in dataset.uses}
        for card in dataset.cards:
            problems.extend(validate_card(card, by_id[card.use_id]))

    layout_pending = not dataset.coords and not dataset.split_coords
    if not layout_pending:
        for label, coords in (("coords", dataset.coords), ("split_coords", dataset.split_coords)):
            if set(coords) != id_set:
                problems.append(f"{label} keys do not match use ids")
            for uid, (x, y) in coords.items():
                if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
                    problems.append(f"{label}[{uid}] out of [0,1]: ({x}, {y})")

    return ValidationReport(tuple(problems))
