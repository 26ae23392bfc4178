"""Parsers that turn provider replies into domain objects.

All parsers raise MalformedOutput with a list of concrete problems; the
repair loop quotes those problems back to the provider.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

import jsonschema

from ..model import (
    AffectedParty,
    AssessmentItem,
    ImplementationPotential,
    Mitigation,
    RiskLevel,
    SocioTechnicalLayer,
    UseCase,
    use_id,
    validate_use,
)
from .schemas import (
    BENEFIT_SCHEMA_ID,
    EXPLORE_SCHEMA_ID,
    MITIGATION_SCHEMA_ID,
    RISK_SCHEMA_ID,
    SCHEMAS,
)


class MalformedOutput(ValueError):
    """Reply does not satisfy the requested schema; carries the problem list."""

    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


class UnknownRiskLabel(MalformedOutput):
    """Risk label falls outside the synonym table."""

    def __init__(self, label: str):
        super().__init__([f"unknown risk label {label!r}"])
        self.label = label


_JSON_OBJECT_RE = re.compile(r"\{.*\}", re.DOTALL)

# Risk labels are normalized (lowercase, separators to spaces, "risk" words
# dropped) before lookup; anything else is UnknownRiskLabel.
_RISK_SYNONYMS = {
    "unacceptable": RiskLevel.UNACCEPTABLE,
    "high": RiskLevel.HIGH,
    "minimal": RiskLevel.LIMITED_LOW,
    "low": RiskLevel.LIMITED_LOW,
    "limited": RiskLevel.LIMITED_LOW,
    "limited low": RiskLevel.LIMITED_LOW,
    "limited or low": RiskLevel.LIMITED_LOW,
    "minimal low": RiskLevel.LIMITED_LOW,
    "none": RiskLevel.LIMITED_LOW,
    "none of these two": RiskLevel.LIMITED_LOW,
}

_LAYER_SYNONYMS = {
    "capability": SocioTechnicalLayer.CAPABILITY,
    "technical capability": SocioTechnicalLayer.CAPABILITY,
    "technical": SocioTechnicalLayer.CAPABILITY,
    "human interaction": SocioTechnicalLayer.HUMAN_INTERACTION,
    "human interactions": SocioTechnicalLayer.HUMAN_INTERACTION,
    "systemic impact": SocioTechnicalLayer.SYSTEMIC_IMPACT,
    "systemic": SocioTechnicalLayer.SYSTEMIC_IMPACT,
    "social impact": SocioTechnicalLayer.SYSTEMIC_IMPACT,
}


def parse_risk_label(label: str) -> RiskLevel:
    normalized = re.sub(r"[-_/]", " ", label.lower())
    normalized = re.sub(r"\b(risk|risks)\b", " ", normalized)
    normalized = re.sub(r"[^a-z ]", " ", normalized)
    normalized = " ".join(normalized.split())
    level = _RISK_SYNONYMS.get(normalized)
    if level is None:
        raise UnknownRiskLabel(label)
    return level


def parse_layer_label(label: str) -> SocioTechnicalLayer:
    normalized = " ".join(re.sub(r"[-_]", " ", label.lower()).split())
    normalized = re.sub(r"\s*layer$", "", normalized)
    layer = _LAYER_SYNONYMS.get(normalized)
    if layer is None:
        raise MalformedOutput([f"unknown sociotechnical layer {label!r}"])
    return layer


def _json_object(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        match = _JSON_OBJECT_RE.search(text)
        if not match:
            raise MalformedOutput(["reply is not a JSON object"]) from None
        try:
            obj = json.loads(match.group(0))
        except json.JSONDecodeError as exc:
            raise MalformedOutput([f"reply is not valid JSON: {exc}"]) from None
    if not isinstance(obj, dict):
        raise MalformedOutput(["reply is not a JSON object"])
    return obj


def _checked(text: str, schema_id: str) -> dict:
    obj = _json_object(text)
    validator = jsonschema.Draft202012Validator(SCHEMAS[schema_id])
    problems = []
    for error in sorted(validator.iter_errors(obj), key=lambda e: list(e.absolute_path)):
        path = "/".join(str(p) for p in error.absolute_path) or "<root>"
        problems.append(f"{path}: {error.message}")
    if problems:
        raise MalformedOutput(problems)
    return obj


def _parse_assessment_item(entry: dict) -> AssessmentItem:
    return AssessmentItem(
        text=entry["text"],
        layer=parse_layer_label(entry["layer"]),
        affected=frozenset(AffectedParty(p) for p in entry["affected"]),
        basis=entry.get("basis"),
    )


def parse_explore_output(text: str) -> list[UseCase]:
    """Parse a use-generation reply into validated UseCases.

    Every use must carry the five components and a description; uses that
    fail validation or collide on id are reported as problems so the repair
    loop can re-ask.
    """
    obj = _checked(text, EXPLORE_SCHEMA_ID)
    uses: list[UseCase] = []
    problems: list[str] = []
    seen: set[str] = set()
    for i, entry in enumerate(obj["uses"]):
        potential = ImplementationPotential(entry.get("implementation_potential", "existing"))
        description = entry["description"]
        use = UseCase(
            id=use_id(entry["purpose"], entry["capability"], entry["ai_user"], entry["ai_subject"], entry["domain"]),
            purpose=entry["purpose"],
            capability=entry["capability"],
            ai_user=entry["ai_user"],
            ai_subject=entry["ai_subject"],
            domain=entry["domain"],
            short_description=description,
            long_description=entry.get("long_description") or description,
            daily=entry.get("daily", False),
            implementation_potential=potential,
        )
        report = validate_use(use)
        problems.extend(f"uses/{i}: {violation}" for violation in report)
        if use.id in seen:
            problems.append(f"uses/{i}: duplicate of an earlier use (same five components)")
        seen.add(use.id)
        uses.append(use)
    if problems:
        raise MalformedOutput(problems)
    return uses


@dataclass(frozen=True)
class RiskGenOutput:
    risk_level: RiskLevel
    reasoning: str
    act_excerpts: tuple[str, ...]
    hr_risks: tuple[AssessmentItem, ...]
    sdg_risks: tuple[AssessmentItem, ...]

    @property
    def all_risks(self) -> tuple[AssessmentItem, ...]:
        return self.hr_risks + self.sdg_risks


def parse_risk_output(text: str) -> RiskGenOutput:
    obj = _checked(text, RISK_SCHEMA_ID)
    return RiskGenOutput(
        risk_level=parse_risk_label(obj["risk_level"]),
        reasoning=obj["reasoning"],
        act_excerpts=tuple(obj["act_excerpts"]),
        hr_risks=tuple(_parse_assessment_item(e) for e in obj["hr_risks"]),
        sdg_risks=tuple(_parse_assessment_item(e) for e in obj["sdg_risks"]),
    )


def parse_benefit_output(text: str) -> list[AssessmentItem]:
    obj = _checked(text, BENEFIT_SCHEMA_ID)
    entries = list(obj["hr_benefits"]) + list(obj["sdg_benefits"])
    return [_parse_assessment_item(e) for e in entries]


@dataclass(frozen=True)
class MitigationGenOutput:
    mitigations: tuple[Mitigation, ...]
    mitigated_description: str
    mitigated_risk_level: RiskLevel


def parse_mitigation_output(text: str) -> MitigationGenOutput:
    obj = _checked(text, MITIGATION_SCHEMA_ID)
    return MitigationGenOutput(
        mitigations=tuple(
            Mitigation(text=m["text"], layer=parse_layer_label(m["layer"])) for m in obj["mitigations"]
        ),
        mitigated_description=obj["mitigated_description"],
        mitigated_risk_level=parse_risk_label(obj["mitigated_risk_level"]),
    )
