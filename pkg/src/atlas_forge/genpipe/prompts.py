"""Prompt construction for the five generation stages.

Each builder returns a PromptSpec: a role, a list of context blocks, ordered
instructions, and the id of the reply schema. `render_messages` turns a spec
into chat messages for an HTTP provider; the mock provider reads the spec's
params directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .. import assets
from ..model import AssessmentItem, UseCase
from .schemas import (
    BENEFIT_SCHEMA_ID,
    EXPLORE_SCHEMA_ID,
    MITIGATION_SCHEMA_ID,
    RISK_SCHEMA_ID,
    SCHEMAS,
)

USES_PER_DOMAIN = 3

EXPLORE_ROLE = (
    "You are a Senior AI Technology Expert responsible for identifying and "
    "cataloging various AI applications and use cases."
)
RISK_ROLE = (
    "You are a Senior AI Technology Expert, specializing in compliance with "
    "the EU AI Act, SDGs, and HRs."
)
BENEFIT_ROLE = "You are a Senior AI Technology Expert, specializing in SDGs and HRs."
MITIGATION_ROLE = (
    "You are a Senior AI Technology Expert, specializing in mitigating the "
    "risks that AI uses pose to those exposed to them."
)

ILLUSTRATION_TEMPLATE = (
    "Generate an image for the {description} with the content that is safe "
    "and appropriate. Use line art style, low polygons, and black lines on "
    "the white background"
)


@dataclass(frozen=True)
class PromptSpec:
    """A fully specified provider request with a registered reply schema."""

    role_preamble: str
    context_inputs: tuple[str, ...]
    instructions: tuple[str, ...]
    output_schema: str
    params: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.role_preamble.strip():
            raise ValueError("role_preamble must be non-empty")
        if self.output_schema not in SCHEMAS:
            raise ValueError(f"output schema {self.output_schema!r} is not registered")


def render_messages(prompt: PromptSpec, feedback: Sequence[str] = ()) -> list[dict[str, str]]:
    """Chat messages for the completions wire format, plus optional repair feedback."""
    parts: list[str] = []
    if prompt.context_inputs:
        parts.append("Context:\n\n" + "\n\n".join(prompt.context_inputs))
    parts.append("Instructions:\n" + "\n".join(f"{i}. {s}" for i, s in enumerate(prompt.instructions, 1)))
    parts.append(
        "Reply with a single JSON object conforming to this JSON schema, "
        "with no surrounding text:\n" + json.dumps(SCHEMAS[prompt.output_schema], sort_keys=True)
    )
    messages = [
        {"role": "system", "content": prompt.role_preamble},
        {"role": "user", "content": "\n\n".join(parts)},
    ]
    if feedback:
        messages.append(
            {
                "role": "user",
                "content": "Your previous reply was invalid:\n"
                + "\n".join(f"- {p}" for p in feedback)
                + "\nReply again with a single JSON object that fixes these problems.",
            }
        )
    return messages


def _use_block(use: UseCase) -> str:
    return (
        "The use under assessment:\n"
        f"- Purpose: {use.purpose}\n"
        f"- Capability: {use.capability}\n"
        f"- AI User: {use.ai_user}\n"
        f"- AI Subject: {use.ai_subject}\n"
        f"- Domain: {use.domain}\n"
        f"- Description: {use.short_description}"
    )


def _use_params(use: UseCase) -> dict[str, Any]:
    return {
        "use_id": use.id,
        "purpose": use.purpose,
        "capability": use.capability,
        "ai_user": use.ai_user,
        "ai_subject": use.ai_subject,
        "domain": use.domain,
        "description": use.short_description,
        "risk_level": use.risk_level.value,
    }


def build_explore_prompt(technology: str, domains: Sequence[str]) -> PromptSpec:
    """Fan-out request: exactly three uses of the technology per domain."""
    if not domains:
        raise ValueError("domains must be non-empty")
    domain_lines = "\n".join(f"- {d}" for d in domains)
    instructions = (
        f"Identify exactly {USES_PER_DOMAIN} distinct, realistic uses of {technology} "
        f"for each of the following {len(domains)} application domains:\n{domain_lines}",
        "Describe every use in the five-component format: domain (the specific industry "
        "or sector), purpose (the end goal), capability (the technological feature), "
        "ai_user (the entity managing and overseeing the AI), and ai_subject (the "
        "individuals or groups impacted by the use).",
        "Summarize each use in a concise one-line description "
        f'(e.g. "{technology} for financial fraud detection").',
        "Classify the implementation potential of each use as existing (currently in "
        "use), upcoming (in development or early prototype stage), or unlikely "
        "(lacking applicability and usability).",
        "Mark whether each use is part of everyday life with a boolean daily flag.",
    )
    return PromptSpec(
        role_preamble=EXPLORE_ROLE,
        context_inputs=(),
        instructions=instructions,
        output_schema=EXPLORE_SCHEMA_ID,
        params={
            "technology": technology,
            "domains": tuple(domains),
            "uses_per_domain": USES_PER_DOMAIN,
        },
    )


def build_incident_prompt(incident_id: int, title: str, description: str) -> PromptSpec:
    """Reverse-engineer the single AI use that could have caused an incident."""
    instructions = (
        "Read the incident report below and infer the single AI use that could have "
        f"caused it.\nIncident {incident_id}: {title}\n{description}",
        "Describe that one use in the five-component format: domain, purpose, "
        "capability, ai_user, and ai_subject.",
        "Summarize the use in a concise one-line description.",
        "Classify its implementation potential as existing, upcoming, or unlikely, "
        "and mark whether it is part of everyday life with a boolean daily flag.",
        "Return exactly one use.",
    )
    return PromptSpec(
        role_preamble=EXPLORE_ROLE,
        context_inputs=(),
        instructions=instructions,
        output_schema=EXPLORE_SCHEMA_ID,
        params={
            "incident_id": incident_id,
            "incident_title": title,
            "incident_description": description,
        },
    )


def build_risk_prompt(use: UseCase) -> PromptSpec:
    """Risk classification plus layered SDG/HR risks, with the full legal context."""
    context = (
        "EU AI Act excerpts:\n" + "\n".join(assets.eu_ai_act_excerpts()),
        "Sustainable Development Goals:\n" + "\n".join(assets.sdg_definitions()),
        "Universal Declaration of Human Rights:\n" + "\n".join(assets.udhr_articles()),
    )
    instructions = (
        _use_block(use),
        "Step 1: classify the use per the EU AI Act as unacceptable, high-risk, or "
        "none of these two (minimal risk). State your reasoning and quote the "
        "relevant excerpts.",
        "Step 2: identify any additional risks from the ways the use undermines the "
        "SDGs or the HRs, citing the relevant goal or article as the basis.",
        "Step 3: group all risks by their relevance to the capability, human "
        "interaction, and systemic impact layers, and mark who is affected "
        "(subject, user, society) for each risk.",
    )
    return PromptSpec(
        role_preamble=RISK_ROLE,
        context_inputs=context,
        instructions=instructions,
        output_schema=RISK_SCHEMA_ID,
        params=_use_params(use),
    )


def build_benefit_prompt(use: UseCase) -> PromptSpec:
    """Benefit generation; mirrors the risk prompt but carries no EU-AI-Act context."""
    context = (
        "Sustainable Development Goals:\n" + "\n".join(assets.sdg_definitions()),
        "Universal Declaration of Human Rights:\n" + "\n".join(assets.udhr_articles()),
    )
    instructions = (
        _use_block(use),
        "Step 1: identify benefits from the ways the use advances the SDGs or the "
        "HRs, citing the relevant goal or article as the basis.",
        "Step 2: group all benefits by their relevance to the capability, human "
        "interaction, and systemic impact layers, and mark who benefits "
        "(subject, user, society) for each.",
    )
    return PromptSpec(
        role_preamble=BENEFIT_ROLE,
        context_inputs=context,
        instructions=instructions,
        output_schema=BENEFIT_SCHEMA_ID,
        params=_use_params(use),
    )


def build_mitigation_prompt(use: UseCase, risks: Sequence[AssessmentItem]) -> PromptSpec:
    """Mitigation strategies plus a reclassified, mitigated version of the use."""
    if not risks:
        raise ValueError("risks must be non-empty")
    risk_lines = "\n".join(f"- [{r.layer.value}] {r.text}" for r in risks)
    instructions = (
        _use_block(use) + f"\nCurrent EU AI Act classification: {use.risk_level.value}.",
        f"The identified risks:\n{risk_lines}",
        "Step 1: propose mitigation strategies for these risks, phrased so they are "
        "understandable regardless of technical background; a strategy may address "
        "several risks.",
        "Step 2: group the strategies by their relevance to the capability, human "
        "interaction, and systemic impact layers.",
        "Step 3: write a description of a new, mitigated version of the use.",
        "Step 4: evaluate the compliance of the mitigated version with the EU AI Act: "
        "is it still unacceptable or high-risk, or none of these two (minimal risk)? "
        "Mitigation must never raise the risk level.",
    )
    return PromptSpec(
        role_preamble=MITIGATION_ROLE,
        context_inputs=(),
        instructions=instructions,
        output_schema=MITIGATION_SCHEMA_ID,
        params={**_use_params(use), "risks": tuple(r.text for r in risks)},
    )


def build_illustration_prompt(use: UseCase) -> str:
    """The image-model prompt for a use; exactly the fixed template."""
    if not use.short_description.strip():
        raise ValueError("use has no description")
    return ILLUSTRATION_TEMPLATE.format(description=use.short_description)
