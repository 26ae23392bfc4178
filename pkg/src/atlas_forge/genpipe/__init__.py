"""Prompt pipelines: build prompts, call a provider, validate and repair
structured outputs, and assemble uses with their impact cards."""

from .mock import MockProvider, mock_provider
from .parsers import (
    MalformedOutput,
    MitigationGenOutput,
    RiskGenOutput,
    UnknownRiskLabel,
    parse_benefit_output,
    parse_explore_output,
    parse_mitigation_output,
    parse_risk_output,
    parse_risk_label,
)
from .pipeline import assemble_atlas, assess_use, assess_uses, generate_atlas, generate_uses
from .prompts import (
    ILLUSTRATION_TEMPLATE,
    PromptSpec,
    build_benefit_prompt,
    build_explore_prompt,
    build_illustration_prompt,
    build_incident_prompt,
    build_mitigation_prompt,
    build_risk_prompt,
    render_messages,
)
from .provider import (
    HttpProvider,
    Provider,
    ProviderConfig,
    RepairExhausted,
    TransportError,
    complete_with_repair,
    load_provider_config,
)
from .schemas import SCHEMAS

__all__ = [
    "MockProvider",
    "mock_provider",
    "MalformedOutput",
    "MitigationGenOutput",
    "RiskGenOutput",
    "UnknownRiskLabel",
    "parse_benefit_output",
    "parse_explore_output",
    "parse_mitigation_output",
    "parse_risk_output",
    "parse_risk_label",
    "assemble_atlas",
    "assess_use",
    "assess_uses",
    "generate_atlas",
    "generate_uses",
    "ILLUSTRATION_TEMPLATE",
    "PromptSpec",
    "build_benefit_prompt",
    "build_explore_prompt",
    "build_illustration_prompt",
    "build_incident_prompt",
    "build_mitigation_prompt",
    "build_risk_prompt",
    "render_messages",
    "HttpProvider",
    "Provider",
    "ProviderConfig",
    "RepairExhausted",
    "TransportError",
    "complete_with_repair",
    "load_provider_config",
    "SCHEMAS",
]
