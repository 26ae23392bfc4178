"""Registered JSON schemas for provider replies.

Every prompt names one of these schemas; replies are validated against it
before any domain object is built, and schema violations are quoted back to
the provider by the repair loop.
"""

from __future__ import annotations

_STRING = {"type": "string", "minLength": 1}
_COMPONENT = {"type": "string", "minLength": 1, "maxLength": 200}

_ASSESSMENT_ITEM = {
    "type": "object",
    "required": ["text", "layer", "affected"],
    "properties": {
        "text": _STRING,
        "layer": _STRING,
        "affected": {
            "type": "array",
            "items": {"enum": ["subject", "user", "society"]},
            "minItems": 1,
        },
        "basis": {"type": "string"},
    },
}

_MITIGATION_ITEM = {
    "type": "object",
    "required": ["text", "layer"],
    "properties": {"text": _STRING, "layer": _STRING},
}

_USE_ENTRY = {
    "type": "object",
    "required": ["domain", "purpose", "capability", "ai_user", "ai_subject", "description"],
    "properties": {
        "domain": _COMPONENT,
        "purpose": _COMPONENT,
        "capability": _COMPONENT,
        "ai_user": _COMPONENT,
        "ai_subject": _COMPONENT,
        "description": _STRING,
        "long_description": {"type": "string"},
        "implementation_potential": {"enum": ["existing", "upcoming", "unlikely"]},
        "daily": {"type": "boolean"},
    },
}

EXPLORE_SCHEMA_ID = "explore.v1"
RISK_SCHEMA_ID = "risk.v1"
BENEFIT_SCHEMA_ID = "benefit.v1"
MITIGATION_SCHEMA_ID = "mitigation.v1"

SCHEMAS: dict[str, dict] = {
    EXPLORE_SCHEMA_ID: {
        "type": "object",
        "required": ["uses"],
        "properties": {"uses": {"type": "array", "items": _USE_ENTRY}},
    },
    RISK_SCHEMA_ID: {
        "type": "object",
        "required": ["risk_level", "reasoning", "act_excerpts", "hr_risks", "sdg_risks"],
        "properties": {
            "risk_level": _STRING,
            "reasoning": _STRING,
            "act_excerpts": {"type": "array", "items": {"type": "string"}},
            "hr_risks": {"type": "array", "items": _ASSESSMENT_ITEM},
            "sdg_risks": {"type": "array", "items": _ASSESSMENT_ITEM},
        },
    },
    BENEFIT_SCHEMA_ID: {
        "type": "object",
        "required": ["hr_benefits", "sdg_benefits"],
        "properties": {
            "hr_benefits": {"type": "array", "items": _ASSESSMENT_ITEM},
            "sdg_benefits": {"type": "array", "items": _ASSESSMENT_ITEM},
        },
    },
    MITIGATION_SCHEMA_ID: {
        "type": "object",
        "required": ["mitigations", "mitigated_description", "mitigated_risk_level"],
        "properties": {
            "mitigations": {"type": "array", "items": _MITIGATION_ITEM},
            "mitigated_description": _STRING,
            "mitigated_risk_level": _STRING,
        },
    },
}
