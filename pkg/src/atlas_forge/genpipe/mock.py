"""Deterministic offline provider.

Produces schema-valid JSON replies derived only from (seed, prompt), so the
same seed always yields byte-identical replies and the whole pipeline stays
reproducible without network access.
"""

from __future__ import annotations

import json
import random
from typing import Sequence

from .. import assets
from .prompts import PromptSpec
from .schemas import (
    BENEFIT_SCHEMA_ID,
    EXPLORE_SCHEMA_ID,
    MITIGATION_SCHEMA_ID,
    RISK_SCHEMA_ID,
)

_VERBS = (
    "Verifying", "Detecting", "Monitoring", "Predicting", "Personalizing",
    "Automating", "Screening", "Tracking", "Assessing", "Optimizing",
)

_TOPICS = (
    "customer identity", "fraudulent activity", "access control", "attendance records",
    "crowd flow", "product recommendations", "quality defects", "safety incidents",
    "demand forecasts", "personalized services", "compliance violations",
    "health conditions", "security threats", "user engagement", "resource allocation",
    "content moderation", "staff scheduling", "risk exposure", "training needs",
    "route planning",
)

_CAPABILITY_VARIANTS = (
    "with real-time analysis", "with anomaly scoring", "with pattern matching",
    "with continuous monitoring", "with automated alerts", "with predictive modeling",
)

_AI_USERS = (
    "banks", "hospitals", "government agencies", "retail chains", "insurers",
    "schools", "employers", "transport operators", "media platforms", "utility companies",
)

_AI_SUBJECTS = (
    "customers", "patients", "employees", "citizens", "travelers", "students",
    "children", "drivers", "consumers", "residents", "the general public", "job applicants",
)

_RISK_TEXTS = (
    "may misidentify people and deny them access to a service they are entitled to",
    "encourages overreliance on automated judgments by the operating staff",
    "normalizes continuous observation of people in shared spaces",
    "can discriminate against groups underrepresented in the training data",
    "collects sensitive personal data that could leak or be repurposed",
    "shifts accountability for errors from the operator to an opaque system",
)

_BENEFIT_TEXTS = (
    "speeds up a routine task that otherwise consumes staff time",
    "makes a service reachable for people who could not access it before",
    "improves consistency of decisions across locations and shifts",
    "reduces resource waste through better planning",
    "helps detect genuine emergencies earlier",
)

_MITIGATION_TEXTS = (
    "let people opt out and use a human-served alternative at no extra cost",
    "publish regular plain-language reports about errors and their correction",
    "have a trained person review every consequential decision before it takes effect",
    "delete collected data after a short, published retention period",
    "test the system for accuracy gaps across demographic groups before rollout",
    "clearly signpost where and when the system is in operation",
)

_RISK_LABELS = ("unacceptable", "high-risk", "minimal risk")
_LEVEL_RANK = {"unacceptable": 2, "high-risk": 1, "minimal risk": 0}
_LAYERS = ("capability", "human interaction", "systemic impact")
_PARTIES = ("subject", "user", "society")

# Recognizable incident patterns; the first whose keywords all appear in the
# incident text wins. Everything else falls through to a generic template.
_CANNED_INCIDENT_USES = (
    (
        ("youtube", "children"),
        {
            "domain": "Recommender Systems",
            "purpose": "Recommending suitable videos for children",
            "capability": "Content filtering",
            "ai_user": "YouTube",
            "ai_subject": "Children",
            "description": "Video recommendations filtered for children",
        },
    ),
    (
        ("autonomous",),
        {
            "domain": "Public and private transportation",
            "purpose": "Operating autonomous vehicles",
            "capability": "Acting on sensor readings for navigation",
            "ai_user": "Autonomous vehicle providers",
            "ai_subject": "Road users",
            "description": "Autonomous vehicle operation on public roads",
        },
    ),
    (
        ("facial recognition",),
        {
            "domain": "Law enforcement",
            "purpose": "Identifying persons of interest",
            "capability": "Facial recognition",
            "ai_user": "Police departments",
            "ai_subject": "The general public",
            "description": "Facial recognition for identifying persons of interest",
        },
    ),
)


class MockProvider:
    """Schema-valid, seed-deterministic replies for every registered prompt."""

    def __init__(self, seed: int):
        self.seed = seed
        self.max_retries = 3

    def complete(self, prompt: PromptSpec, feedback: Sequence[str] = ()) -> str:
        del feedback  # mock replies are always valid, nothing to repair
        schema = prompt.output_schema
        if schema == EXPLORE_SCHEMA_ID:
            if "incident_id" in prompt.params:
                reply = self._incident_reply(prompt)
            else:
                reply = self._explore_reply(prompt)
        elif schema == RISK_SCHEMA_ID:
            reply = self._risk_reply(prompt)
        elif schema == BENEFIT_SCHEMA_ID:
            reply = self._benefit_reply(prompt)
        elif schema == MITIGATION_SCHEMA_ID:
            reply = self._mitigation_reply(prompt)
        else:
            raise ValueError(f"mock provider cannot answer schema {schema!r}")
        return json.dumps(reply, sort_keys=True)

    def _rng(self, *key: object) -> random.Random:
        return random.Random("|".join(str(k) for k in (self.seed, *key)))

    def _use_entry(self, rng: random.Random, technology: str, domain: str, combo: int) -> dict:
        verb = _VERBS[combo // len(_TOPICS)]
        topic = _TOPICS[combo % len(_TOPICS)]
        purpose = f"{verb} {topic}"
        return {
            "domain": domain,
            "purpose": purpose,
            "capability": f"{technology} {rng.choice(_CAPABILITY_VARIANTS)}",
            "ai_user": rng.choice(_AI_USERS).capitalize(),
            "ai_subject": rng.choice(_AI_SUBJECTS).capitalize(),
            "description": f"{technology} for {purpose.lower()}",
            "long_description": (
                f"{verb} {topic} with {technology} in the {domain.lower()} sector, "
                "operated as a routine part of the service."
            ),
            "implementation_potential": rng.choices(
                ["existing", "upcoming", "unlikely"], weights=[0.66, 0.28, 0.06]
            )[0],
            "daily": rng.random() < 0.5,
        }

    def _explore_reply(self, prompt: PromptSpec) -> dict:
        technology = prompt.params["technology"]
        domains = prompt.params["domains"]
        per_domain = prompt.params.get("uses_per_domain", 3)
        uses = []
        for domain in domains:
            rng = self._rng("explore", technology, domain)
            combos = rng.sample(range(len(_VERBS) * len(_TOPICS)), per_domain)
            uses.extend(self._use_entry(rng, technology, domain, combo) for combo in combos)
        return {"uses": uses}

    def _incident_reply(self, prompt: PromptSpec) -> dict:
        incident_id = prompt.params["incident_id"]
        text = f"{prompt.params['incident_title']} {prompt.params['incident_description']}".lower()
        for keywords, entry in _CANNED_INCIDENT_USES:
            if all(kw in text for kw in keywords):
                use = dict(entry)
                break
        else:
            rng = self._rng("incident", incident_id, text)
            words = [w for w in "".join(c if c.isalpha() else " " for c in text).split() if len(w) >= 4]
            subject = " ".join(words[:3]) or "affected users"
            use = {
                "domain": "General digital services",
                "purpose": f"Automating decisions about {subject}"[:200],
                "capability": "Machine learning classification",
                "ai_user": "Technology companies",
                "ai_subject": "Affected users",
                "description": f"Automated decision-making about {subject}"[:200],
            }
            use["daily"] = rng.random() < 0.3
        use.setdefault("implementation_potential", "existing")
        use.setdefault("daily", False)
        use.setdefault("long_description", use["description"])
        return {"uses": [use]}

    def _item(self, rng: random.Random, texts: Sequence[str], layer: str, basis: str | None) -> dict:
        affected = rng.sample(_PARTIES, rng.randint(1, len(_PARTIES)))
        item = {"text": rng.choice(texts), "layer": layer, "affected": sorted(affected)}
        if basis is not None:
            item["basis"] = basis
        return item

    def _risk_reply(self, prompt: PromptSpec) -> dict:
        rng = self._rng("risk", prompt.params["use_id"])
        label = rng.choices(_RISK_LABELS, weights=[0.10, 0.45, 0.45])[0]
        excerpts = assets.eu_ai_act_excerpts()
        udhr = assets.udhr_articles()
        sdgs = assets.sdg_definitions()
        hr_risks = [
            self._item(rng, _RISK_TEXTS, _LAYERS[i % 3], rng.choice(udhr))
            for i in range(rng.randint(1, 2))
        ]
        sdg_risks = [self._item(rng, _RISK_TEXTS, rng.choice(_LAYERS), rng.choice(sdgs))]
        return {
            "risk_level": label,
            "reasoning": (
                f"The use '{prompt.params['description']}' operates on "
                f"{prompt.params['ai_subject']} in {prompt.params['domain']}, "
                f"which places it at the {label} tier."
            ),
            "act_excerpts": rng.sample(excerpts, rng.randint(1, 2)),
            "hr_risks": hr_risks,
            "sdg_risks": sdg_risks,
        }

    def _benefit_reply(self, prompt: PromptSpec) -> dict:
        rng = self._rng("benefit", prompt.params["use_id"])
        udhr = assets.udhr_articles()
        sdgs = assets.sdg_definitions()
        return {
            "hr_benefits": [
                self._item(rng, _BENEFIT_TEXTS, rng.choice(_LAYERS), rng.choice(udhr))
                for _ in range(rng.randint(1, 2))
            ],
            "sdg_benefits": [self._item(rng, _BENEFIT_TEXTS, rng.choice(_LAYERS), rng.choice(sdgs))],
        }

    def _mitigation_reply(self, prompt: PromptSpec) -> dict:
        rng = self._rng("mitigation", prompt.params["use_id"])
        current = prompt.params["risk_level"]
        current_label = {"unacceptable": "unacceptable", "high": "high-risk", "limited-low": "minimal risk"}[current]
        allowed = [l for l in _RISK_LABELS if _LEVEL_RANK[l] <= _LEVEL_RANK[current_label]]
        # mitigation usually lowers the tier; keeping it is the rarer outcome
        weights = [1.0 if l == current_label else 3.0 for l in allowed]
        label = rng.choices(allowed, weights=weights)[0]
        count = rng.randint(2, 3)
        mitigations = [
            {"text": text, "layer": rng.choice(_LAYERS)}
            for text in rng.sample(_MITIGATION_TEXTS, count)
        ]
        return {
            "mitigations": mitigations,
            "mitigated_description": (
                f"{prompt.params['description']}, redesigned with safeguards: "
                + "; ".join(m["text"] for m in mitigations)
                + "."
            ),
            "mitigated_risk_level": label,
        }


def mock_provider(seed: int) -> MockProvider:
    """Factory used by tests and the --mock-seed CLI flag."""
    return MockProvider(seed)
