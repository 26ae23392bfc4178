"""Orchestration: prompts -> provider -> validated domain objects -> atlas."""

from __future__ import annotations

import dataclasses
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np

from ..categories import RuleTable, assign_categories, default_rule_table
from ..layout.embedding import Embedder, fallback_embed
from ..layout.tsne import TsneParams, tsne
from ..layout.views import normalize_coords, split_by_risk
from ..model import AtlasDataset, ImpactCard, RiskLevel, UseCase
from ..serialization import quantize
from .. import assets
from .parsers import (
    MalformedOutput,
    MitigationGenOutput,
    parse_benefit_output,
    parse_explore_output,
    parse_mitigation_output,
    parse_risk_output,
)
from .prompts import (
    build_benefit_prompt,
    build_explore_prompt,
    build_illustration_prompt,
    build_mitigation_prompt,
    build_risk_prompt,
)
from .provider import Provider, complete_with_repair

log = logging.getLogger(__name__)

DEFAULT_MAX_IN_FLIGHT = 4


def generate_uses(provider: Provider, technology: str, domains: Sequence[str]) -> list[UseCase]:
    """Explore step: |domains| x 3 validated uses."""
    prompt = build_explore_prompt(technology, domains)
    uses = complete_with_repair(provider, prompt, parse_explore_output)
    log.info("explore: %d uses across %d domains", len(uses), len(domains))
    return uses


def assess_use(provider: Provider, use: UseCase) -> tuple[UseCase, ImpactCard]:
    """Risk, benefit, and mitigation stages for one use; returns the use with
    its final risk level plus the assembled impact card."""
    risk = complete_with_repair(provider, build_risk_prompt(use), parse_risk_output)
    use = dataclasses.replace(use, risk_level=risk.risk_level)

    benefits = complete_with_repair(provider, build_benefit_prompt(use), parse_benefit_output)

    risks = risk.all_risks
    if risks:
        mitigation_prompt = build_mitigation_prompt(use, risks)

        def parse_monotone(text: str) -> MitigationGenOutput:
            out = parse_mitigation_output(text)
            if out.mitigated_risk_level.severity > use.risk_level.severity:
                raise MalformedOutput(
                    [
                        f"mitigated_risk_level {out.mitigated_risk_level.value} exceeds the "
                        f"pre-mitigation level {use.risk_level.value}; mitigation never raises risk"
                    ]
                )
            return out

        mitigation = complete_with_repair(provider, mitigation_prompt, parse_monotone)
    else:
        mitigation = MitigationGenOutput(
            mitigations=(),
            mitigated_description=use.long_description,
            mitigated_risk_level=use.risk_level,
        )

    card = ImpactCard(
        use_id=use.id,
        risks=risks,
        benefits=tuple(benefits),
        mitigations=mitigation.mitigations,
        mitigated_description=mitigation.mitigated_description,
        mitigated_risk_level=mitigation.mitigated_risk_level,
        risk_reasoning=risk.reasoning,
        illustration_prompt=build_illustration_prompt(use),
    )
    return use, card


def assess_uses(
    provider: Provider,
    uses: Sequence[UseCase],
    max_in_flight: int = DEFAULT_MAX_IN_FLIGHT,
) -> list[tuple[UseCase, ImpactCard]]:
    """Assess uses concurrently; results are merged by id so completion order
    never affects the output."""
    with ThreadPoolExecutor(max_workers=max(1, max_in_flight)) as pool:
        results = list(pool.map(lambda u: assess_use(provider, u), uses))
    return sorted(results, key=lambda pair: pair[0].id)


def layout_text(use: UseCase) -> str:
    """Text fed to the embedding provider for the spatial layout."""
    return f"{use.short_description} {use.purpose} {use.domain}"


def compute_layout(
    uses: Sequence[UseCase],
    tsne_params: TsneParams,
    embedder: Embedder = fallback_embed,
) -> tuple[dict[str, tuple[float, float]], dict[str, tuple[float, float]]]:
    """Embed, optimize, normalize, and derive the risk-split coordinates."""
    ordered = sorted(uses, key=lambda u: u.id)
    X = np.stack([np.asarray(embedder(layout_text(u)), dtype=np.float64) for u in ordered])
    result = tsne(X, tsne_params)
    unit = normalize_coords(result.coords)
    coords = {
        use.id: (quantize(float(x)), quantize(float(y)))
        for use, (x, y) in zip(ordered, unit)
    }
    levels = {use.id: use.risk_level for use in ordered}
    split = {
        uid: (quantize(x), quantize(y)) for uid, (x, y) in split_by_risk(coords, levels).items()
    }
    return coords, split


def assemble_atlas(
    technology: str,
    assessed: Sequence[tuple[UseCase, ImpactCard]],
    tsne_params: TsneParams | None = None,
    rules: RuleTable | None = None,
    embedder: Embedder = fallback_embed,
    palette: dict[str, str] | None = None,
) -> AtlasDataset:
    """Categorize, lay out, and pack assessed uses into a dataset."""
    rules = rules or default_rule_table()
    tsne_params = tsne_params or TsneParams()
    pairs = sorted(assessed, key=lambda pair: pair[0].id)
    uses = tuple(
        dataclasses.replace(use, categories=assign_categories(use, rules)) for use, _ in pairs
    )
    cards = tuple(card for _, card in pairs)
    if len(uses) >= 3:
        coords, split = compute_layout(uses, tsne_params, embedder)
    else:
        # too few points for a meaningful optimization; center them
        coords = {use.id: (0.5, 0.5) for use in uses}
        levels = {use.id: use.risk_level for use in uses}
        split = {uid: (quantize(x), quantize(y)) for uid, (x, y) in split_by_risk(coords, levels).items()}
    return AtlasDataset(
        technology=technology,
        uses=uses,
        cards=cards,
        coords=coords,
        split_coords=split,
        palette=dict(palette or assets.default_palette()),
    )


def generate_atlas(
    provider: Provider,
    technology: str,
    domains: Sequence[str],
    tsne_params: TsneParams | None = None,
    rules: RuleTable | None = None,
    embedder: Embedder = fallback_embed,
    max_in_flight: int = DEFAULT_MAX_IN_FLIGHT,
) -> AtlasDataset:
    """The full generate pipeline: explore -> assess -> categorize -> layout."""
    uses = generate_uses(provider, technology, domains)
    assessed = assess_uses(provider, uses, max_in_flight)
    log.info("assessed %d uses", len(assessed))
    return assemble_atlas(technology, assessed, tsne_params, rules, embedder)
