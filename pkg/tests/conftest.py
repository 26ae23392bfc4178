"""Shared fixtures: repo paths, the shipped sample atlas, dataset builders."""

from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from atlas_forge.model import (
    AssessmentItem,
    AtlasDataset,
    AffectedParty,
    ImpactCard,
    ImplementationPotential,
    Mitigation,
    RiskLevel,
    SocioTechnicalLayer,
    UseCase,
    make_use,
)
from atlas_forge.serialization import quantize, read_atlas

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"
FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"

SAMPLE_ATLAS_PATH = DATA_DIR / "facial_recognition.atlas.json"


@pytest.fixture(scope="session")
def sample_atlas_path() -> Path:
    assert SAMPLE_ATLAS_PATH.exists(), "sample atlas missing; run tools/build_sample_atlas.py"
    return SAMPLE_ATLAS_PATH


@pytest.fixture(scope="session")
def sample_atlas(sample_atlas_path: Path) -> AtlasDataset:
    return read_atlas(sample_atlas_path)


@pytest.fixture(scope="session")
def cluster_fixture() -> dict:
    return json.loads((FIXTURE_DIR / "clusters_60x10.json").read_text())


@pytest.fixture(scope="session")
def planted_corpus() -> dict:
    return json.loads((FIXTURE_DIR / "planted_corpus_60.json").read_text())


def planted_uses(fixture: dict) -> list[UseCase]:
    return [
        make_use(
            purpose=u["purpose"],
            capability=u["capability"],
            ai_user=u["ai_user"],
            ai_subject=u["ai_subject"],
            domain=u["domain"],
            short_description=u["short_description"],
            source_incident_ids=frozenset({u["incident_id"]}),
        )
        for u in fixture["uses"]
    ]


_WORDS = (
    "atlas", "risk", "benefit", "mitigation", "sensor", "récord", "niño",
    "käyttö", "data", "模型", "safety", "review", "ощенка", "garden", "训练",
)


def random_text(rng: random.Random, max_words: int = 4) -> str:
    return " ".join(rng.choice(_WORDS) for _ in range(rng.randint(1, max_words)))


def random_use(rng: random.Random, daily: bool | None = None) -> UseCase:
    return make_use(
        purpose=f"{random_text(rng)} {rng.randrange(10**6)}",
        capability=random_text(rng),
        ai_user=random_text(rng, 2),
        ai_subject=random_text(rng, 2),
        domain=random_text(rng, 2),
        short_description=random_text(rng, 6),
        long_description=random_text(rng, 12),
        daily=rng.random() < 0.5 if daily is None else daily,
        implementation_potential=rng.choice(list(ImplementationPotential)),
        risk_level=rng.choice(list(RiskLevel)),
        source_incident_ids=frozenset(rng.sample(range(1000), rng.randint(0, 3))),
    )


def random_item(rng: random.Random) -> AssessmentItem:
    parties = rng.sample(list(AffectedParty), rng.randint(1, 3))
    return AssessmentItem(
        text=random_text(rng, 6),
        layer=rng.choice(list(SocioTechnicalLayer)),
        affected=frozenset(parties),
        basis=random_text(rng) if rng.random() < 0.5 else None,
    )


def card_for(use: UseCase, rng: random.Random) -> ImpactCard:
    n_risks = rng.randint(1, 3)
    mitigated_candidates = [l for l in RiskLevel if l.severity <= use.risk_level.severity]
    return ImpactCard(
        use_id=use.id,
        risks=tuple(random_item(rng) for _ in range(n_risks)),
        benefits=tuple(random_item(rng) for _ in range(rng.randint(0, 3))),
        mitigations=tuple(
            Mitigation(random_text(rng, 5), rng.choice(list(SocioTechnicalLayer)))
            for _ in range(rng.randint(0, 2))
        ),
        mitigated_description=random_text(rng, 8),
        mitigated_risk_level=rng.choice(mitigated_candidates),
        risk_reasoning=random_text(rng, 8),
        illustration_prompt=random_text(rng, 8),
        illustration_ref=None if rng.random() < 0.8 else f"img/{rng.randrange(100)}.png",
    )


def random_dataset(rng: random.Random, max_uses: int = 6) -> AtlasDataset:
    """A structurally valid dataset with quantized coordinates."""
    uses = []
    seen: set[str] = set()
    for _ in range(rng.randint(0, max_uses)):
        use = random_use(rng)
        if use.id not in seen:
            seen.add(use.id)
            uses.append(use)
    uses.sort(key=lambda u: u.id)
    cards = tuple(card_for(u, rng) for u in uses)
    coords = {u.id: (quantize(rng.random()), quantize(rng.random())) for u in uses}
    split = {u.id: (quantize(rng.random()), quantize(rng.random())) for u in uses}
    return AtlasDataset(
        technology=random_text(rng, 2),
        uses=tuple(uses),
        cards=cards,
        coords=coords,
        split_coords=split,
        palette={"use:daily": "#17becf"} if rng.random() < 0.5 else {},
    )
