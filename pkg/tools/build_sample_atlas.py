"""Build the shipped facial-recognition sample atlas.

Runs the offline generation pipeline (mock seed 1, default 46 domains), then
pins the risk and implementation-potential histograms of the 138 uses to the
published case-study distribution (10/66/62 and 91/39/8), reconciles each
card's mitigated level, and recomputes the layout. Output is canonical, so
re-running this script reproduces the committed file byte for byte.
"""

import dataclasses
import sys
from pathlib import Path

from atlas_forge import assets
from atlas_forge.genpipe.mock import mock_provider
from atlas_forge.genpipe.pipeline import assemble_atlas, assess_uses, generate_uses
from atlas_forge.layout.tsne import TsneParams
from atlas_forge.model import ImplementationPotential, RiskLevel, validate_dataset
from atlas_forge.serialization import write_atlas
from atlas_forge.stats import dataset_stats, format_stats

OUT = Path(__file__).resolve().parent.parent / "data" / "facial_recognition.atlas.json"

MOCK_SEED = 1
LAYOUT_SEED = 7

RISK_COUNTS = (
    (RiskLevel.UNACCEPTABLE, 10),
    (RiskLevel.HIGH, 66),
    (RiskLevel.LIMITED_LOW, 62),
)
POTENTIAL_COUNTS = (
    (ImplementationPotential.EXISTING, 91),
    (ImplementationPotential.UPCOMING, 39),
    (ImplementationPotential.UNLIKELY, 8),
)


def _slices(counts, total):
    values = []
    for value, count in counts:
        values.extend([value] * count)
    assert len(values) == total, f"counts sum to {len(values)}, need {total}"
    return values


def main() -> None:
    provider = mock_provider(MOCK_SEED)
    uses = generate_uses(provider, "facial recognition", assets.default_domains())
    assessed = assess_uses(provider, uses)

    total = len(assessed)
    risk_by_rank = _slices(RISK_COUNTS, total)
    potential_by_rank = _slices(POTENTIAL_COUNTS, total)

    pinned = []
    for rank, (use, card) in enumerate(sorted(assessed, key=lambda p: p[0].id)):
        level = risk_by_rank[rank]
        use = dataclasses.replace(
            use, risk_level=level, implementation_potential=potential_by_rank[rank]
        )
        mitigated = RiskLevel.LIMITED_LOW if level is RiskLevel.LIMITED_LOW else (
            RiskLevel.HIGH if level is RiskLevel.UNACCEPTABLE else RiskLevel.LIMITED_LOW
        )
        card = dataclasses.replace(card, mitigated_risk_level=mitigated)
        pinned.append((use, card))

    dataset = assemble_atlas(
        "facial recognition", pinned, tsne_params=TsneParams(seed=LAYOUT_SEED)
    )
    report = validate_dataset(dataset)
    if not report.ok:
        print("\n".join(report), file=sys.stderr)
        raise SystemExit(1)

    OUT.parent.mkdir(parents=True, exist_ok=True)
    write_atlas(dataset, OUT)
    print(f"wrote {OUT}")
    print(format_stats(dataset_stats(dataset)))


if __name__ == "__main__":
    main()
