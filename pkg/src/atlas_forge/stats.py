"""Dataset summary counts used by the `stats` subcommand and reports."""

from __future__ import annotations

from dataclasses import dataclass

from .model import AtlasDataset, ImplementationPotential, RiskLevel


@dataclass(frozen=True)
class DatasetStats:
    total: int
    by_risk: dict[RiskLevel, int]
    by_potential: dict[ImplementationPotential, int]
    daily_count: int

    @property
    def daily_share(self) -> float:
        return self.daily_count / self.total if self.total else 0.0


def dataset_stats(dataset: AtlasDataset) -> DatasetStats:
    by_risk = {level: 0 for level in RiskLevel}
    by_potential = {pot: 0 for pot in ImplementationPotential}
    daily = 0
    for use in dataset.uses:
        by_risk[use.risk_level] += 1
        by_potential[use.implementation_potential] += 1
        if use.daily:
            daily += 1
    return DatasetStats(
        total=len(dataset.uses),
        by_risk=by_risk,
        by_potential=by_potential,
        daily_count=daily,
    )


def format_stats(stats: DatasetStats) -> str:
    """Stable plain-text report, one metric per line."""
    risk = stats.by_risk
    pot = stats.by_potential
    lines = [
        f"uses: {stats.total}",
        "risk unacceptable/high/limited-low: "
        f"{risk[RiskLevel.UNACCEPTABLE]}/{risk[RiskLevel.HIGH]}/{risk[RiskLevel.LIMITED_LOW]}",
        "implementation existing/upcoming/unlikely: "
        f"{pot[ImplementationPotential.EXISTING]}/{pot[ImplementationPotential.UPCOMING]}"
        f"/{pot[ImplementationPotential.UNLIKELY]}",
        f"daily: {stats.daily_count}/{stats.total} ({stats.daily_share * 100:.1f}%)",
    ]
    return "\n".join(lines)
