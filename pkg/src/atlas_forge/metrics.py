"""Study-analysis computations: SUS scoring, rater agreement (ICC), correctness
rates, and perceived-aesthetics means."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np


class DegenerateMatrix(ValueError):
    """Ratings matrix has zero variance (every cell identical)."""


@dataclass(frozen=True)
class SusResponse:
    """Ten usability items on a 1-5 scale; odd items are positively worded,
    even items negatively."""

    items: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.items) != 10:
            raise ValueError("a SUS response has exactly 10 items")
        for i, value in enumerate(self.items, start=1):
            if not isinstance(value, int) or not 1 <= value <= 5:
                raise ValueError(f"item {i} out of range [1,5]: {value!r}")


def sus_score(response: SusResponse) -> float:
    """Standard 0-100 score: (sum of odd contributions + even contributions) * 2.5."""
    total = 0
    for i, value in enumerate(response.items, start=1):
        total += (value - 1) if i % 2 == 1 else (5 - value)
    return total * 2.5


@dataclass(frozen=True)
class RatingsMatrix:
    """Complete subjects x raters table."""

    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim != 2:
            raise ValueError("ratings must be a 2-D matrix")
        n, k = arr.shape
        if n < 2 or k < 2:
            raise ValueError("need at least 2 subjects and 2 raters")
        if not np.all(np.isfinite(arr)):
            raise ValueError("ratings must be finite")
        object.__setattr__(self, "values", arr)

    @property
    def n_subjects(self) -> int:
        return self.values.shape[0]

    @property
    def k_raters(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class AnovaSummary:
    ms_rows: float
    ms_cols: float
    ms_error: float
    df_rows: int
    df_cols: int
    df_error: int


def anova_summary(matrix: RatingsMatrix) -> AnovaSummary:
    """Two-way ANOVA mean squares for a complete subjects x raters table.

    The residual is computed cell-wise (x - row mean - col mean + grand mean)
    rather than by subtraction of sums of squares, so it is exactly zero when
    raters agree perfectly.
    """
    x = matrix.values
    n, k = x.shape
    grand = x.mean()
    row_means = x.mean(axis=1)
    col_means = x.mean(axis=0)
    ss_rows = k * float(np.sum((row_means - grand) ** 2))
    ss_cols = n * float(np.sum((col_means - grand) ** 2))
    residual = x - row_means[:, None] - col_means[None, :] + grand
    ss_error = float(np.sum(residual**2))
    df_rows, df_cols, df_error = n - 1, k - 1, (n - 1) * (k - 1)
    return AnovaSummary(
        ms_rows=ss_rows / df_rows,
        ms_cols=ss_cols / df_cols,
        ms_error=ss_error / df_error,
        df_rows=df_rows,
        df_cols=df_cols,
        df_error=df_error,
    )


def icc(matrix: RatingsMatrix) -> float:
    """Two-way random-effects, absolute-agreement, single-measure agreement.

    Computed as (MS_rows - MS_err) / (MS_rows + (k-1) MS_err + k (MS_cols - MS_err) / n).
    The result is never clamped after the fact.
    """
    x = matrix.values
    if np.all(x == x.flat[0]):
        raise DegenerateMatrix("all ratings identical; agreement undefined")
    n, k = x.shape
    summary = anova_summary(matrix)
    denom = (
        summary.ms_rows
        + (k - 1) * summary.ms_error
        + k * (summary.ms_cols - summary.ms_error) / n
    )
    return (summary.ms_rows - summary.ms_error) / denom


@dataclass(frozen=True)
class ItemAnnotations:
    """Per-item rater verdicts: did each rater agree the item is correct."""

    item_id: str
    agree: tuple[bool, ...]

    def __post_init__(self) -> None:
        if not self.agree:
            raise ValueError(f"item {self.item_id} has no annotations")


def correctness_rate(annotations: Sequence[ItemAnnotations]) -> float:
    """Percentage of items whose raters agree by strict majority.

    Ties count as not correct.
    """
    if not annotations:
        raise ValueError("no items to rate")
    correct = sum(1 for item in annotations if sum(item.agree) * 2 > len(item.agree))
    return correct / len(annotations) * 100.0


AESTHETICS_GROUPS = ("classic", "expressive", "pleasurable")


def aesthetics_means(responses: Mapping[str, Iterable[float]]) -> tuple[float, float, float]:
    """Arithmetic mean per aesthetics group (classic, expressive, pleasurable)."""
    means = []
    for group in AESTHETICS_GROUPS:
        values = list(responses.get(group, ()))
        if not values:
            raise ValueError(f"aesthetics group {group!r} is empty")
        means.append(sum(values) / len(values))
    return tuple(means)
