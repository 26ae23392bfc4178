"""Incident ingestion: load incident descriptions, convert each to a use,
and merge near-duplicates by semantic similarity."""

from __future__ import annotations

import csv
import dataclasses
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from datetime import date
from typing import Callable, Sequence

import numpy as np

from .genpipe.parsers import MalformedOutput, parse_explore_output
from .genpipe.prompts import build_incident_prompt
from .genpipe.provider import Provider, complete_with_repair
from .layout.embedding import Embedder, fallback_embed
from .model import UseCase

log = logging.getLogger(__name__)

DEFAULT_MERGE_THRESHOLD = 0.92


class FormatError(ValueError):
    """Incident file cannot be parsed; message carries the row or offset."""


class DuplicateId(FormatError):
    """Two incident records share an id."""


@dataclass(frozen=True)
class IncidentRecord:
    incident_id: int
    title: str
    description: str
    date: str | None = None


def _check_record(record: IncidentRecord, where: str) -> IncidentRecord:
    if not record.description.strip():
        raise FormatError(f"{where}: description empty")
    if record.date is not None:
        try:
            date.fromisoformat(record.date)
        except ValueError:
            raise FormatError(f"{where}: date {record.date!r} is not an ISO date") from None
    return record


def _check_unique(records: Sequence[IncidentRecord]) -> list[IncidentRecord]:
    seen: set[int] = set()
    for record in records:
        if record.incident_id in seen:
            raise DuplicateId(f"duplicate incident_id {record.incident_id}")
        seen.add(record.incident_id)
    return list(records)


def _load_csv(path) -> list[IncidentRecord]:
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        expected = {"incident_id", "title", "description", "date"}
        if reader.fieldnames is None or not expected.issubset(reader.fieldnames):
            raise FormatError(f"header must contain {sorted(expected)}, got {reader.fieldnames}")
        for row_no, row in enumerate(reader, start=2):
            try:
                incident_id = int(row["incident_id"])
            except (TypeError, ValueError):
                raise FormatError(f"row {row_no}: incident_id {row.get('incident_id')!r} is not an integer") from None
            record = IncidentRecord(
                incident_id=incident_id,
                title=(row["title"] or "").strip(),
                description=(row["description"] or "").strip(),
                date=(row["date"] or "").strip() or None,
            )
            records.append(_check_record(record, f"row {row_no}"))
    return _check_unique(records)


def _load_json(path) -> list[IncidentRecord]:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"offset {exc.pos}: {exc.msg}") from None
    if not isinstance(data, list):
        raise FormatError("top level must be an array of records")
    records = []
    for i, obj in enumerate(data):
        if not isinstance(obj, dict):
            raise FormatError(f"record {i}: not an object")
        try:
            incident_id = int(obj["incident_id"])
            description = str(obj["description"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"record {i}: {exc}") from None
        record = IncidentRecord(
            incident_id=incident_id,
            title=str(obj.get("title", "")).strip(),
            description=description.strip(),
            date=(str(obj["date"]).strip() or None) if obj.get("date") is not None else None,
        )
        records.append(_check_record(record, f"record {i}"))
    return _check_unique(records)


def load_incidents(path, format: str = "csv") -> list[IncidentRecord]:
    """Load and validate incident records from a CSV or JSON file."""
    if format == "csv":
        return _load_csv(path)
    if format == "json":
        return _load_json(path)
    raise ValueError(f"unknown format {format!r} (expected 'csv' or 'json')")


def incident_to_use(provider: Provider, incident: IncidentRecord) -> UseCase:
    """Infer the single use behind an incident; tags it with the incident id."""
    prompt = build_incident_prompt(incident.incident_id, incident.title, incident.description)

    def parse_single(text: str) -> UseCase:
        uses = parse_explore_output(text)
        if len(uses) != 1:
            raise MalformedOutput([f"expected exactly 1 use, got {len(uses)}"])
        return uses[0]

    use = complete_with_repair(provider, prompt, parse_single)
    return dataclasses.replace(use, source_incident_ids=frozenset({incident.incident_id}))


def incidents_to_uses(
    provider: Provider,
    incidents: Sequence[IncidentRecord],
    max_in_flight: int = 4,
) -> list[UseCase]:
    with ThreadPoolExecutor(max_workers=max(1, max_in_flight)) as pool:
        uses = list(pool.map(lambda inc: incident_to_use(provider, inc), incidents))
    return uses


@dataclass(frozen=True)
class MergeCluster:
    representative: str
    member_use_ids: tuple[str, ...]
    member_incident_ids: tuple[int, ...]


@dataclass(frozen=True)
class MergeReport:
    clusters: tuple[MergeCluster, ...]
    threshold: float
    pairwise_decisions: int

    def to_jsonable(self) -> dict:
        return {
            "threshold": self.threshold,
            "pairwise_decisions": self.pairwise_decisions,
            "clusters": [
                {
                    "representative": c.representative,
                    "member_use_ids": list(c.member_use_ids),
                    "member_incident_ids": list(c.member_incident_ids),
                }
                for c in self.clusters
            ],
        }


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def merge_text(use: UseCase) -> str:
    """The component concatenation whose embedding drives merging."""
    return f"{use.purpose} | {use.capability} | {use.ai_user} | {use.ai_subject} | {use.domain}"


def merge_similar(
    uses: Sequence[UseCase],
    embedder: Embedder = fallback_embed,
    threshold: float = DEFAULT_MERGE_THRESHOLD,
    confirm: Callable[[list[UseCase]], bool] | None = None,
) -> tuple[list[UseCase], MergeReport]:
    """Single-linkage clustering over cosine similarity of use embeddings.

    Per cluster the representative is the lexicographically smallest id and
    keeps its fields verbatim; source incident ids are unioned over members.
    An optional `confirm` callback can veto individual clusters (interactive
    review); vetoed clusters fall apart into singletons.
    """
    if not uses:
        raise ValueError("uses must be non-empty")
    if not 0.0 < threshold <= 1.0:
        raise ValueError("threshold must be in (0, 1]")

    texts = [merge_text(u) for u in uses]
    vectors = np.stack([np.asarray(embedder(t), dtype=np.float64) for t in texts])
    norms = np.linalg.norm(vectors, axis=1)
    safe = np.where(norms == 0.0, 1.0, norms)
    unit = vectors / safe[:, None]
    similarity = np.clip(unit @ unit.T, -1.0, 1.0)

    n = len(uses)
    uf = _UnionFind(n)
    decisions = 0
    for i in range(n):
        for j in range(i + 1, n):
            decisions += 1
            # identical component text merges at any threshold; float dot
            # products of equal vectors can land a hair under 1.0
            if texts[i] == texts[j] or similarity[i, j] >= threshold:
                uf.union(i, j)

    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(uf.find(i), []).append(i)

    member_sets = sorted(
        (sorted(members, key=lambda i: (uses[i].id, i)) for members in groups.values()),
        key=lambda members: uses[members[0]].id,
    )

    if confirm is not None:
        approved: list[list[int]] = []
        for members in member_sets:
            if len(members) == 1 or confirm([uses[i] for i in members]):
                approved.append(members)
            else:
                approved.extend([i] for i in members)
        member_sets = sorted(approved, key=lambda members: uses[members[0]].id)

    merged: list[UseCase] = []
    clusters: list[MergeCluster] = []
    for members in member_sets:
        rep = uses[members[0]]
        incident_ids: set[int] = set()
        for i in members:
            incident_ids |= uses[i].source_incident_ids
        merged.append(dataclasses.replace(rep, source_incident_ids=frozenset(incident_ids)))
        clusters.append(
            MergeCluster(
                representative=rep.id,
                member_use_ids=tuple(uses[i].id for i in members),
                member_incident_ids=tuple(sorted(incident_ids)),
            )
        )
    log.info("merged %d uses into %d (threshold %.3f)", n, len(merged), threshold)
    return merged, MergeReport(tuple(clusters), threshold, decisions)


def ingest_atlas(
    provider: Provider,
    incidents: Sequence[IncidentRecord],
    threshold: float = DEFAULT_MERGE_THRESHOLD,
    embedder: Embedder = fallback_embed,
    tsne_params=None,
    rules=None,
    max_in_flight: int = 4,
    confirm: Callable[[list[UseCase]], bool] | None = None,
):
    """Full ingest flow: incidents -> uses -> merge -> assess -> atlas.

    Returns (dataset, merge report). The dataset's technology label is
    "multi" because incident corpora span technologies.
    """
    from .genpipe.pipeline import assemble_atlas, assess_uses

    uses = incidents_to_uses(provider, incidents, max_in_flight)
    merged, report = merge_similar(uses, embedder, threshold, confirm)
    assessed = assess_uses(provider, merged, max_in_flight)
    dataset = assemble_atlas("multi", assessed, tsne_params, rules, embedder)
    return dataset, report
