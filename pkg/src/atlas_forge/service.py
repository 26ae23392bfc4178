"""Read-only HTTP service over a generated atlas file.

Responses are rendered with the canonical serializer, so identical requests
return byte-identical bodies and golden tests can pin them.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, HTTPException, Response
from fastapi.staticfiles import StaticFiles

from .model import (
    CATEGORY_NAMES,
    AssessmentItem,
    AtlasDataset,
    ImpactCard,
    RiskLevel,
    SocioTechnicalLayer,
    UseCase,
)
from .serialization import canonical_json_bytes, read_atlas, use_to_jsonable


@dataclass(frozen=True)
class ServiceConfig:
    atlas_path: str
    host: str = "127.0.0.1"
    port: int = 8000
    static_dir: str | None = None
    read_only: bool = True


def _canonical_response(payload) -> Response:
    return Response(content=canonical_json_bytes(payload), media_type="application/json")


def _use_summary(dataset: AtlasDataset, use: UseCase) -> dict:
    x, y = dataset.coords.get(use.id, (0.5, 0.5))
    sx, sy = dataset.split_coords.get(use.id, (x, y))
    return {
        "id": use.id,
        "short_description": use.short_description,
        "risk_level": use.risk_level.value,
        "daily": use.daily,
        "implementation_potential": use.implementation_potential.value,
        "x": x,
        "y": y,
        "split_x": sx,
        "split_y": sy,
    }


def _grouped_items(items: tuple[AssessmentItem, ...]) -> dict:
    grouped: dict[str, list[dict]] = {layer.value: [] for layer in SocioTechnicalLayer}
    for item in items:
        grouped[item.layer.value].append(
            {
                "text": item.text,
                "affected": sorted(p.value for p in item.affected),
                "basis": item.basis,
            }
        )
    return grouped


def _card_detail(card: ImpactCard) -> dict:
    return {
        "use_id": card.use_id,
        "risks": _grouped_items(card.risks),
        "benefits": _grouped_items(card.benefits),
        "mitigations": [{"text": m.text, "layer": m.layer.value} for m in card.mitigations],
        "mitigated_description": card.mitigated_description,
        "mitigated_risk_level": card.mitigated_risk_level.value,
        "risk_reasoning": card.risk_reasoning,
        "illustration_prompt": card.illustration_prompt,
        "illustration_ref": card.illustration_ref,
    }


def _matches_query(use: UseCase, q: str) -> bool:
    needle = q.casefold()
    haystacks = (
        use.short_description,
        use.long_description,
        use.purpose,
        use.capability,
        use.ai_user,
        use.ai_subject,
        use.domain,
    )
    return any(needle in hay.casefold() for hay in haystacks)


def create_app(dataset: AtlasDataset, static_dir: str | Path | None = None) -> FastAPI:
    """Build the API over an immutable in-memory dataset snapshot."""
    app = FastAPI(title="atlas-forge", docs_url=None, redoc_url=None)
    uses_by_id = {use.id: use for use in dataset.uses}
    cards_by_id = {card.use_id: card for card in dataset.cards}
    ordered_uses = sorted(dataset.uses, key=lambda u: u.id)

    @app.get("/api/meta")
    def meta() -> Response:
        return _canonical_response(
            {
                "schema_version": dataset.schema_version,
                "technology": dataset.technology,
                "use_count": len(dataset.uses),
                "categories": list(CATEGORY_NAMES),
            }
        )

    @app.get("/api/uses")
    def list_uses(q: str = "", category: str = "", risk: str = "") -> Response:
        if category and category not in CATEGORY_NAMES:
            raise HTTPException(status_code=400, detail=f"unknown category {category!r}")
        if risk:
            try:
                risk_level = RiskLevel(risk)
            except ValueError:
                raise HTTPException(status_code=400, detail=f"unknown risk value {risk!r}") from None
        selected = []
        for use in ordered_uses:
            if q and not _matches_query(use, q):
                continue
            if category and not use.categories[category]:
                continue
            if risk and use.risk_level is not risk_level:
                continue
            selected.append(_use_summary(dataset, use))
        return _canonical_response({"uses": selected})

    @app.get("/api/uses/{use_id}")
    def use_detail(use_id: str) -> Response:
        use = uses_by_id.get(use_id)
        if use is None:
            raise HTTPException(status_code=404, detail=f"unknown use {use_id!r}")
        return _canonical_response(
            {
                "use": use_to_jsonable(use),
                "card": _card_detail(cards_by_id[use_id]),
                "coords": list(dataset.coords.get(use_id, (0.5, 0.5))),
                "split_coords": list(dataset.split_coords.get(use_id, (0.5, 0.5))),
            }
        )

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def app_from_file(atlas_path: str | Path, static_dir: str | Path | None = None) -> FastAPI:
    return create_app(read_atlas(atlas_path), static_dir)


def app_from_config(config: ServiceConfig) -> FastAPI:
    """Parse the atlas at startup (fails fast on a bad file) and build the app."""
    return app_from_file(config.atlas_path, config.static_dir)
