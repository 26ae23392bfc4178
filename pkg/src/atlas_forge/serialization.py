"""Canonical atlas serialization: sorted keys, 6-decimal floats, UTF-8, LF.

Equal datasets serialize to identical bytes, which makes golden-file tests
and determinism checks possible. `parse_atlas` is the strict inverse.
"""

from __future__ import annotations

import json
from typing import Any

from .model import (
    SCHEMA_VERSION,
    AffectedParty,
    AssessmentItem,
    AtlasDataset,
    CategorySet,
    ImpactCard,
    ImplementationPotential,
    Mitigation,
    RiskLevel,
    SocioTechnicalLayer,
    UseCase,
)

FLOAT_DECIMALS = 6


class AtlasFormatError(ValueError):
    """Raised when bytes cannot be parsed into a valid atlas file."""


def quantize(value: float) -> float:
    return round(float(value), FLOAT_DECIMALS)


def _quantized(obj: Any) -> Any:
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return quantize(obj)
    if isinstance(obj, dict):
        return {key: _quantized(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_quantized(val) for val in obj]
    return obj


def canonical_json_bytes(payload: Any) -> bytes:
    """Encode any JSON-able payload in the canonical form used for atlas files."""
    text = json.dumps(_quantized(payload), sort_keys=True, ensure_ascii=False, indent=1)
    return (text + "\n").encode("utf-8")


def use_to_jsonable(use: UseCase) -> dict[str, Any]:
    return {
        "id": use.id,
        "purpose": use.purpose,
        "capability": use.capability,
        "ai_user": use.ai_user,
        "ai_subject": use.ai_subject,
        "domain": use.domain,
        "short_description": use.short_description,
        "long_description": use.long_description,
        "daily": use.daily,
        "implementation_potential": use.implementation_potential.value,
        "risk_level": use.risk_level.value,
        "categories": use.categories.as_dict(),
        "source_incident_ids": sorted(use.source_incident_ids),
    }


def _item_to_jsonable(item: AssessmentItem) -> dict[str, Any]:
    return {
        "text": item.text,
        "layer": item.layer.value,
        "affected": sorted(p.value for p in item.affected),
        "basis": item.basis,
    }


def card_to_jsonable(card: ImpactCard) -> dict[str, Any]:
    return {
        "use_id": card.use_id,
        "risks": [_item_to_jsonable(i) for i in card.risks],
        "benefits": [_item_to_jsonable(i) for i in card.benefits],
        "mitigations": [{"text": m.text, "layer": m.layer.value} for m in card.mitigations],
        "mitigated_description": card.mitigated_description,
        "mitigated_risk_level": card.mitigated_risk_level.value,
        "risk_reasoning": card.risk_reasoning,
        "illustration_prompt": card.illustration_prompt,
        "illustration_ref": card.illustration_ref,
    }


def dataset_to_jsonable(dataset: AtlasDataset) -> dict[str, Any]:
    return {
        "schema_version": dataset.schema_version,
        "technology": dataset.technology,
        "uses": [use_to_jsonable(u) for u in dataset.uses],
        "cards": [card_to_jsonable(c) for c in dataset.cards],
        "coords": {uid: [x, y] for uid, (x, y) in dataset.coords.items()},
        "split_coords": {uid: [x, y] for uid, (x, y) in dataset.split_coords.items()},
        "palette": dict(dataset.palette),
    }


def serialize_atlas(dataset: AtlasDataset) -> bytes:
    return canonical_json_bytes(dataset_to_jsonable(dataset))


def _require(obj: dict, key: str, kind: type, where: str) -> Any:
    if key not in obj:
        raise AtlasFormatError(f"{where}: missing key {key!r}")
    value = obj[key]
    if kind is float and isinstance(value, int) and not isinstance(value, bool):
        value = float(value)
    if not isinstance(value, kind) or (kind is not bool and isinstance(value, bool)):
        raise AtlasFormatError(f"{where}: key {key!r} is not {kind.__name__}")
    return value


def _parse_enum(enum_cls, value: Any, where: str):
    try:
        return enum_cls(value)
    except ValueError:
        raise AtlasFormatError(f"{where}: unknown {enum_cls.__name__} value {value!r}") from None


def _parse_use(obj: Any, index: int) -> UseCase:
    where = f"uses[{index}]"
    if not isinstance(obj, dict):
        raise AtlasFormatError(f"{where}: not an object")
    categories_obj = _require(obj, "categories", dict, where)
    try:
        categories = CategorySet.from_mapping(categories_obj)
    except ValueError as exc:
        raise AtlasFormatError(f"{where}: {exc}") from None
    source_ids = _require(obj, "source_incident_ids", list, where)
    if any(not isinstance(i, int) or isinstance(i, bool) for i in source_ids):
        raise AtlasFormatError(f"{where}: source_incident_ids must be integers")
    return UseCase(
        id=_require(obj, "id", str, where),
        purpose=_require(obj, "purpose", str, where),
        capability=_require(obj, "capability", str, where),
        ai_user=_require(obj, "ai_user", str, where),
        ai_subject=_require(obj, "ai_subject", str, where),
        domain=_require(obj, "domain", str, where),
        short_description=_require(obj, "short_description", str, where),
        long_description=_require(obj, "long_description", str, where),
        daily=_require(obj, "daily", bool, where),
        implementation_potential=_parse_enum(
            ImplementationPotential, _require(obj, "implementation_potential", str, where), where
        ),
        risk_level=_parse_enum(RiskLevel, _require(obj, "risk_level", str, where), where),
        categories=categories,
        source_incident_ids=frozenset(source_ids),
    )


def _parse_item(obj: Any, where: str) -> AssessmentItem:
    if not isinstance(obj, dict):
        raise AtlasFormatError(f"{where}: not an object")
    affected = _require(obj, "affected", list, where)
    basis = obj.get("basis")
    if basis is not None and not isinstance(basis, str):
        raise AtlasFormatError(f"{where}: basis must be a string or null")
    return AssessmentItem(
        text=_require(obj, "text", str, where),
        layer=_parse_enum(SocioTechnicalLayer, _require(obj, "layer", str, where), where),
        affected=frozenset(_parse_enum(AffectedParty, p, where) for p in affected),
        basis=basis,
    )


def _parse_card(obj: Any, index: int) -> ImpactCard:
    where = f"cards[{index}]"
    if not isinstance(obj, dict):
        raise AtlasFormatError(f"{where}: not an object")
    ref = obj.get("illustration_ref")
    if ref is not None and not isinstance(ref, str):
        raise AtlasFormatError(f"{where}: illustration_ref must be a string or null")
    return ImpactCard(
        use_id=_require(obj, "use_id", str, where),
        risks=tuple(_parse_item(i, f"{where}.risks") for i in _require(obj, "risks", list, where)),
        benefits=tuple(_parse_item(i, f"{where}.benefits") for i in _require(obj, "benefits", list, where)),
        mitigations=tuple(
            Mitigation(
                text=_require(m, "text", str, f"{where}.mitigations"),
                layer=_parse_enum(
                    SocioTechnicalLayer, _require(m, "layer", str, f"{where}.mitigations"), where
                ),
            )
            for m in _require(obj, "mitigations", list, where)
        ),
        mitigated_description=_require(obj, "mitigated_description", str, where),
        mitigated_risk_level=_parse_enum(
            RiskLevel, _require(obj, "mitigated_risk_level", str, where), where
        ),
        risk_reasoning=_require(obj, "risk_reasoning", str, where),
        illustration_prompt=_require(obj, "illustration_prompt", str, where),
        illustration_ref=ref,
    )


def _parse_coords(obj: Any, label: str) -> dict[str, tuple[float, float]]:
    if not isinstance(obj, dict):
        raise AtlasFormatError(f"{label}: not an object")
    coords: dict[str, tuple[float, float]] = {}
    for uid, pair in obj.items():
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or any(not isinstance(v, (int, float)) or isinstance(v, bool) for v in pair)
        ):
            raise AtlasFormatError(f"{label}[{uid}]: expected [x, y]")
        x, y = float(pair[0]), float(pair[1])
        if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
            raise AtlasFormatError(f"{label}[{uid}]: coordinate out of range: ({x}, {y})")
        coords[uid] = (x, y)
    return coords


def parse_atlas(data: bytes) -> AtlasDataset:
    """Decode canonical atlas bytes; rejects unknown schema versions and
    coordinates outside [0,1]."""
    try:
        obj = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise AtlasFormatError(f"not valid UTF-8 JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise AtlasFormatError("top level is not an object")

    version = obj.get("schema_version")
    if version != SCHEMA_VERSION:
        raise AtlasFormatError(f"unknown schema_version {version!r} (expected {SCHEMA_VERSION})")

    palette = _require(obj, "palette", dict, "atlas")
    if any(not isinstance(v, str) for v in palette.values()):
        raise AtlasFormatError("palette values must be strings")

    return AtlasDataset(
        technology=_require(obj, "technology", str, "atlas"),
        uses=tuple(_parse_use(u, i) for i, u in enumerate(_require(obj, "uses", list, "atlas"))),
        cards=tuple(_parse_card(c, i) for i, c in enumerate(_require(obj, "cards", list, "atlas"))),
        coords=_parse_coords(_require(obj, "coords", dict, "atlas"), "coords"),
        split_coords=_parse_coords(_require(obj, "split_coords", dict, "atlas"), "split_coords"),
        palette=dict(palette),
    )


def write_atlas(dataset: AtlasDataset, path) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize_atlas(dataset))


def read_atlas(path) -> AtlasDataset:
    with open(path, "rb") as fh:
        return parse_atlas(fh.read())
