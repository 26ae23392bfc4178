"""Transforms from raw layout coordinates to the unit square and the risk-split view."""

from __future__ import annotations

from typing import Mapping

import numpy as np

from ..model import RiskLevel

#: Horizontal band (x range) each risk level occupies in the split view.
RISK_BANDS: dict[RiskLevel, tuple[float, float]] = {
    RiskLevel.UNACCEPTABLE: (0.0, 0.30),
    RiskLevel.HIGH: (0.35, 0.65),
    RiskLevel.LIMITED_LOW: (0.70, 1.0),
}


def normalize_coords(Y: np.ndarray) -> np.ndarray:
    """Min-max scale each axis into [0,1]; a constant axis maps to 0.5."""
    Y = np.asarray(Y, dtype=np.float64)
    if Y.size == 0:
        return Y.reshape(0, 2)
    lo = Y.min(axis=0)
    hi = Y.max(axis=0)
    span = hi - lo
    out = np.empty_like(Y)
    for axis in range(Y.shape[1]):
        if span[axis] == 0.0:
            out[:, axis] = 0.5
        else:
            out[:, axis] = (Y[:, axis] - lo[axis]) / span[axis]
    return out


def split_by_risk(
    coords: Mapping[str, tuple[float, float]],
    levels: Mapping[str, RiskLevel],
) -> dict[str, tuple[float, float]]:
    """Remap x affinely into the band of each point's risk level; y is untouched.

    The affine map preserves the relative x order within each band.
    """
    out: dict[str, tuple[float, float]] = {}
    for uid, (x, y) in coords.items():
        lo, hi = RISK_BANDS[levels[uid]]
        out[uid] = (lo + x * (hi - lo), y)
    return out
