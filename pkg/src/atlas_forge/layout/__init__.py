"""Semantic 2-D layout: text embeddings, t-SNE optimization, view transforms."""

from .embedding import EMBEDDING_DIM, fallback_embed
from .tsne import (
    AffinityMatrix,
    DegenerateDistances,
    LayoutResult,
    TsneParams,
    kl_divergence,
    lowdim_affinities,
    pairwise_affinities,
    tsne,
)
from .views import RISK_BANDS, normalize_coords, split_by_risk

__all__ = [
    "EMBEDDING_DIM",
    "fallback_embed",
    "AffinityMatrix",
    "DegenerateDistances",
    "LayoutResult",
    "TsneParams",
    "kl_divergence",
    "lowdim_affinities",
    "pairwise_affinities",
    "tsne",
    "RISK_BANDS",
    "normalize_coords",
    "split_by_risk",
]
