"""Deterministic text embeddings.

Live deployments may plug in any sentence-embedding endpoint; tests and
offline runs use `fallback_embed`, a hashed character-3-gram term-frequency
vector. It is cheap, deterministic, and similar strings land close in
cosine space, which is all the layout needs.
"""

from __future__ import annotations

import zlib
from typing import Callable, Sequence

import numpy as np

EMBEDDING_DIM = 512

Embedder = Callable[[str], np.ndarray]


def _char_ngrams(text: str, n: int = 3) -> list[str]:
    if len(text) < n:
        return [text] if text else []
    return [text[i : i + n] for i in range(len(text) - n + 1)]


def fallback_embed(text: str) -> np.ndarray:
    """L2-normalized hashed 3-gram frequency vector; empty text maps to zero."""
    vec = np.zeros(EMBEDDING_DIM, dtype=np.float64)
    for gram in _char_ngrams(text.casefold()):
        bucket = zlib.crc32(gram.encode("utf-8")) % EMBEDDING_DIM
        vec[bucket] += 1.0
    norm = np.linalg.norm(vec)
    if norm > 0:
        vec /= norm
    return vec


def embed_corpus(texts: Sequence[str], embedder: Embedder = fallback_embed) -> np.ndarray:
    if not texts:
        return np.zeros((0, EMBEDDING_DIM), dtype=np.float64)
    return np.stack([np.asarray(embedder(t), dtype=np.float64) for t in texts])


def cosine_similarity(a: np.ndarray, b: np.ndarray) -> float:
    """Cosine of two vectors; zero vectors compare as 0 to anything."""
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(np.dot(a, b) / (na * nb))
