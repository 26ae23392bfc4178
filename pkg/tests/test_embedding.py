from collections import Counter

import numpy as np

from atlas_forge.layout.embedding import EMBEDDING_DIM, cosine_similarity, fallback_embed


def ngram_overlap_cosine(a: str, b: str, n: int = 3) -> float:
    """Independent oracle: cosine over raw 3-gram multisets, no hashing."""
    def grams(text: str) -> Counter:
        text = text.casefold()
        if len(text) < n:
            return Counter([text] if text else [])
        return Counter(text[i : i + n] for i in range(len(text) - n + 1))

    ca, cb = grams(a), grams(b)
    dot = sum(ca[g] * cb[g] for g in ca)
    na = sum(v * v for v in ca.values()) ** 0.5
    nb = sum(v * v for v in cb.values()) ** 0.5
    if na == 0 or nb == 0:
        return 0.0
    return dot / (na * nb)


class TestFallbackEmbed:
    def test_deterministic(self):
        a = fallback_embed("facial recognition for border control")
        b = fallback_embed("facial recognition for border control")
        assert np.array_equal(a, b)
        assert cosine_similarity(a, b) == 1.0

    def test_empty_text_is_zero_vector(self):
        vec = fallback_embed("")
        assert vec.shape == (EMBEDDING_DIM,)
        assert not vec.any()

    def test_normalized(self):
        vec = fallback_embed("some text about AI uses")
        assert abs(np.linalg.norm(vec) - 1.0) <= 1e-9

    def test_similarity_ordering_matches_ngram_oracle(self):
        close = cosine_similarity(
            fallback_embed("facial recognition"), fallback_embed("face recognition")
        )
        far = cosine_similarity(
            fallback_embed("facial recognition"), fallback_embed("crop yield monitoring")
        )
        assert close > far
        oracle_close = ngram_overlap_cosine("facial recognition", "face recognition")
        oracle_far = ngram_overlap_cosine("facial recognition", "crop yield monitoring")
        assert oracle_close > oracle_far
        # hashing into 512 buckets moves cosines a little (bucket collisions)
        # but must not scramble them
        assert abs(close - oracle_close) < 0.1
        assert abs(far - oracle_far) < 0.1

    def test_case_insensitive(self):
        assert np.array_equal(fallback_embed("Facial Recognition"), fallback_embed("facial recognition"))

    def test_short_text_still_embeds(self):
        assert fallback_embed("ai").any()
