import math

import numpy as np
import pytest

from atlas_forge.layout.tsne import (
    DegenerateDistances,
    achieved_perplexities,
    calibrate_row,
    effective_perplexity,
    pairwise_affinities,
)

# frozen from tools/oracles/sigma_bisection_oracle.py: squared distances
# [1, 2] at target perplexity 1.5
ORACLE_SIGMA = 0.525153983206


def affinity_invariants(aff):
    P = aff.matrix
    assert np.allclose(P, P.T)
    assert np.all(np.diag(P) == 0.0)
    assert np.all(P >= 0.0)
    assert abs(P.sum() - 1.0) <= 1e-9


class TestEquidistantPoints:
    def test_uniform_rows_and_exact_perplexity(self):
        # equilateral triangle: every point sees two neighbors at distance 1
        X = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, math.sqrt(3) / 2]])
        aff = pairwise_affinities(X, perplexity=2.0)
        affinity_invariants(aff)
        # each conditional row is (0.5, 0.5) so the symmetrized matrix is
        # uniform over off-diagonal pairs
        off_diag = aff.matrix[~np.eye(3, dtype=bool)]
        assert np.allclose(off_diag, 1.0 / 6.0)
        assert np.allclose(achieved_perplexities(X, aff.sigmas), 2.0, atol=1e-6)


class TestSigmaBisection:
    def test_matches_independent_oracle(self):
        # collinear points give row 0 squared distances exactly {1, 2}
        X = np.array([[0.0], [1.0], [math.sqrt(2.0)]])
        aff = pairwise_affinities(X, perplexity=1.5, tolerance=1e-7)
        assert aff.sigmas[0] == pytest.approx(ORACLE_SIGMA, abs=1e-4)

    def test_calibrate_row_hits_target_entropy(self):
        d2 = np.array([1.0, 2.0])
        beta, p = calibrate_row(d2, perplexity=1.5, tolerance=1e-7)
        entropy = -float(np.sum(p * np.log(p)))
        assert math.exp(entropy) == pytest.approx(1.5, abs=1e-5)

    def test_degenerate_row_raises(self):
        with pytest.raises(DegenerateDistances):
            calibrate_row(np.zeros(4), perplexity=2.0)

    def test_duplicate_points_raise_from_affinities(self):
        X = np.zeros((3, 2))
        with pytest.raises(DegenerateDistances):
            pairwise_affinities(X, perplexity=1.0)


class TestRandomInputs:
    @pytest.mark.parametrize("seed", range(10))
    def test_invariants_hold(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(3, 60))
        X = rng.normal(size=(n, 5))
        perp = effective_perplexity(15.0, n)
        aff = pairwise_affinities(X, perp)
        affinity_invariants(aff)
        achieved = achieved_perplexities(X, aff.sigmas)
        assert np.all(np.abs(achieved - perp) <= 1e-3)


class TestPerplexityClamp:
    def test_clamped_to_a_third_of_neighbors(self):
        assert effective_perplexity(15.0, 61) == 15.0
        assert effective_perplexity(15.0, 10) == 3.0
        assert effective_perplexity(15.0, 3) == 1.0
