"""t-SNE from scratch: perplexity calibration by bisection, exact gradient.

Sized for hundreds of points, so everything is the exact O(N^2) formulation;
the gradient loop is single-threaded to keep runs bit-deterministic for a
given seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

EPS = 1e-12
DUPLICATE_JITTER = 1e-8
INIT_SCALE = 1e-4
MIN_GAIN = 0.01


class DegenerateDistances(ValueError):
    """A point's distances to every other point are all zero."""


@dataclass(frozen=True)
class TsneParams:
    perplexity: float = 15.0
    learning_rate: float = 200.0
    iterations: int = 1000
    early_exaggeration: float = 12.0
    exaggeration_iters: int = 250
    momentum_switch_iter: int = 250
    initial_momentum: float = 0.5
    final_momentum: float = 0.8
    seed: int = 0
    sigma_tolerance: float = 1e-5
    sigma_max_bisections: int = 64

    def __post_init__(self) -> None:
        if self.perplexity < 1:
            raise ValueError("perplexity must be >= 1")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.learning_rate <= 0:
            raise ValueError("learning_rate must be > 0")


@dataclass(frozen=True)
class AffinityMatrix:
    """Symmetrized joint probabilities and the per-point bandwidths behind them."""

    matrix: np.ndarray
    sigmas: np.ndarray

    @property
    def size(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class LayoutResult:
    coords: np.ndarray
    kl_trace: tuple[float, ...]
    params: TsneParams = field(default_factory=TsneParams)


def squared_distances(X: np.ndarray) -> np.ndarray:
    sq = np.sum(X * X, axis=1)
    d2 = sq[:, None] - 2.0 * (X @ X.T) + sq[None, :]
    np.fill_diagonal(d2, 0.0)
    return np.maximum(d2, 0.0)


def _row_entropy(d2_row: np.ndarray, beta: float) -> tuple[float, np.ndarray]:
    """Entropy (nats) and conditional probabilities for one row at a given beta.

    Weights are shifted by the nearest neighbor so large betas cannot
    underflow the whole row to zero.
    """
    shifted = d2_row - d2_row.min()
    w = np.exp(-shifted * beta)
    w_sum = w.sum()
    p = w / w_sum
    entropy = math.log(w_sum) + beta * float(np.dot(shifted, p))
    return entropy, p


def calibrate_row(
    d2_row: np.ndarray,
    perplexity: float,
    tolerance: float = 1e-5,
    max_bisections: int = 64,
) -> tuple[float, np.ndarray]:
    """Bisection on beta = 1/(2 sigma^2) until the row entropy hits log(perplexity).

    Returns (beta, conditional probabilities). Rows that cannot reach the
    target within the iteration budget keep the closest beta found instead of
    failing; equidistant neighbors make some targets unreachable.
    """
    if np.all(d2_row == 0.0):
        raise DegenerateDistances("all pairwise distances in a row are zero")
    target = math.log(perplexity)
    beta = 1.0
    beta_min, beta_max = -math.inf, math.inf
    entropy, p = _row_entropy(d2_row, beta)
    for _ in range(max_bisections):
        diff = entropy - target
        if abs(diff) <= tolerance:
            break
        if diff > 0:
            beta_min = beta
            beta = beta * 2.0 if beta_max == math.inf else (beta + beta_max) / 2.0
        else:
            beta_max = beta
            beta = beta / 2.0 if beta_min == -math.inf else (beta + beta_min) / 2.0
        entropy, p = _row_entropy(d2_row, beta)
    return beta, p


def pairwise_affinities(
    X: np.ndarray,
    perplexity: float,
    tolerance: float = 1e-5,
    max_bisections: int = 64,
) -> AffinityMatrix:
    """Symmetrized joint affinities p_ij with per-row bandwidth calibration.

    The result is symmetric, zero on the diagonal, and sums to 1.
    """
    X = np.asarray(X, dtype=np.float64)
    n = X.shape[0]
    if n < 3:
        raise ValueError("need at least 3 points")
    d2 = squared_distances(X)
    conditional = np.zeros((n, n), dtype=np.float64)
    sigmas = np.zeros(n, dtype=np.float64)
    others = np.arange(n)
    for i in range(n):
        mask = others != i
        beta, p_row = calibrate_row(d2[i, mask], perplexity, tolerance, max_bisections)
        conditional[i, mask] = p_row
        sigmas[i] = math.sqrt(1.0 / (2.0 * beta))
    joint = (conditional + conditional.T) / (2.0 * n)
    return AffinityMatrix(matrix=joint, sigmas=sigmas)


def achieved_perplexities(X: np.ndarray, sigmas: np.ndarray) -> np.ndarray:
    """Per-row e^H of the conditionals implied by the given bandwidths.

    Rebuilds each conditional distribution from sigma rather than echoing the
    calibration loop, so it can serve as a check on it.
    """
    X = np.asarray(X, dtype=np.float64)
    n = X.shape[0]
    d2 = squared_distances(X)
    out = np.zeros(n, dtype=np.float64)
    others = np.arange(n)
    for i in range(n):
        beta = 1.0 / (2.0 * sigmas[i] ** 2)
        entropy, _ = _row_entropy(d2[i, others != i], beta)
        out[i] = math.exp(entropy)
    return out


def lowdim_affinities(Y: np.ndarray) -> np.ndarray:
    """Student-t joint affinities q_ij of a 2-D layout."""
    num = 1.0 / (1.0 + squared_distances(np.asarray(Y, dtype=np.float64)))
    np.fill_diagonal(num, 0.0)
    return num / num.sum()


def _kl(P: np.ndarray, Q: np.ndarray) -> float:
    """KL(P || Q) with 1e-12 floors inside the log; zero-p cells contribute 0."""
    return float(np.sum(P * (np.log(np.maximum(P, EPS)) - np.log(np.maximum(Q, EPS)))))


def kl_divergence(P: AffinityMatrix | np.ndarray, Y: np.ndarray) -> float:
    """Layout cost: KL divergence between P and the layout's Student-t Q."""
    matrix = P.matrix if isinstance(P, AffinityMatrix) else np.asarray(P, dtype=np.float64)
    return _kl(matrix, lowdim_affinities(Y))


def _jitter_duplicates(X: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Give repeated rows a tiny seeded offset so bandwidth calibration converges."""
    seen: set[bytes] = set()
    out = X.copy()
    for i in range(out.shape[0]):
        key = out[i].tobytes()
        if key in seen:
            out[i] = out[i] + rng.normal(0.0, DUPLICATE_JITTER, size=out.shape[1])
        else:
            seen.add(key)
    return out


def effective_perplexity(perplexity: float, n: int) -> float:
    return max(1.0, min(perplexity, (n - 1) / 3.0))


def tsne(X: np.ndarray, params: TsneParams | None = None) -> LayoutResult:
    """Run the full optimization; same X and seed give bit-identical coords."""
    params = params or TsneParams()
    X = np.asarray(X, dtype=np.float64)
    n = X.shape[0]
    if n < 3:
        raise ValueError("need at least 3 points")

    rng = np.random.default_rng(params.seed)
    X = _jitter_duplicates(X, rng)
    perp = effective_perplexity(params.perplexity, n)
    P = pairwise_affinities(X, perp, params.sigma_tolerance, params.sigma_max_bisections).matrix

    Y = rng.normal(0.0, INIT_SCALE, size=(n, 2))
    velocity = np.zeros_like(Y)
    gains = np.ones_like(Y)
    trace: list[float] = []

    for it in range(params.iterations):
        P_t = P * params.early_exaggeration if it < params.exaggeration_iters else P
        num = 1.0 / (1.0 + squared_distances(Y))
        np.fill_diagonal(num, 0.0)
        Q = num / num.sum()

        L = (P_t - Q) * num
        grad = 4.0 * (np.diag(L.sum(axis=1)) @ Y - L @ Y)

        # per-coordinate adaptive gains, as in the reference formulation
        gains = np.where(np.sign(grad) != np.sign(velocity), gains + 0.2, gains * 0.8)
        gains = np.maximum(gains, MIN_GAIN)

        momentum = params.initial_momentum if it < params.momentum_switch_iter else params.final_momentum
        velocity = momentum * velocity - params.learning_rate * gains * grad
        Y = Y + velocity
        Y = Y - Y.mean(axis=0)

        trace.append(_kl(P, lowdim_affinities(Y)))

    return LayoutResult(coords=Y, kl_trace=tuple(trace), params=params)
