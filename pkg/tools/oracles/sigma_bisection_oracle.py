"""Independent scalar bisection for the bandwidth of one affinity row.

Bisects on sigma directly (the implementation bisects on beta), computing the
entropy from explicitly normalized probabilities. Run to print the sigma for
the frozen test case: squared distances [1, 2], target perplexity 1.5.
"""

import math


def entropy_nats(d2, sigma):
    weights = [math.exp(-d / (2.0 * sigma * sigma)) for d in d2]
    total = sum(weights)
    probs = [w / total for w in weights]
    return -sum(p * math.log(p) for p in probs if p > 0)


def solve_sigma(d2, perplexity, lo=1e-6, hi=1e6, iters=200):
    target = math.log(perplexity)
    for _ in range(iters):
        mid = (lo + hi) / 2.0
        if entropy_nats(d2, mid) < target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


if __name__ == "__main__":
    d2 = [1.0, 2.0]
    perp = 1.5
    sigma = solve_sigma(d2, perp)
    print(f"squared distances {d2}, perplexity {perp}")
    print(f"sigma = {sigma:.12f}")
    print(f"achieved perplexity = {math.exp(entropy_nats(d2, sigma)):.12f}")
