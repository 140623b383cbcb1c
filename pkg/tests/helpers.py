"""Shared helpers: seeded random PMFs and a brute-force code-length oracle."""

from __future__ import annotations

import itertools
import random

from infomeasures import Pmf


def random_pmf(rng: random.Random, n: int, allow_zeros: bool = False) -> Pmf:
    """A random point of the n-simplex; optionally with zeroed letters."""
    while True:
        weights = [rng.random() for _ in range(n)]
        if allow_zeros:
            weights = [0.0 if rng.random() < 0.25 else w for w in weights]
        total = sum(weights)
        if total > 1e-6:
            return Pmf(tuple(w / total for w in weights))


def optimal_avg_length(probs) -> float:
    """Minimum average codeword length over all Kraft-feasible integer
    length assignments with lengths in [1, n-1].

    Exhausts non-decreasing length tuples against probabilities sorted
    in non-increasing order (any optimum can be rearranged into that
    shape), with the Kraft test done in exact integer arithmetic.
    """
    n = len(probs)
    ordered = sorted(probs, reverse=True)
    lmax = n - 1
    best = None
    for lens in itertools.combinations_with_replacement(range(1, lmax + 1), n):
        if sum(2 ** (lmax - l) for l in lens) > 2**lmax:
            continue
        avg = sum(p * l for p, l in zip(ordered, lens))
        if best is None or avg < best:
            best = avg
    return best
