"""Scalar information measures over finite-alphabet PMFs.

All quantities are in bits (log base 2). Summation conventions:
``0 * log2(0) == 0`` and ``0 * log2(0/0) == 0``, so degenerate PMFs such
as ``(1, 0)`` are valid inputs everywhere. A zero in a logarithm
denominator yields ``+inf`` unless a ClampPolicy floors it first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "Pmf",
    "ClampPolicy",
    "DivergenceSpec",
    "as_pmf",
    "entropy",
    "max_entropy",
    "cross_entropy",
    "kl_divergence",
    "js_divergence",
    "d_new",
    "d_new_g",
    "d_new_gc",
    "minkowski",
    "divergence",
    "element",
    "DIVERGENCE_KINDS",
    "ELEMENT_KINDS",
]

_SUM_TOL = 1e-9

DIVERGENCE_KINDS = ("KL", "JS", "New", "NewG", "NewGC", "Minkowski")
ELEMENT_KINDS = ("eDKL", "eNew", "eNewG", "eNewC", "eNewGC", "eDJS")


@dataclass(frozen=True)
class Pmf:
    """A validated probability mass function over a finite alphabet.

    Entries must lie in [0, 1] and sum to 1 within 1e-9. Negative
    entries are rejected outright (no tolerance): a negative value is a
    modelling error, not rounding noise.
    """

    probs: tuple[float, ...]

    def __post_init__(self) -> None:
        probs = tuple(float(x) for x in self.probs)
        object.__setattr__(self, "probs", probs)
        if len(probs) < 1:
            raise ValueError("PMF needs at least one letter")
        for x in probs:
            if math.isnan(x) or x < 0.0:
                raise ValueError(f"PMF entry {x!r} is negative or NaN")
            if x > 1.0:
                raise ValueError(f"PMF entry {x!r} exceeds 1")
        total = math.fsum(probs)
        if abs(total - 1.0) > _SUM_TOL:
            raise ValueError(f"PMF entries sum to {total!r}, not 1")

    def __len__(self) -> int:
        return len(self.probs)

    def __iter__(self) -> Iterator[float]:
        return iter(self.probs)

    def __getitem__(self, i: int) -> float:
        return self.probs[i]

    @classmethod
    def uniform(cls, n: int) -> "Pmf":
        if n < 1:
            raise ValueError("uniform PMF needs n >= 1")
        return cls((1.0 / n,) * n)


def as_pmf(p: "Pmf | Sequence[float]") -> Pmf:
    """Coerce a sequence to a validated Pmf (no-op when already one)."""
    return p if isinstance(p, Pmf) else Pmf(tuple(p))


@dataclass(frozen=True)
class ClampPolicy:
    """Optional epsilon-floor for probabilities inside log denominators."""

    enabled: bool = False
    epsilon: float = 1e-12

    def __post_init__(self) -> None:
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError("clamp epsilon must lie in (0, 1)")

    def floor(self, q: float) -> float:
        return max(q, self.epsilon) if self.enabled else q


NO_CLAMP = ClampPolicy()


@dataclass(frozen=True)
class DivergenceSpec:
    """Selects a divergence measure plus its exponent and clamp policy.

    ``scale`` is a display-time multiplier (e.g. 0.3 for a scaled-down
    KL curve); it is never applied inside the measure itself.
    """

    kind: str
    k: float = 1.0
    clamp: ClampPolicy = NO_CLAMP
    scale: float = 1.0

    def __post_init__(self) -> None:
        if self.kind not in DIVERGENCE_KINDS:
            raise ValueError(f"unknown divergence kind {self.kind!r}")
        if not self.k > 0:
            raise ValueError("exponent k must be > 0")
        if not self.scale > 0:
            raise ValueError("scale must be > 0")


def _check_pair(p: Pmf, q: Pmf) -> None:
    if len(p) != len(q):
        raise ValueError(f"PMF lengths differ: {len(p)} vs {len(q)}")


def entropy(p: "Pmf | Sequence[float]") -> float:
    """Shannon entropy H(p) = -sum p_i log2 p_i, in [0, log2 n]."""
    p = as_pmf(p)
    # the trailing + 0.0 keeps degenerate PMFs from returning -0.0
    return -sum(x * math.log2(x) for x in p if x > 0.0) + 0.0


def max_entropy(n: int) -> float:
    """Entropy of the uniform PMF over n letters: log2 n."""
    if n < 1:
        raise ValueError("alphabet size must be >= 1")
    return math.log2(n)


def cross_entropy(
    p: "Pmf | Sequence[float]",
    q: "Pmf | Sequence[float]",
    clamp: ClampPolicy | None = None,
) -> float:
    """Cross entropy H(p, q) = -sum p_i log2 q_i.

    Returns +inf when some p_i > 0 meets q_i == 0 and clamping is off.
    """
    p, q = as_pmf(p), as_pmf(q)
    _check_pair(p, q)
    clamp = clamp if clamp is not None else NO_CLAMP
    total = 0.0
    for pi, qi in zip(p, q):
        if pi == 0.0:
            continue
        qi = clamp.floor(qi)
        if qi == 0.0:
            return math.inf
        total -= pi * math.log2(qi)
    return total


def kl_divergence(
    p: "Pmf | Sequence[float]",
    q: "Pmf | Sequence[float]",
    clamp: ClampPolicy | None = None,
) -> float:
    """KL divergence D_KL(p||q) = sum over p_i>0 of p_i log2(p_i/q_i).

    Non-negative and unbounded; same zero/clamp handling as
    cross_entropy.
    """
    p, q = as_pmf(p), as_pmf(q)
    _check_pair(p, q)
    clamp = clamp if clamp is not None else NO_CLAMP
    total = 0.0
    for pi, qi in zip(p, q):
        if pi == 0.0:
            continue
        qi = clamp.floor(qi)
        if qi == 0.0:
            return math.inf
        total += pi * math.log2(pi / qi)
    return total


def js_divergence(
    p: "Pmf | Sequence[float]", q: "Pmf | Sequence[float]"
) -> float:
    """Jensen-Shannon divergence, symmetric and bounded by [0, 1] in bits."""
    p, q = as_pmf(p), as_pmf(q)
    _check_pair(p, q)
    total = 0.0
    for pi, qi in zip(p, q):
        m = pi + qi
        if pi > 0.0:
            total += 0.5 * pi * math.log2(2.0 * pi / m)
        if qi > 0.0:
            total += 0.5 * qi * math.log2(2.0 * qi / m)
    return total


def d_new(p: "Pmf | Sequence[float]", q: "Pmf | Sequence[float]") -> float:
    """Bounded divergence sum p_i log2(|p_i - q_i| + 1), in [0, 1].

    Non-commutative; 0 iff p == q elementwise.
    """
    p, q = as_pmf(p), as_pmf(q)
    _check_pair(p, q)
    return sum(pi * math.log2(abs(pi - qi) + 1.0) for pi, qi in zip(p, q))


def d_new_g(
    p: "Pmf | Sequence[float]", q: "Pmf | Sequence[float]", k: float
) -> float:
    """Generalised bounded divergence sum p_i log2(|p_i - q_i|^k + 1).

    Reduces to d_new at k = 1; still bounded by [0, 1] for any k > 0.
    """
    p, q = as_pmf(p), as_pmf(q)
    _check_pair(p, q)
    if not k > 0:
        raise ValueError("exponent k must be > 0")
    return sum(pi * math.log2(abs(pi - qi) ** k + 1.0) for pi, qi in zip(p, q))


def d_new_gc(
    p: "Pmf | Sequence[float]", q: "Pmf | Sequence[float]", k: float
) -> float:
    """Commutative variant: 1/2 sum (p_i + q_i) log2(|p_i - q_i|^k + 1)."""
    p, q = as_pmf(p), as_pmf(q)
    _check_pair(p, q)
    if not k > 0:
        raise ValueError("exponent k must be > 0")
    return 0.5 * sum(
        (pi + qi) * math.log2(abs(pi - qi) ** k + 1.0) for pi, qi in zip(p, q)
    )


def minkowski(
    p: "Pmf | Sequence[float]", q: "Pmf | Sequence[float]", k: float
) -> float:
    """Minkowski distance (sum |p_i - q_i|^k)^(1/k).

    Factors out max|p_i - q_i| so that large exponents (k = 256) do not
    underflow to 0; returns 0 exactly when p == q.
    """
    p, q = as_pmf(p), as_pmf(q)
    _check_pair(p, q)
    if not k > 0:
        raise ValueError("exponent k must be > 0")
    deltas = [abs(pi - qi) for pi, qi in zip(p, q)]
    m = max(deltas)
    if m == 0.0:
        return 0.0
    return m * sum((d / m) ** k for d in deltas) ** (1.0 / k)


def divergence(
    p: "Pmf | Sequence[float]",
    q: "Pmf | Sequence[float]",
    spec: DivergenceSpec,
) -> float:
    """Evaluate the raw (unscaled) measure selected by ``spec``."""
    if spec.kind == "KL":
        return kl_divergence(p, q, spec.clamp)
    if spec.kind == "JS":
        return js_divergence(p, q)
    if spec.kind == "New":
        return d_new(p, q)
    if spec.kind == "NewG":
        return d_new_g(p, q, spec.k)
    if spec.kind == "NewGC":
        return d_new_gc(p, q, spec.k)
    return minkowski(p, q, spec.k)


def element(
    kind: str,
    p_i: float,
    q_i: float,
    clamp: ClampPolicy | None = None,
) -> float:
    """Single-letter summand of a divergence, for per-letter comparisons.

    eNewG and eNewGC fix the exponent at k = 2. eDKL may be negative
    (when q_i > p_i) and is +inf at q_i = 0 unless clamped.
    """
    if kind not in ELEMENT_KINDS:
        raise ValueError(f"unknown element kind {kind!r}")
    if not (0.0 <= p_i <= 1.0 and 0.0 <= q_i <= 1.0):
        raise ValueError("p_i and q_i must lie in [0, 1]")
    clamp = clamp if clamp is not None else NO_CLAMP
    delta = abs(p_i - q_i)
    if kind == "eDKL":
        if p_i == 0.0:
            return 0.0
        q_i = clamp.floor(q_i)
        if q_i == 0.0:
            return math.inf
        return p_i * math.log2(p_i / q_i)
    if kind == "eNew":
        return p_i * math.log2(delta + 1.0)
    if kind == "eNewG":
        return p_i * math.log2(delta**2 + 1.0)
    if kind == "eNewC":
        return 0.5 * (p_i + q_i) * math.log2(delta + 1.0)
    if kind == "eNewGC":
        return 0.5 * (p_i + q_i) * math.log2(delta**2 + 1.0)
    # eDJS
    total = 0.0
    m = p_i + q_i
    if p_i > 0.0:
        total += 0.5 * p_i * math.log2(2.0 * p_i / m)
    if q_i > 0.0:
        total += 0.5 * q_i * math.log2(2.0 * q_i / m)
    return total
