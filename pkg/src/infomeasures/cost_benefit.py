"""Cost-benefit ratio of an information-processing step.

Benefit = alphabet compression - potential distortion, where the
compression term is the entropy drop across the step and the distortion
term measures how badly the input can be reconstructed from the output.
The distortion term is either the raw (unbounded) KL divergence or a
bounded divergence rescaled by the maximum entropy of the input
alphabet, which keeps the benefit within +/- log2(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .measures import (
    ClampPolicy,
    DivergenceSpec,
    Pmf,
    as_pmf,
    divergence,
    entropy,
    kl_divergence,
    max_entropy,
)

__all__ = [
    "CostBenefitInput",
    "BenefitBreakdown",
    "alphabet_compression",
    "potential_distortion_kl",
    "potential_distortion_new",
    "benefit_and_cbr",
    "blend",
]

_BOUNDED_KINDS = ("New", "NewG", "NewGC", "JS")


@dataclass(frozen=True)
class CostBenefitInput:
    """Operands of one processing step.

    ``reconstructed_pmf`` lives on the same alphabet as ``input_pmf``;
    ``output_pmf`` may have a different size. ``cost`` is an opaque
    positive scalar in whatever unit the caller tracks.
    """

    input_pmf: Pmf
    output_pmf: Pmf
    reconstructed_pmf: Pmf
    cost: float
    measure: DivergenceSpec

    def __post_init__(self) -> None:
        object.__setattr__(self, "input_pmf", as_pmf(self.input_pmf))
        object.__setattr__(self, "output_pmf", as_pmf(self.output_pmf))
        object.__setattr__(
            self, "reconstructed_pmf", as_pmf(self.reconstructed_pmf)
        )
        if len(self.reconstructed_pmf) != len(self.input_pmf):
            raise ValueError(
                "reconstructed PMF must match the input alphabet size"
            )
        if not self.cost > 0:
            raise ValueError("cost must be > 0")


@dataclass(frozen=True)
class BenefitBreakdown:
    alphabet_compression: float
    potential_distortion: float
    benefit: float
    cbr: float


def alphabet_compression(
    input_pmf: "Pmf | Sequence[float]", output_pmf: "Pmf | Sequence[float]"
) -> float:
    """Entropy drop H(input) - H(output); may be negative."""
    return entropy(as_pmf(input_pmf)) - entropy(as_pmf(output_pmf))


def potential_distortion_kl(
    reconstructed: "Pmf | Sequence[float]",
    input_pmf: "Pmf | Sequence[float]",
    clamp: ClampPolicy | None = None,
) -> float:
    """Unbounded distortion D_KL(reconstructed || input)."""
    return kl_divergence(reconstructed, input_pmf, clamp)


def potential_distortion_new(
    reconstructed: "Pmf | Sequence[float]",
    input_pmf: "Pmf | Sequence[float]",
    spec: DivergenceSpec,
) -> float:
    """Bounded distortion: log2(n) * D(reconstructed || input).

    The bounded divergences live in [0, 1], so rescaling by the maximum
    entropy of the input alphabet puts the distortion on the same bit
    scale as the compression term, capped at log2(n).
    """
    if spec.kind not in _BOUNDED_KINDS:
        raise ValueError(
            f"distortion kind must be one of {_BOUNDED_KINDS}, got {spec.kind!r}"
        )
    reconstructed, input_pmf = as_pmf(reconstructed), as_pmf(input_pmf)
    if len(reconstructed) != len(input_pmf):
        raise ValueError("reconstructed and input PMFs must have equal length")
    return max_entropy(len(input_pmf)) * divergence(
        reconstructed, input_pmf, spec
    )


def benefit_and_cbr(inp: CostBenefitInput) -> BenefitBreakdown:
    """Evaluate one step: compression, distortion, benefit, benefit/cost.

    With a KL measure the distortion is the raw divergence and the
    benefit may be -inf; with a bounded measure the distortion is
    rescaled by log2(n) of the input alphabet.
    """
    ac = alphabet_compression(inp.input_pmf, inp.output_pmf)
    if inp.measure.kind == "KL":
        pd = potential_distortion_kl(
            inp.reconstructed_pmf, inp.input_pmf, inp.measure.clamp
        )
    else:
        pd = potential_distortion_new(
            inp.reconstructed_pmf, inp.input_pmf, inp.measure
        )
    benefit = ac - pd
    cbr = benefit / inp.cost
    return BenefitBreakdown(
        alphabet_compression=ac,
        potential_distortion=pd,
        benefit=benefit,
        cbr=cbr,
    )


def blend(
    a: "Pmf | Sequence[float]", b: "Pmf | Sequence[float]", w: float
) -> Pmf:
    """Convex mixture w*a + (1-w)*b, e.g. half-informed audiences at w=0.5."""
    a, b = as_pmf(a), as_pmf(b)
    if len(a) != len(b):
        raise ValueError("blend operands must have equal length")
    if not 0.0 <= w <= 1.0:
        raise ValueError("blend weight must lie in [0, 1]")
    # clamp float noise so the result stays inside the simplex
    mixed = tuple(
        min(1.0, max(0.0, w * ai + (1.0 - w) * bi)) for ai, bi in zip(a, b)
    )
    return Pmf(mixed)
