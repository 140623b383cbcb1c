"""Prefix codes and the operational n-1 bound on coding inefficiency.

A near-dyadic PMF admits an optimal prefix code whose longest codeword
has n-1 bits, and no letter of an n-letter alphabet ever needs a longer
codeword than that. The realized average codeword length of any string
is therefore capped at n-1 bits/letter; this module constructs the PMF
and the code, runs Huffman coding as an optimality oracle, and provides
a seeded Monte-Carlo transmission to witness the cap empirically.

Note the analytic cross entropy -sum p_i log2 q_i is NOT capped: it
diverges as the smallest q_i goes to 0 even though every realized
codeword stays within n-1 bits. Reports carry both quantities.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass
from typing import Sequence

from .measures import Pmf, as_pmf, cross_entropy, entropy

__all__ = [
    "CodeBook",
    "CodingReport",
    "section2_pmf",
    "unary_code",
    "huffman",
    "avg_code_length",
    "ce_upper_bound",
    "kl_upper_bound",
    "uniform_q_bound",
    "simulate_transmission",
    "worst_case_report",
]

_KRAFT_TOL = 1e-12


@dataclass(frozen=True)
class CodeBook:
    """Prefix-free binary code, one codeword per letter."""

    codewords: tuple[str, ...]

    def __post_init__(self) -> None:
        words = tuple(self.codewords)
        object.__setattr__(self, "codewords", words)
        if not words:
            raise ValueError("codebook is empty")
        for w in words:
            if not w or set(w) - {"0", "1"}:
                raise ValueError(f"codeword {w!r} is not a nonempty bit string")
        if self.kraft_sum() > 1.0 + _KRAFT_TOL:
            raise ValueError("codeword lengths violate the Kraft inequality")
        # a prefix pair is always adjacent in sorted order
        ordered = sorted(words)
        for a, b in zip(ordered, ordered[1:]):
            if b.startswith(a):
                raise ValueError(f"codeword {a!r} is a prefix of {b!r}")

    def __len__(self) -> int:
        return len(self.codewords)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.codewords)

    @property
    def max_length(self) -> int:
        return max(self.lengths)

    def kraft_sum(self) -> float:
        return sum(2.0 ** -len(w) for w in self.codewords)


@dataclass(frozen=True)
class CodingReport:
    """Realized vs analytic coding cost, against the n-1 cap."""

    avg_length: float
    max_length: int
    entropy_of_p: float
    analytic_cross_entropy: float
    bound: int

    def __post_init__(self) -> None:
        if self.avg_length > self.max_length + 1e-9:
            raise ValueError("average codeword length exceeds the maximum")


def section2_pmf(n: int, epsilon: float) -> Pmf:
    """Near-dyadic PMF whose optimal code has lengths 1, 2, ..., n-1, n-1.

    q_n = epsilon, q_i = (1-epsilon) * 2^-i for 2 <= i <= n-1, and the
    first letter absorbs the remainder (1-epsilon) * (2^-1 + 2^-(n-1)),
    so the total telescopes to 1 exactly. Requires
    0 < epsilon < 2^-(n-1).
    """
    if n < 2:
        raise ValueError("alphabet size must be >= 2")
    if not 0.0 < epsilon < 2.0 ** -(n - 1):
        raise ValueError(
            f"epsilon must lie in (0, 2^-(n-1)) = (0, {2.0 ** -(n - 1)})"
        )
    q = [0.0] * n
    q[0] = (1.0 - epsilon) * (0.5 + 2.0 ** -(n - 1))
    for i in range(2, n):
        q[i - 1] = (1.0 - epsilon) * 2.0**-i
    q[n - 1] = epsilon
    return Pmf(tuple(q))


def unary_code(n: int) -> CodeBook:
    """The code 0, 10, 110, ..., 1..10, 1..1 (last two words n-1 bits).

    Kraft sum is exactly 1 and the longest codeword has n-1 bits.
    """
    if n < 2:
        raise ValueError("alphabet size must be >= 2")
    words = ["1" * i + "0" for i in range(n - 1)]
    words.append("1" * (n - 1))
    return CodeBook(tuple(words))


def huffman(q: "Pmf | Sequence[float]") -> CodeBook:
    """Optimal prefix code for q (minimal average codeword length).

    Ties during merging are broken toward the node containing the
    smallest original letter index, so the codebook is deterministic;
    only length multisets are meaningful against theory.
    """
    q = as_pmf(q)
    n = len(q)
    if n < 2:
        raise ValueError("alphabet size must be >= 2")
    # heap entries: (probability, smallest letter index in node, tree)
    # where tree is a letter index or a (left, right) pair
    heap: list[tuple[float, int, object]] = [
        (prob, i, i) for i, prob in enumerate(q)
    ]
    heapq.heapify(heap)
    while len(heap) > 1:
        p1, i1, t1 = heapq.heappop(heap)
        p2, i2, t2 = heapq.heappop(heap)
        heapq.heappush(heap, (p1 + p2, min(i1, i2), (t1, t2)))
    words = [""] * n
    stack: list[tuple[object, str]] = [(heap[0][2], "")]
    while stack:
        tree, prefix = stack.pop()
        if isinstance(tree, int):
            words[tree] = prefix
        else:
            left, right = tree
            stack.append((left, prefix + "0"))
            stack.append((right, prefix + "1"))
    return CodeBook(tuple(words))


def avg_code_length(
    p: "Pmf | Sequence[float]", code: CodeBook
) -> float:
    """Expected codeword length sum p_i * len_i under letter PMF p."""
    p = as_pmf(p)
    if len(p) != len(code):
        raise ValueError("PMF and codebook sizes differ")
    return sum(pi * len(w) for pi, w in zip(p, code.codewords))


def ce_upper_bound(n: int) -> int:
    """Cap on realized bits/letter for any prefix code over n letters: n-1."""
    if n < 2:
        raise ValueError("alphabet size must be >= 2")
    return n - 1


def kl_upper_bound(n: int, min_entropy: float = 0.0) -> float:
    """(n-1) - min_entropy, the derived cap on the KL divergence.

    ``min_entropy`` is the smallest entropy admissible for the true PMF;
    with all PMFs admissible it is 0 and the cap equals n-1.
    """
    if n < 2:
        raise ValueError("alphabet size must be >= 2")
    if not 0.0 <= min_entropy <= math.log2(n):
        raise ValueError("min_entropy must lie in [0, log2 n]")
    return (n - 1) - min_entropy


def uniform_q_bound(n: int) -> tuple[float, int]:
    """Inefficiency cap when coding against a uniform PMF.

    Returns (log2 n, ceil(log2 n)): the analytic cap and the realized
    whole-bit codeword length. Much lower than n-1 for large n.
    """
    if n < 2:
        raise ValueError("alphabet size must be >= 2")
    return math.log2(n), (n - 1).bit_length()


def simulate_transmission(
    p: "Pmf | Sequence[float]",
    code: CodeBook,
    num_letters: int,
    seed: int,
) -> float:
    """Empirical bits/letter for num_letters i.i.d. draws from p.

    Deterministic per seed; converges to avg_code_length(p, code).
    """
    p = as_pmf(p)
    if len(p) != len(code):
        raise ValueError("PMF and codebook sizes differ")
    if num_letters < 1:
        raise ValueError("num_letters must be >= 1")
    rng = random.Random(seed)
    lengths = [len(w) for w in code.codewords]
    total_bits = sum(rng.choices(lengths, weights=p.probs, k=num_letters))
    return total_bits / num_letters


def worst_case_report(n: int, epsilon: float | None = None) -> CodingReport:
    """Report for the adversarial string against the near-dyadic code.

    Every transmitted letter is the one with the longest codeword, so
    the realized average hits the n-1 cap exactly while the string
    itself carries zero entropy. The analytic cross entropy -log2(eps)
    exceeds the cap, which is precisely the gap between realized and
    analytic inefficiency.
    """
    if epsilon is None:
        epsilon = 2.0**-n
    q = section2_pmf(n, epsilon)
    code = huffman(q)
    p = Pmf((0.0,) * (n - 1) + (1.0,))
    return CodingReport(
        avg_length=avg_code_length(p, code),
        max_length=code.max_length,
        entropy_of_p=entropy(p),
        analytic_cross_entropy=cross_entropy(p, q),
        bound=ce_upper_bound(n),
    )
