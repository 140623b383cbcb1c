"""Divergence-comparison sweeps emitted as CSV grids.

Three standard grids: a swapped binary pair P=(1-e, e) vs Q=(e, 1-e)
over a mid-range of e (figure1), the same pair on a log-spaced grid
near zero (figure2), and the per-letter element functions at p=0.5 with
q running over [0, 1] (figure3, abscissa reported as delta = q - 0.5).

Unbounded values are written as the literal token ``inf``; truncation
for display is the plotting side's job.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import BinaryIO, Sequence

from .measures import (
    ELEMENT_KINDS,
    DivergenceSpec,
    Pmf,
    divergence,
    element,
)

__all__ = [
    "SweepSpec",
    "SweepRow",
    "default_spec",
    "sweep_figure1",
    "sweep_figure2",
    "sweep_figure3",
    "run_sweep",
    "column_names",
    "write_csv",
]

FIGURE_KINDS = ("figure1", "figure2", "figure3")

# the comparison set, in legend order: KL, scaled KL, the bounded
# divergences, then Minkowski exponents
MINKOWSKI_KS = (0.5, 1.0, 1.6, 2.0, 4.0, 256.0)


@dataclass(frozen=True)
class SweepSpec:
    kind: str
    grid: tuple[float, ...]
    measures: tuple["DivergenceSpec | str", ...]
    kl_scale: float = 0.3

    def __post_init__(self) -> None:
        if self.kind not in FIGURE_KINDS:
            raise ValueError(f"unknown sweep kind {self.kind!r}")
        grid = tuple(float(x) for x in self.grid)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "measures", tuple(self.measures))
        if not grid:
            raise ValueError("sweep grid is empty")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError("sweep grid must be strictly increasing")
        lo, hi = grid[0], grid[-1]
        if self.kind == "figure1" and not (0.0 < lo and hi < 1.0):
            raise ValueError("figure1 grid must lie inside (0, 1)")
        if self.kind == "figure2" and not (0.0 < lo and hi < 0.5):
            raise ValueError("figure2 grid must lie inside (0, 0.5)")
        if self.kind == "figure3" and not (0.0 <= lo and hi <= 1.0):
            raise ValueError("figure3 grid must lie inside [0, 1]")
        if not self.kl_scale > 0:
            raise ValueError("kl_scale must be > 0")


@dataclass(frozen=True)
class SweepRow:
    abscissa: float
    values: tuple[float, ...]


def _default_divergences(kl_scale: float) -> tuple[DivergenceSpec, ...]:
    specs = [
        DivergenceSpec("KL"),
        DivergenceSpec("KL", scale=kl_scale),
        DivergenceSpec("New"),
        DivergenceSpec("NewGC", k=2.0),
        DivergenceSpec("JS"),
    ]
    specs.extend(DivergenceSpec("Minkowski", k=k) for k in MINKOWSKI_KS)
    return tuple(specs)


def default_spec(kind: str, kl_scale: float = 0.3) -> SweepSpec:
    """The standard grid and measure set for one of the three figures.

    figure1: e = 0.05 to 0.70, step 0.01 (66 points). figure2: 100
    log-spaced points on [1e-10, 0.1]. figure3: q = 0.00 to 1.00, step
    0.01 (101 points), evaluated through the element functions.
    """
    if kind == "figure1":
        grid = tuple((5 + i) / 100 for i in range(66))
        return SweepSpec(kind, grid, _default_divergences(kl_scale), kl_scale)
    if kind == "figure2":
        grid = tuple(10.0 ** (-10.0 + 9.0 * i / 99.0) for i in range(100))
        return SweepSpec(kind, grid, _default_divergences(kl_scale), kl_scale)
    if kind == "figure3":
        grid = tuple(i / 100 for i in range(101))
        return SweepSpec(kind, grid, ELEMENT_KINDS, kl_scale)
    raise ValueError(f"unknown sweep kind {kind!r}")


def _measure_name(m: "DivergenceSpec | str") -> str:
    if isinstance(m, str):
        return m
    prefix = "" if m.scale == 1.0 else f"{m.scale:g}"
    if m.kind == "KL":
        return prefix + "DKL"
    if m.kind == "JS":
        return prefix + "DJS"
    if m.kind == "Minkowski":
        return prefix + f"Mk{m.k:g}"
    return prefix + m.kind


def column_names(spec: SweepSpec) -> tuple[str, ...]:
    """Header row for a sweep: abscissa name, then one name per measure."""
    abscissa = "delta" if spec.kind == "figure3" else "epsilon"
    return (abscissa,) + tuple(_measure_name(m) for m in spec.measures)


def _binary_pair_rows(spec: SweepSpec) -> list[SweepRow]:
    for m in spec.measures:
        if not isinstance(m, DivergenceSpec):
            raise ValueError(
                f"{spec.kind} measures must be DivergenceSpec entries, got {m!r}"
            )
    rows = []
    for eps in spec.grid:
        p = Pmf((1.0 - eps, eps))
        q = Pmf((eps, 1.0 - eps))
        values = tuple(m.scale * divergence(p, q, m) for m in spec.measures)
        rows.append(SweepRow(eps, values))
    return rows


def sweep_figure1(spec: SweepSpec) -> list[SweepRow]:
    """Swapped binary pair over the mid-range grid; P=Q at e=0.5."""
    if spec.kind != "figure1":
        raise ValueError("spec kind must be figure1")
    return _binary_pair_rows(spec)


def sweep_figure2(spec: SweepSpec) -> list[SweepRow]:
    """Same measure set as figure1 on the near-zero grid."""
    if spec.kind != "figure2":
        raise ValueError("spec kind must be figure2")
    return _binary_pair_rows(spec)


def sweep_figure3(spec: SweepSpec) -> list[SweepRow]:
    """Per-letter elements at p=0.5, q on the grid; abscissa q - 0.5."""
    if spec.kind != "figure3":
        raise ValueError("spec kind must be figure3")
    for m in spec.measures:
        if m not in ELEMENT_KINDS:
            raise ValueError(
                f"figure3 measures must be element kinds, got {m!r}"
            )
    rows = []
    for q in spec.grid:
        values = tuple(element(kind, 0.5, q) for kind in spec.measures)
        rows.append(SweepRow(q - 0.5, values))
    return rows


_SWEEPS = {
    "figure1": sweep_figure1,
    "figure2": sweep_figure2,
    "figure3": sweep_figure3,
}


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    return _SWEEPS[spec.kind](spec)


def _render(v: float) -> str:
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return format(v, ".9g")


def write_csv(
    rows: Sequence[SweepRow],
    column_names: Sequence[str],
    sink: BinaryIO,
) -> int:
    """Write header plus one line per row; returns the row count.

    UTF-8, comma-separated, LF line endings, floats at 9 significant
    digits, infinities as the token ``inf``. Output is byte-identical
    for identical input.
    """
    n_cols = len(column_names)
    sink.write((",".join(column_names) + "\n").encode("utf-8"))
    for row in rows:
        if len(row.values) + 1 != n_cols:
            raise ValueError(
                f"row has {len(row.values)} values for {n_cols - 1} columns"
            )
        fields = [_render(row.abscissa)]
        fields.extend(_render(v) for v in row.values)
        sink.write((",".join(fields) + "\n").encode("utf-8"))
    return len(rows)
