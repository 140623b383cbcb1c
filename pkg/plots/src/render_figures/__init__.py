"""Render the three divergence-comparison figures from sweep CSV files.

Consumes the CSV format written by ``im sweep`` (header row, comma
separators, ``inf`` tokens for infinities) and draws one line per
measure column. Values above the truncation ceiling (including ``inf``)
are drawn at the ceiling with a marker; the near-zero figure uses a
logarithmic abscissa. Rendering is deterministic: fixed style, no
timestamps.

Usage: ``render_figures <figure_kind> <csv_path> <out_path>
[--ymax <v>] [--svg <path>]``
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "render-figures"

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

__all__ = ["PlotJob", "RenderError", "read_csv", "render", "main", "run"]

FIGURE_KINDS = ("figure1", "figure2", "figure3")
_ABSCISSA = {"figure1": "epsilon", "figure2": "epsilon", "figure3": "delta"}
_ELEMENT_COLUMNS = {"eDKL", "eNew", "eNewG", "eNewC", "eNewGC", "eDJS"}


class RenderError(ValueError):
    """CSV or job parameters unusable for rendering."""


@dataclass(frozen=True)
class PlotJob:
    csv_path: str
    figure_kind: str
    out_path: str
    ymax: float = 5.0
    svg_path: str | None = None

    def __post_init__(self) -> None:
        if self.figure_kind not in FIGURE_KINDS:
            raise RenderError(f"unknown figure kind {self.figure_kind!r}")
        if not self.ymax > 0:
            raise RenderError("ymax must be > 0")


def read_csv(path: str) -> tuple[list[str], list[list[float]]]:
    """Parse header and float rows; ``inf`` tokens become float('inf')."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        table = [row for row in reader if row]
    if not table:
        raise RenderError(f"{path}: empty file")
    header = table[0]
    if len(header) < 2:
        raise RenderError(f"{path}: need an abscissa and at least one column")
    rows = []
    for lineno, row in enumerate(table[1:], start=2):
        if len(row) != len(header):
            raise RenderError(
                f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}"
            )
        try:
            rows.append([float(tok) for tok in row])
        except ValueError as exc:
            raise RenderError(f"{path}:{lineno}: {exc}") from exc
    if not rows:
        raise RenderError(f"{path}: no data rows")
    return header, rows


def _check_header(job: PlotJob, header: list[str]) -> None:
    expected = _ABSCISSA[job.figure_kind]
    if header[0] != expected:
        raise RenderError(
            f"{job.csv_path}: abscissa column is {header[0]!r}, "
            f"{job.figure_kind} expects {expected!r}"
        )
    if job.figure_kind == "figure3" and set(header[1:]) != _ELEMENT_COLUMNS:
        raise RenderError(
            f"{job.csv_path}: figure3 expects columns {sorted(_ELEMENT_COLUMNS)}"
        )


def render(job: PlotJob):
    """Draw the figure, write the image file(s), return the Figure."""
    header, rows = read_csv(job.csv_path)
    _check_header(job, header)
    x = [r[0] for r in rows]
    fig, ax = plt.subplots(figsize=(8.0, 5.0))
    for i, name in enumerate(header[1:], start=1):
        raw = [r[i] for r in rows]
        clipped = [min(v, job.ymax) for v in raw]
        (line,) = ax.plot(x, clipped, label=name, linewidth=1.5)
        marks = [
            (xv, job.ymax)
            for xv, v in zip(x, raw)
            if math.isinf(v) or v > job.ymax
        ]
        if marks:
            ax.plot(
                [m[0] for m in marks],
                [m[1] for m in marks],
                linestyle="none",
                marker="^",
                markersize=5,
                color=line.get_color(),
                label="_nolegend_",
            )
    if job.figure_kind == "figure2":
        ax.set_xscale("log")
    ax.set_xlabel(header[0])
    ax.set_ylabel("bits")
    ax.set_ylim(top=job.ymax * 1.05)
    ax.grid(True, linewidth=0.3, alpha=0.5)
    ax.legend(loc="upper right", fontsize=8, ncol=2)
    fig.tight_layout()
    fig.savefig(job.out_path, dpi=150)
    if job.svg_path:
        fig.savefig(job.svg_path)
    return fig


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="render_figures",
        description="Render a divergence-comparison figure from a sweep CSV.",
    )
    parser.add_argument("figure_kind", choices=FIGURE_KINDS)
    parser.add_argument("csv_path")
    parser.add_argument("out_path")
    parser.add_argument(
        "--ymax",
        type=float,
        default=5.0,
        help="truncation ceiling for unbounded columns (default 5)",
    )
    parser.add_argument(
        "--svg", default=None, metavar="PATH", help="also write an SVG"
    )
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        job = PlotJob(
            csv_path=args.csv_path,
            figure_kind=args.figure_kind,
            out_path=args.out_path,
            ymax=args.ymax,
            svg_path=args.svg,
        )
        fig = render(job)
        plt.close(fig)
    except RenderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def run() -> None:
    sys.exit(main())
