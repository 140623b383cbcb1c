"""The ``im`` command line tool.

Subcommands: ``compute`` (scalar measures), ``cbr`` (cost-benefit
breakdown from a JSON object), ``sweep`` (figure grids as CSV), and
``coding`` (prefix-code bound checks and seeded transmission runs).

Exit codes: 0 success, 2 validation error, 1 I/O error. Floats are
printed with 9 decimal digits; infinities as the token ``inf``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any

from . import coding, cost_benefit, sweep
from .measures import (
    DIVERGENCE_KINDS,
    ClampPolicy,
    DivergenceSpec,
    Pmf,
    cross_entropy,
    d_new,
    d_new_g,
    d_new_gc,
    entropy,
    js_divergence,
    kl_divergence,
    minkowski,
)

_CANONICAL_KIND = {k.lower(): k for k in DIVERGENCE_KINDS}


def _fmt(v: float) -> str:
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.9f}"


def _json_object(pairs: list[tuple[str, str]]) -> str:
    return "{" + ", ".join(f'"{k}": {v}' for k, v in pairs) + "}"


def _parse_pmf(text: str) -> Pmf:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"not valid JSON: {text!r} ({exc})") from exc
    return _pmf_from_json(data)


def _pmf_from_json(data: Any) -> Pmf:
    if isinstance(data, dict):
        if "probs" not in data:
            raise ValueError("PMF object must have a 'probs' array")
        data = data["probs"]
    if not isinstance(data, list) or not all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in data
    ):
        raise ValueError("PMF must be a JSON array of numbers")
    return Pmf(tuple(data))


def _clamp_from_value(value: Any) -> ClampPolicy | None:
    if value is None or value is False:
        return None
    if value is True:
        return ClampPolicy(enabled=True)
    if isinstance(value, (int, float)):
        return ClampPolicy(enabled=True, epsilon=float(value))
    raise ValueError("clamp must be a number (epsilon) or true/false")


def _cmd_compute(args: argparse.Namespace) -> None:
    p = _parse_pmf(args.p)
    clamp = _clamp_from_value(args.clamp)
    if args.measure == "entropy":
        if args.q is not None:
            raise ValueError("measure 'entropy' takes no --q")
        print(_fmt(entropy(p)))
        return
    if args.q is None:
        raise ValueError(f"measure {args.measure!r} requires --q")
    q = _parse_pmf(args.q)
    if args.measure == "cross-entropy":
        value = cross_entropy(p, q, clamp)
    elif args.measure == "kl":
        value = kl_divergence(p, q, clamp)
    elif args.measure == "js":
        value = js_divergence(p, q)
    elif args.measure == "new":
        value = d_new(p, q)
    elif args.measure == "newg":
        value = d_new_g(p, q, args.k)
    elif args.measure == "newgc":
        value = d_new_gc(p, q, args.k)
    else:
        value = minkowski(p, q, args.k)
    print(_fmt(value))


def _measure_from_json(data: Any) -> DivergenceSpec:
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError("'measure' must be an object with a 'kind'")
    kind = _CANONICAL_KIND.get(str(data["kind"]).lower())
    if kind is None:
        raise ValueError(f"unknown measure kind {data['kind']!r}")
    k = data.get("k", 1.0)
    if isinstance(k, bool) or not isinstance(k, (int, float)):
        raise ValueError("'k' must be a number")
    clamp = _clamp_from_value(data.get("clamp"))
    return DivergenceSpec(
        kind, k=float(k), clamp=clamp if clamp is not None else ClampPolicy()
    )


def _cmd_cbr(args: argparse.Namespace) -> None:
    if args.infile == "-":
        text = sys.stdin.read()
    else:
        with open(args.infile, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"input is not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise ValueError("input must be a JSON object")
    for key in ("input_pmf", "output_pmf", "reconstructed_pmf", "cost", "measure"):
        if key not in data:
            raise ValueError(f"missing field {key!r}")
    cost = data["cost"]
    if isinstance(cost, bool) or not isinstance(cost, (int, float)):
        raise ValueError("'cost' must be a number")
    inp = cost_benefit.CostBenefitInput(
        input_pmf=_pmf_from_json(data["input_pmf"]),
        output_pmf=_pmf_from_json(data["output_pmf"]),
        reconstructed_pmf=_pmf_from_json(data["reconstructed_pmf"]),
        cost=float(cost),
        measure=_measure_from_json(data["measure"]),
    )
    result = cost_benefit.benefit_and_cbr(inp)
    print(
        _json_object(
            [
                ("alphabet_compression", _fmt(result.alphabet_compression)),
                ("potential_distortion", _fmt(result.potential_distortion)),
                ("benefit", _fmt(result.benefit)),
                ("cbr", _fmt(result.cbr)),
            ]
        )
    )


def _cmd_sweep(args: argparse.Namespace) -> None:
    spec = sweep.default_spec(args.kind)
    rows = sweep.run_sweep(spec)
    names = sweep.column_names(spec)
    if args.out == "-":
        count = sweep.write_csv(rows, names, sys.stdout.buffer)
        sys.stdout.buffer.flush()
    else:
        with open(args.out, "wb") as fh:
            count = sweep.write_csv(rows, names, fh)
    print(f"{count} rows written", file=sys.stderr)


def _cmd_coding(args: argparse.Namespace) -> None:
    n = args.n
    if args.action == "section2":
        epsilon = args.epsilon if args.epsilon is not None else 2.0**-n
        q = coding.section2_pmf(n, epsilon)
        code = coding.unary_code(n)
        pmf_token = "[" + ", ".join(_fmt(x) for x in q) + "]"
        words_token = "[" + ", ".join(f'"{w}"' for w in code.codewords) + "]"
        print(_json_object([("pmf", pmf_token), ("codewords", words_token)]))
    elif args.action == "verify-bound":
        report = coding.worst_case_report(n, args.epsilon)
        print(
            _json_object(
                [
                    ("avg_length", _fmt(report.avg_length)),
                    ("max_length", str(report.max_length)),
                    ("entropy_of_p", _fmt(report.entropy_of_p)),
                    (
                        "analytic_cross_entropy",
                        _fmt(report.analytic_cross_entropy),
                    ),
                    ("bound", str(report.bound)),
                ]
            )
        )
    else:
        bits = coding.simulate_transmission(
            Pmf.uniform(n), coding.unary_code(n), args.trials, args.seed
        )
        print(
            _json_object(
                [
                    ("n", str(n)),
                    ("trials", str(args.trials)),
                    ("seed", str(args.seed)),
                    ("bits_per_letter", _fmt(bits)),
                ]
            )
        )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="im",
        description="Bounded divergence measures, cost-benefit analysis, "
        "prefix-coding bounds, and figure sweeps.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_compute = sub.add_parser(
        "compute", help="evaluate a scalar measure on one or two PMFs"
    )
    p_compute.add_argument(
        "--measure",
        required=True,
        choices=[
            "kl",
            "js",
            "new",
            "newg",
            "newgc",
            "minkowski",
            "entropy",
            "cross-entropy",
        ],
    )
    p_compute.add_argument("--p", required=True, help="PMF as a JSON array")
    p_compute.add_argument("--q", help="PMF as a JSON array")
    p_compute.add_argument(
        "--k", type=float, default=1.0, help="exponent for newg/newgc/minkowski"
    )
    p_compute.add_argument(
        "--clamp",
        type=float,
        default=None,
        metavar="EPSILON",
        help="floor log denominators at EPSILON instead of returning inf",
    )
    p_compute.set_defaults(handler=_cmd_compute)

    p_cbr = sub.add_parser(
        "cbr", help="cost-benefit breakdown from a JSON object"
    )
    p_cbr.add_argument(
        "--in",
        dest="infile",
        default="-",
        metavar="PATH",
        help="input JSON path, '-' for stdin (default)",
    )
    p_cbr.set_defaults(handler=_cmd_cbr)

    p_sweep = sub.add_parser("sweep", help="write a figure grid as CSV")
    p_sweep.add_argument("kind", choices=["figure1", "figure2", "figure3"])
    p_sweep.add_argument(
        "--out", default="-", metavar="PATH", help="output path, '-' for stdout"
    )
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_coding = sub.add_parser(
        "coding", help="prefix-code constructions and bound checks"
    )
    p_coding.add_argument(
        "action", choices=["section2", "verify-bound", "simulate"]
    )
    p_coding.add_argument("--n", type=int, required=True)
    p_coding.add_argument("--epsilon", type=float, default=None)
    p_coding.add_argument("--trials", type=int, default=1_000_000)
    p_coding.add_argument("--seed", type=int, default=0)
    p_coding.set_defaults(handler=_cmd_coding)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        args.handler(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def run() -> None:
    sys.exit(main())
