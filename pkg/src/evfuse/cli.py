"""Command-line interface: `fuse`, `curve`, and `compare` subcommands.

Exit codes: 0 success, 2 input/validation error, 3 total conflict.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .confidence import CurveParams, DEFAULT_GRID_SIZE
from .errors import TotalConflict
from .evidence import Bpa, Frame
from .pipeline import (
    STRATEGY_CLASSICAL,
    STRATEGY_MURPHY,
    STRATEGY_RELIABILITY,
    FusionResult,
    StrategyOutcome,
    compare_strategies,
    fuse,
)
from .scenario import load_scenario, render_curve_export, subset_string

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_TOTAL_CONFLICT = 3

_CLI_STRATEGIES = {
    "classical": STRATEGY_CLASSICAL,
    "murphy": STRATEGY_MURPHY,
    "reliability": STRATEGY_RELIABILITY,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evfuse",
        description="Evidence fusion with range-derived sensor reliabilities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fuse = sub.add_parser("fuse", help="fuse a scenario with one strategy")
    p_fuse.add_argument("--scenario", required=True, help="path to a scenario JSON file")
    p_fuse.add_argument("--strategy", required=True, choices=sorted(_CLI_STRATEGIES))
    p_fuse.add_argument("--output", choices=("table", "json"), default="table")

    p_curve = sub.add_parser("curve", help="export a confidence curve as CSV")
    p_curve.add_argument("--c", type=float, required=True, help="scale factor")
    p_curve.add_argument("--L", type=float, required=True, dest="big_l", help="sensitivity level")
    p_curve.add_argument("--gamma", type=float, default=0.0, help="well strength (default 0)")
    p_curve.add_argument("--xr", type=float, required=True, help="maximal reconnaissance distance")
    p_curve.add_argument("--points", type=int, default=DEFAULT_GRID_SIZE)
    p_curve.add_argument("--dirichlet", action="store_true",
                         help="weight the second-kind term so the amplitude vanishes at xr")
    p_curve.add_argument("--out", default=None, help="write to this path instead of stdout")

    p_cmp = sub.add_parser("compare", help="run all strategies side by side")
    p_cmp.add_argument("--scenario", required=True, help="path to a scenario JSON file")
    p_cmp.add_argument("--output", choices=("table", "json"), default="table")
    return parser


def _mass_map(frame: Frame, bpa: Bpa) -> dict[str, float]:
    order = sorted(bpa.masses, key=lambda b: (b.bit_count(), b))
    return {subset_string(frame, b): bpa.masses[b] for b in order}


def _result_payload(frame: Frame, result: FusionResult) -> dict:
    return {
        "strategy": result.strategy,
        "fused": _mass_map(frame, result.fused),
        "credibilities": dict(result.credibilities),
        "step_conflicts": list(result.step_conflicts),
    }


def _result_table(frame: Frame, result: FusionResult) -> str:
    lines = [f"strategy: {result.strategy}", "fused masses:"]
    for name, mass in _mass_map(frame, result.fused).items():
        lines.append(f"  {name:<12} {mass:.4f}")
    if result.credibilities:
        lines.append("credibilities:")
        for sid, crd in result.credibilities.items():
            lines.append(f"  {sid:<12} {crd:.4f}")
    if result.step_conflicts:
        lines.append("step conflicts:")
        for i, k in enumerate(result.step_conflicts, start=1):
            lines.append(f"  step {i:<7} K={k:.4f}")
    return "\n".join(lines)


def _compare_table(frame: Frame, rows: Sequence[StrategyOutcome]) -> str:
    masks = sorted(
        {b for row in rows if row.ok for b in row.result.fused.masses},
        key=lambda b: (b.bit_count(), b),
    )
    headers = [subset_string(frame, b) for b in masks]
    name_w = max(len("strategy"), max(len(r.strategy) for r in rows))
    col_ws = [max(len(h), 6) for h in headers]
    out = [
        " ".join(
            [f"{'strategy':<{name_w}}"]
            + [f"{h:>{w}}" for h, w in zip(headers, col_ws)]
            + ["error"]
        ).rstrip()
    ]
    for row in rows:
        cells = [f"{row.strategy:<{name_w}}"]
        if row.ok:
            for b, w in zip(masks, col_ws):
                cells.append(f"{row.result.fused.masses.get(b, 0.0):>{w}.4f}")
            cells.append("")
        else:
            cells.extend(f"{'-':>{w}}" for w in col_ws)
            cells.append(row.error or "failed")
        out.append(" ".join(cells).rstrip())
    return "\n".join(out)


def _cmd_fuse(args: argparse.Namespace) -> int:
    frame, reports = load_scenario(args.scenario)
    result = fuse(reports, _CLI_STRATEGIES[args.strategy])
    if args.output == "json":
        print(json.dumps(_result_payload(frame, result), indent=2))
    else:
        print(_result_table(frame, result))
    return EXIT_OK


def _cmd_curve(args: argparse.Namespace) -> int:
    params = CurveParams(c=args.c, big_l=args.big_l, gamma=args.gamma, x_r=args.xr)
    text = render_curve_export(params, grid_size=args.points, dirichlet=args.dirichlet)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    frame, reports = load_scenario(args.scenario)
    rows = compare_strategies(reports)
    if args.output == "json":
        payload = [
            _result_payload(frame, row.result)
            if row.ok
            else {"strategy": row.strategy, "error": row.error}
            for row in rows
        ]
        print(json.dumps(payload, indent=2))
    else:
        print(_compare_table(frame, rows))
    return EXIT_OK if any(row.ok for row in rows) else EXIT_TOTAL_CONFLICT


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "fuse":
            return _cmd_fuse(args)
        if args.command == "curve":
            return _cmd_curve(args)
        return _cmd_compare(args)
    except TotalConflict as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOTAL_CONFLICT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
