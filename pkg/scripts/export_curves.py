#!/usr/bin/env python3
"""Export the five preset radar confidence curves as CSV files for plotting."""

import argparse
from pathlib import Path

from evfuse.confidence import CurveParams
from evfuse.scenario import render_curve_export

PRESETS = {
    "radar_a": CurveParams(c=10.0, big_l=0.7, gamma=0.0, x_r=14.0),
    "radar_b": CurveParams(c=10.0, big_l=0.8, gamma=0.0, x_r=12.0),
    "radar_c": CurveParams(c=10.0, big_l=1.0, gamma=0.0, x_r=10.0),
    "radar_d": CurveParams(c=10.0, big_l=1.1, gamma=0.0, x_r=13.0),
    "radar_e": CurveParams(c=10.0, big_l=1.3, gamma=0.0, x_r=6.0),
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="out_curves")
    ap.add_argument("--points", type=int, default=10_000)
    ap.add_argument("--dirichlet", action="store_true")
    args = ap.parse_args()
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for name, params in PRESETS.items():
        path = outdir / f"{name}.csv"
        path.write_text(
            render_curve_export(params, grid_size=args.points, dirichlet=args.dirichlet),
            encoding="utf-8",
        )
        print("wrote", path)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
