#!/usr/bin/env python3
"""Run the three fusion strategies on a scenario and print the comparison."""

import argparse
from pathlib import Path

from evfuse.cli import main as cli_main

DEFAULT_SCENARIO = Path(__file__).resolve().parents[1] / "scenarios" / "five_radar_recognition.json"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scenario", default=str(DEFAULT_SCENARIO))
    ap.add_argument("--output", choices=("table", "json"), default="table")
    args = ap.parse_args()
    return cli_main(["compare", "--scenario", args.scenario, "--output", args.output])


if __name__ == "__main__":
    raise SystemExit(main())
