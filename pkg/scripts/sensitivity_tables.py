"""Sensitivity of the 95% new-species interval to (sigma, theta).

Thin wrapper over ``discovery sensitivity`` for both bundled libraries.

Usage: python scripts/sensitivity_tables.py [--draws N] [--seed S] [--outdir DIR]
"""

import argparse
from pathlib import Path

from discovery.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--draws", default="100000")
    ap.add_argument("--seed", default="1")
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()
    Path(args.outdir).mkdir(parents=True, exist_ok=True)
    for lib in ("aerobic", "anaerobic"):
        out = Path(args.outdir) / f"sensitivity_{lib}.csv"
        rc = cli_main(["sensitivity", "--spectrum", lib, "--fit", "--draws", args.draws, "--seed", args.seed, "--out", str(out)])
        print(f"{lib}: exit {rc}, wrote {out}")


if __name__ == "__main__":
    main()
