"""Contour data for the (sigma, theta) grid posterior of both libraries.

Usage: python scripts/posterior_contours.py [--outdir DIR]
"""

import argparse
from pathlib import Path

from discovery.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="results")
    args = ap.parse_args()
    Path(args.outdir).mkdir(parents=True, exist_ok=True)
    for lib in ("aerobic", "anaerobic"):
        out = Path(args.outdir) / f"posterior_grid_{lib}.csv"
        rc = cli_main(["posterior-grid", "--spectrum", lib, "--out", str(out)])
        print(f"{lib}: exit {rc}, wrote {out}")


if __name__ == "__main__":
    main()
