#!/usr/bin/env python3
"""Emit the scatter data behind the (i, i_c), (h, h_c) and (lambda2,
lambda2_c) figures: exhaustive labeled streams for orders 4..7, plus the
order-8/9 corpora when data/graphs{8,9}.g6 exist.

Writes whitespace-separated two-column files with #-metadata (box and
reference-line equations) under --out; any plotting tool can replay them,
e.g. gnuplot> plot 'fig_lambda_n7.dat'.

Usage: python scripts/reproduce_figures.py [--out out/figures] [--workers N]
"""

import argparse
import sys
from pathlib import Path

from ngscan.cli import RunConfig, cmd_plotdata


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="out/figures")
    parser.add_argument("--workers", type=int, default=0)
    parser.add_argument("--orders", type=int, nargs="+", default=[4, 5, 6, 7])
    args = parser.parse_args()

    for n in args.orders:
        cfg = RunConfig(command="plotdata", order=n, source="labeled",
                        workers=args.workers, out=args.out)
        cmd_plotdata(cfg)

    data_dir = Path(__file__).resolve().parent.parent / "data"
    for n in (8, 9):
        corpus = data_dir / f"graphs{n}.g6"
        if not corpus.exists():
            print(f"order {n}: skipped ({corpus} missing; see scripts/make_corpus.py)")
            continue
        cfg = RunConfig(command="plotdata", source=f"file={corpus}",
                        workers=args.workers, out=args.out)
        cmd_plotdata(cfg)
    return 0


if __name__ == "__main__":
    sys.exit(main())
