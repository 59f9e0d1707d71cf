#!/usr/bin/env python3
"""Run every verification suite over exhaustive labeled streams (orders 2..7)
and over the order-8/9 corpora when data/graphs{8,9}.g6 exist.

Exit code: 0 everything clean, 2 a conjecture counterexample was found
(report it loudly!), 1 a proven statement failed, which means a bug.

Usage: python scripts/run_verification.py [--max-order 7] [--workers N]
"""

import argparse
import os
import sys
from pathlib import Path

from ngscan import enumeration as en
from ngscan import verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-order", type=int, default=7, choices=range(2, 9))
    parser.add_argument("--workers", type=int, default=0)
    parser.add_argument("--tol-eig", type=float, default=1e-9)
    args = parser.parse_args()
    workers = args.workers or (os.cpu_count() or 1)

    all_reports = []
    for n in range(2, args.max_order + 1):
        print(f"=== labeled order {n} ===", flush=True)
        reports = verify.run_suites(en.labeled_graphs(n), tol=args.tol_eig,
                                    workers=workers)
        for rep in reports:
            print(rep.to_text())
        all_reports += reports

    data_dir = Path(__file__).resolve().parent.parent / "data"
    for n in (8, 9):
        corpus = data_dir / f"graphs{n}.g6"
        if not corpus.exists():
            print(f"=== corpus order {n}: NOT RUN ({corpus} missing;"
                  f" see scripts/make_corpus.py) ===")
            continue
        print(f"=== corpus order {n} ===", flush=True)
        stream = en.ingest_graph6(corpus)
        names = [s for s in verify.SUITE_NAMES if s != "join-spectrum"]
        reports = verify.run_suites(stream, names, tol=args.tol_eig, workers=workers)
        for rep in reports:
            print(rep.to_text())
        all_reports += reports

    code = verify.reports_exit_code(all_reports)
    print(f"overall: {'clean' if code == 0 else 'ATTENTION'} (exit {code})")
    return code


if __name__ == "__main__":
    sys.exit(main())
