#!/usr/bin/env python3
"""Generate corpora of non-isomorphic graphs as graph6 files (one per order).

Every isomorphism class on n+1 vertices contains a graph obtained by adding
one vertex (with some neighborhood) to a class representative on n vertices,
so the levels are built by extending each representative with all 2^n
neighborhoods and deduplicating on the exact canonical form.  Each class is
written in its canonical labeling, sorted, so output is independent of
discovery order.  Class counts per order are checked against the known
sequence 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, ...

The order-9 level canonicalizes ~3.2M candidates; expect tens of minutes.

Usage: python scripts/make_corpus.py [--max-order 9] [--out-dir data]
"""

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from ngscan import graphs as gr

KNOWN_CLASS_COUNTS = {2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}


def canonical_mask(key: bytes) -> int:
    """Edge mask of the canonically labeled member (slot k = key[k])."""
    return int(key[::-1], 2) if key else 0


def extend_parents(task):
    """All distinct canonical forms reachable from a batch of parents by
    adding one vertex."""
    n, masks = task
    found = set()
    for mask in masks:
        parent = gr.graph_from_mask(n, mask)
        for nbr in range(1 << n):
            adj = [row | ((nbr >> v & 1) << n) for v, row in enumerate(parent.adj)]
            adj.append(nbr)
            found.add(gr.canonical_form(gr.Graph(n + 1, adj)))
    return found


def level_up(n: int, masks: list[int], workers: int, batch: int = 64) -> list[int]:
    tasks = [(n, masks[i:i + batch]) for i in range(0, len(masks), batch)]
    keys: set[bytes] = set()
    t0 = time.perf_counter()
    if workers <= 1:
        for task in tasks:
            keys |= extend_parents(task)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            done = 0
            for partial in pool.map(extend_parents, tasks):
                keys |= partial
                done += 1
                if done % 20 == 0:
                    print(f"  order {n + 1}: {done}/{len(tasks)} batches,"
                          f" {len(keys)} classes, {time.perf_counter() - t0:.0f}s",
                          flush=True)
    return [canonical_mask(key) for key in sorted(keys)]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-order", type=int, default=9, choices=range(3, 11))
    parser.add_argument("--out-dir", default="data")
    parser.add_argument("--workers", type=int, default=0,
                        help="parallel workers (default: available cores)")
    args = parser.parse_args()
    workers = args.workers or (__import__("os").cpu_count() or 1)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    masks = [0, 1]  # the two classes on 2 vertices
    for n in range(2, args.max_order):
        t0 = time.perf_counter()
        masks = level_up(n, masks, workers)
        order = n + 1
        expected = KNOWN_CLASS_COUNTS.get(order)
        if expected is not None and len(masks) != expected:
            print(f"order {order}: got {len(masks)} classes, expected {expected}",
                  file=sys.stderr)
            return 1
        target = out_dir / f"graphs{order}.g6"
        with open(target, "wb") as fh:
            for mask in masks:
                fh.write(gr.encode_graph6(gr.graph_from_mask(order, mask)) + b"\n")
        print(f"order {order}: {len(masks)} classes -> {target}"
              f" ({time.perf_counter() - t0:.1f}s)", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
