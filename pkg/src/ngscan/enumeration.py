"""Graph streams for exhaustive and corpus-driven scans.

Labeled streams enumerate every edge bitmask of a given order exactly once,
in increasing mask order, and split into contiguous chunks for parallel
scans.  Complement-pair representatives keep one graph per {G, G^c} pair:
complementation flips every edge slot, so no mask is its own complement and
the representatives are precisely the masks whose top edge slot is 0.
Corpora of non-isomorphic graphs (orders 8 and 9 in particular) come in as
newline-separated graph6 files.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator

import numpy as np

from .graphs import Graph, Graph6Error, edge_slots, graph_from_mask, mask_from_graph, parse_graph6

LABELED_MIN = 2
LABELED_MAX = 8  # 2^28 masks at n=8 already needs a long run
CHUNK_MASKS = 1 << 16


@dataclass(frozen=True)
class GraphStream:
    """A replayable source of graphs with provenance metadata.

    ``kind`` is "labeled", "representatives" or "file"; ``order`` is the
    uniform vertex count for mask-backed streams (None only for files that
    mix orders).  ``total`` is the known graph count, if any.
    """

    kind: str
    provenance: str
    total: int | None
    order: int | None
    _factory: Callable[[], Iterator[Graph]]
    _records: tuple[tuple[int, int], ...] | None = None  # (n, mask) for files

    def __iter__(self) -> Iterator[Graph]:
        return self._factory()

    def mask_range(self) -> tuple[int, int]:
        """Contiguous labeled-mask range [start, stop) behind this stream."""
        if self.kind == "labeled":
            return 0, 1 << edge_slots(self.order)
        if self.kind == "representatives":
            return 0, 1 << (edge_slots(self.order) - 1)
        raise ValueError(f"stream kind {self.kind!r} is not mask-backed")

    def mask_groups(self, chunk: int = CHUNK_MASKS) -> list[tuple[int, np.ndarray]]:
        """Stream contents as (order, masks) batches of at most ``chunk``,
        in stream order.  File streams group runs of equal order."""
        groups: list[tuple[int, np.ndarray]] = []
        if self.kind in ("labeled", "representatives"):
            start, stop = self.mask_range()
            for lo, hi in chunk_ranges(start, stop, chunk):
                groups.append((self.order, np.arange(lo, hi, dtype=np.int64)))
            return groups
        run_n = None
        run: list[int] = []
        for n, mask in self._records:
            if edge_slots(n) > 62:
                raise ValueError(f"bulk scanning supports orders <= 11, corpus has n={n}")
            if n != run_n and run:
                groups.append((run_n, np.asarray(run, dtype=np.int64)))
                run = []
            run_n = n
            run.append(mask)
            if len(run) == chunk:
                groups.append((run_n, np.asarray(run, dtype=np.int64)))
                run = []
        if run:
            groups.append((run_n, np.asarray(run, dtype=np.int64)))
        return groups


def _check_labeled_order(n: int) -> None:
    if not LABELED_MIN <= n <= LABELED_MAX:
        raise ValueError(
            f"labeled enumeration supports {LABELED_MIN} <= n <= {LABELED_MAX}, got {n}")


def labeled_graphs(n: int) -> GraphStream:
    """Every labeled graph of order n exactly once, in increasing mask order."""
    _check_labeled_order(n)
    total = 1 << edge_slots(n)

    def gen() -> Iterator[Graph]:
        for mask in range(total):
            yield graph_from_mask(n, mask)

    return GraphStream("labeled", f"labeled:n={n}", total, n, gen)


def complement_pair_representatives(n: int) -> GraphStream:
    """One of {G, G^c} per labeled graph: the member with the smaller mask."""
    _check_labeled_order(n)
    total = 1 << (edge_slots(n) - 1)

    def gen() -> Iterator[Graph]:
        for mask in range(total):
            yield graph_from_mask(n, mask)

    return GraphStream("representatives", f"representatives:n={n}", total, n, gen)


def read_graph6_records(path) -> list[tuple[int, int]]:
    """Parse a newline-separated graph6 file to (order, mask) pairs."""
    records = []
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from exc
            records.append((g.n, mask_from_graph(g)))
    return records


def ingest_graph6(path) -> GraphStream:
    """Stream a graph6 corpus file in file order."""
    path = Path(path)
    records = tuple(read_graph6_records(path))
    orders = {n for n, _ in records}
    order = orders.pop() if len(orders) == 1 else None

    def gen() -> Iterator[Graph]:
        return (graph_from_mask(n, mask) for n, mask in records)

    return GraphStream("file", f"file:{path.name}:graphs={len(records)}",
                       len(records), order, gen, records)


def filter_k_regular(stream: GraphStream, k: int) -> GraphStream:
    """Pass only the graphs whose every degree equals k."""

    def gen() -> Iterator[Graph]:
        for g in stream:
            if all(row.bit_count() == k for row in g.adj):
                yield g

    return GraphStream(stream.kind, f"{stream.provenance}|k-regular:k={k}", None,
                       stream.order, gen)


def chunk_ranges(start: int, stop: int, chunk: int = CHUNK_MASKS) -> list[tuple[int, int]]:
    """Split [start, stop) into contiguous ranges of at most ``chunk``."""
    return [(lo, min(lo + chunk, stop)) for lo in range(start, stop, chunk)]
