"""Command-line surface: info, scan, verify, plotdata.

scan writes one CSV row per graph in stream order with the fixed header
``graph6,n,i_num,i_den,ic_num,ic_den,h_num,h_den,hc_num,hc_den,lambda2,
lambda2c,connected,connectedc``; floats carry 12 significant digits and the
bytes are identical across runs and worker counts.  Long scans checkpoint
every chunk (2^16 masks) to a ``.ckpt`` sidecar; --resume continues.

verify exit codes: 0 all suites clean, 2 a conjecture counterexample was
found, 1 a proven statement failed (an implementation bug) or a runtime
error occurred.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from pathlib import Path

import numpy as np

from . import cuts, graphs as gr, spectra
from .engine import ChunkInvariants, masks_to_graph6
from .enumeration import (
    CHUNK_MASKS,
    GraphStream,
    complement_pair_representatives,
    ingest_graph6,
    labeled_graphs,
)
from .verify import (
    SUITE_NAMES,
    iter_chunk_invariants,
    reports_exit_code,
    run_suites,
)

CSV_HEADER = ("graph6,n,i_num,i_den,ic_num,ic_den,h_num,h_den,hc_num,hc_den,"
              "lambda2,lambda2c,connected,connectedc\n")


@dataclass
class RunConfig:
    command: str
    order: int | None = None
    source: str = "representatives"  # labeled | representatives | file=<path>
    workers: int = 0                 # 0 = available parallelism
    out: str | None = None
    suites: tuple[str, ...] = ("all",)
    tol_eig: float = 1e-9
    k_max: int = 3
    figure: str = "all"
    resume: bool = False
    chunk: int = CHUNK_MASKS

    def __post_init__(self):
        if self.workers == 0:
            self.workers = os.cpu_count() or 1
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")
        if self.tol_eig <= 0:
            raise ValueError("tolerances must be positive")
        if self.source not in ("labeled", "representatives") and not self.source.startswith("file="):
            raise ValueError(f"bad source {self.source!r}: labeled | representatives | file=<path>")
        if self.source.startswith("file=") and self.order is not None:
            raise ValueError("give either --order with labeled/representatives or a file source, not both")

    def stream(self) -> GraphStream:
        if self.source == "labeled":
            if self.order is None:
                raise ValueError("--order is required for the labeled source")
            return labeled_graphs(self.order)
        if self.source == "representatives":
            if self.order is None:
                raise ValueError("--order is required for the representatives source")
            return complement_pair_representatives(self.order)
        return ingest_graph6(self.source[len("file="):])


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


# ---------------------------------------------------------------------------
# info
# ---------------------------------------------------------------------------

def _witness_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def _side_lines(label: str, g: gr.Graph) -> tuple[list[str], Fraction, Fraction, float]:
    i, iw = cuts.isoperimetric_number(g)
    h, hw = cuts.cheeger_constant(g)
    summary = spectra.normalized_spectrum(g)
    lines = [
        f"{label}: n={g.n}, edges={g.edge_count()} {g.edges()}",
        f"  connected={summary.connected}  bipartite={gr.is_bipartite(g)}",
        f"  i = {i}   (witness X={_witness_vertices(iw.subset)}, boundary={iw.boundary})",
        f"  h = {h}   (witness X={_witness_vertices(hw.subset)}, boundary={hw.boundary},"
        f" min volume={hw.denominator})",
        f"  lambda2 = {_fmt(summary.lambda2)}   mu2 = {_fmt(spectra.mu2(g))}",
        f"  normalized spectrum: [{', '.join(_fmt(x) for x in summary.eigenvalues)}]",
    ]
    return lines, i, h, summary.lambda2


def _bound_status(value: float, bound: float, tol: float) -> str:
    if value < bound - tol:
        return "BELOW"
    if value <= bound + tol:
        return "tight"
    return "holds"


def cmd_info(cfg: RunConfig, graph6: str) -> int:
    try:
        g = gr.parse_graph6(graph6.strip())
    except gr.Graph6Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    gc = gr.complement(g)
    n, tol = g.n, cfg.tol_eig
    out, i, h, l2 = _side_lines("G", g)
    out_c, ic, hc, l2c = _side_lines("G^c (complement)", gc)
    print("\n".join(out))
    print("\n".join(out_c))

    f = n // 2
    pair_i, pair_h, pair_l2 = max(i, ic), max(h, hc), max(l2, l2c)
    l2_bound = 2 / n**2 if n % 2 == 0 else 2 / (n - 1) ** 2
    is_p4 = n == 4 and gr.canonical_form(g) == gr.canonical_form(gr.path(4))
    below = ("BELOW (documented exception: path on 4 vertices)" if is_p4
             else "BELOW -- should be impossible, please report")
    print("complement-pair bounds:")
    status = below if pair_i < 1 else ("tight" if pair_i == 1 else "holds")
    print(f"  max{{i, i_c}} >= 1:              value {pair_i}  -> {status}")
    status = below if pair_h < Fraction(1, f) else (
        "tight" if pair_h == Fraction(1, f) else "holds")
    print(f"  max{{h, h_c}} >= 1/{f}:           value {pair_h}  -> {status}")
    print(f"  max{{lambda2, lambda2_c}} > {_fmt(l2_bound)}:"
          f"  value {_fmt(pair_l2)}  -> {_bound_status(pair_l2, l2_bound, tol)}")
    if n >= 5:
        print(f"  conjectured max{{lambda2, lambda2_c}} >= 2/(n-1) = {_fmt(2 / (n - 1))}:"
              f"  value {_fmt(pair_l2)}  -> {_bound_status(pair_l2, 2 / (n - 1), tol)}")
    if gr.is_connected(g) and gr.is_connected(gc):
        bound = 2 / sqrt(n)
        print(f"  conjectured lambda2 + lambda2_c >= 2/sqrt(n) = {_fmt(bound)} (both connected):"
              f"  value {_fmt(l2 + l2c)}  -> {_bound_status(l2 + l2c, bound, tol)}")
    degs = set(g.degrees())
    if len(degs) == 1:
        bound = 1 / (n - 1)
        print(f"  regular-graph lambda2 + lambda2_c >= 1/(n-1) = {_fmt(bound)}:"
              f"  value {_fmt(l2 + l2c)}  -> {_bound_status(l2 + l2c, bound, tol)}")
    return 0


# ---------------------------------------------------------------------------
# scan (CSV + checkpoint/resume)
# ---------------------------------------------------------------------------

def _csv_chunk(ch: ChunkInvariants) -> bytes:
    g6s = masks_to_graph6(ch.n, ch.masks)
    g, c = ch.g, ch.c
    rows = []
    for k in range(len(ch)):
        rows.append(
            f"{g6s[k].decode('ascii')},{ch.n},"
            f"{g.i_num[k]},{g.i_den[k]},{c.i_num[k]},{c.i_den[k]},"
            f"{g.h_num[k]},{g.h_den[k]},{c.h_num[k]},{c.h_den[k]},"
            f"{_fmt(g.lam2[k])},{_fmt(c.lam2[k])},"
            f"{int(g.conn[k])},{int(c.conn[k])}\n"
        )
    return "".join(rows).encode("ascii")


def _checkpoint_fingerprint(cfg: RunConfig) -> dict:
    return {"order": cfg.order, "source": cfg.source, "chunk": cfg.chunk}


def cmd_scan(cfg: RunConfig, max_groups: int | None = None) -> int:
    if cfg.out is None:
        raise ValueError("scan needs --out")
    stream = cfg.stream()
    out = Path(cfg.out)
    ckpt = Path(str(out) + ".ckpt")
    groups_total = len(stream.mask_groups(cfg.chunk))
    start_group = 0
    if cfg.resume and ckpt.exists():
        state = json.loads(ckpt.read_text())
        if state["config"] != _checkpoint_fingerprint(cfg):
            raise ValueError(f"checkpoint {ckpt} belongs to a different scan config")
        start_group = state["groups_done"]
        print(f"resuming after {start_group}/{groups_total} chunks")
    elif cfg.resume:
        print("no checkpoint found; starting from scratch")

    t0 = time.perf_counter()
    rows = 0
    mode = "ab" if start_group else "wb"
    done = start_group
    with open(out, mode) as fh:
        if not start_group:
            fh.write(CSV_HEADER.encode("ascii"))
        for ch in iter_chunk_invariants(stream, workers=cfg.workers,
                                        chunk=cfg.chunk, skip_groups=start_group):
            fh.write(_csv_chunk(ch))
            fh.flush()
            rows += len(ch)
            done += 1
            ckpt.write_text(json.dumps(
                {"config": _checkpoint_fingerprint(cfg), "groups_done": done}))
            if groups_total > 16 and done % 16 == 0:
                print(f"  {done}/{groups_total} chunks,"
                      f" {time.perf_counter() - t0:.0f}s", flush=True)
            if max_groups is not None and done - start_group >= max_groups:
                print(f"stopped after {done}/{groups_total} chunks (partial scan)")
                return 0
    ckpt.unlink(missing_ok=True)
    print(f"scan: {rows} rows -> {out} ({stream.provenance},"
          f" {time.perf_counter() - t0:.2f}s, workers={cfg.workers})")
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(cfg: RunConfig, as_json: bool = False) -> int:
    names = list(SUITE_NAMES) if "all" in cfg.suites else list(cfg.suites)
    stream = None
    if any(s != "join-spectrum" for s in names):
        stream = cfg.stream()
    reports = run_suites(stream, names, tol=cfg.tol_eig, workers=cfg.workers,
                         k_max=cfg.k_max, chunk=cfg.chunk)
    json_lines = "\n".join(r.to_json() for r in reports) + "\n"
    if as_json:
        sys.stdout.write(json_lines)
    else:
        for r in reports:
            print(r.to_text())
    if cfg.out:
        Path(cfg.out).write_text(json_lines)
    return reports_exit_code(reports)


# ---------------------------------------------------------------------------
# plotdata
# ---------------------------------------------------------------------------

FIGURES = ("iso", "cheeger", "lambda")


def _figure_points(ch: ChunkInvariants, figure: str) -> np.ndarray:
    if figure == "iso":
        x = ch.g.i_num / ch.g.i_den
        y = ch.c.i_num / ch.c.i_den
    elif figure == "cheeger":
        x = ch.g.h_num / ch.g.h_den
        y = ch.c.h_num / ch.c.h_den
    else:
        x, y = ch.g.lam2, ch.c.lam2
    return np.column_stack([x, y])


def cmd_plotdata(cfg: RunConfig) -> int:
    if cfg.out is None:
        raise ValueError("plotdata needs --out (a directory)")
    figures = list(FIGURES) if cfg.figure == "all" else [cfg.figure]
    stream = cfg.stream()
    outdir = Path(cfg.out)
    outdir.mkdir(parents=True, exist_ok=True)
    points: dict[tuple[str, int], list[np.ndarray]] = {}
    counts: dict[int, int] = {}
    for ch in iter_chunk_invariants(stream, workers=cfg.workers, chunk=cfg.chunk):
        counts[ch.n] = counts.get(ch.n, 0) + len(ch)
        for fig in figures:
            points.setdefault((fig, ch.n), []).append(_figure_points(ch, fig))
    written = []
    for (fig, n), chunks in sorted(points.items()):
        pts = np.unique(np.concatenate(chunks), axis=0)
        box = 1.0 if fig == "iso" else 1.0 / (n // 2)
        lines = [
            f"# figure: {fig}",
            f"# provenance: {stream.provenance}",
            f"# graphs: {counts[n]}",
            f"# unique points: {len(pts)}",
            f"# box: x = {_fmt(box)}  y = {_fmt(box)}",
        ]
        if fig == "lambda":
            lines.append(f"# line: x + y = {_fmt(2 / sqrt(n))}")
        lines += [f"{_fmt(x)} {_fmt(y)}" for x, y in pts]
        target = outdir / f"fig_{fig}_n{n}.dat"
        target.write_text("\n".join(lines) + "\n")
        written.append(target)
    print(f"plotdata: wrote {len(written)} files to {outdir}")
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ngscan",
        description="Exact complement-pair invariant scans: i, h and lambda2 of G and G^c.")
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="all invariants and bound status of one graph6 graph")
    info.add_argument("graph6", help="graph6 record, e.g. Ch")
    info.add_argument("--tol-eig", type=float, default=1e-9)

    def add_stream_args(p, default_source="representatives"):
        p.add_argument("--order", type=int, default=None, help="vertex count for mask sources")
        p.add_argument("--source", default=default_source,
                       help="labeled | representatives | file=<path>")
        p.add_argument("--workers", type=int, default=0,
                       help="parallel workers (default: available cores)")
        p.add_argument("--tol-eig", type=float, default=1e-9)

    scan = sub.add_parser("scan", help="CSV of all invariants over a stream")
    add_stream_args(scan)
    scan.add_argument("--out", required=True)
    scan.add_argument("--resume", action="store_true",
                      help="continue an interrupted scan from its checkpoint")

    verify = sub.add_parser("verify", help="run verification suites over a stream")
    add_stream_args(verify)
    verify.add_argument("--suite", action="append", default=None,
                        help=f"suite name or 'all'; repeatable ({', '.join(SUITE_NAMES)})")
    verify.add_argument("--k-max", type=int, default=3,
                        help="max regularity for the join-spectrum suite")
    verify.add_argument("--json", action="store_true", help="machine-readable reports on stdout")
    verify.add_argument("--out", default=None, help="also write JSON reports here")

    plotdata = sub.add_parser("plotdata", help="scatter data files for the figure families")
    add_stream_args(plotdata)
    plotdata.add_argument("--figure", choices=FIGURES + ("all",), default="all")
    plotdata.add_argument("--out", required=True, help="output directory")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "info":
            cfg = RunConfig(command="info", tol_eig=args.tol_eig, workers=1)
            return cmd_info(cfg, args.graph6)
        common = dict(order=args.order, source=args.source,
                      workers=args.workers, tol_eig=args.tol_eig)
        if args.command == "scan":
            cfg = RunConfig(command="scan", out=args.out, resume=args.resume, **common)
            return cmd_scan(cfg)
        if args.command == "verify":
            suites = tuple(args.suite) if args.suite else ("all",)
            cfg = RunConfig(command="verify", suites=suites, k_max=args.k_max,
                            out=args.out, **common)
            return cmd_verify(cfg, as_json=args.json)
        if args.command == "plotdata":
            cfg = RunConfig(command="plotdata", figure=args.figure, out=args.out, **common)
            return cmd_plotdata(cfg)
    except (ValueError, OSError, gr.GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
