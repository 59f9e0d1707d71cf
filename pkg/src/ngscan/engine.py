"""Vectorized batch computation of all per-graph invariants.

A chunk of labeled edge masks (one int per graph, slot order shared with the
graph6 codec) is turned into exact reduced fractions for i and h, floats for
lambda_2, connectivity flags, and pointwise cut-implication checks, for both the
graph and its complement.  The cut minima are computed by an exact integer
tournament over precomputed subset tables; cross-multiplication only, so the
results agree bit-for-bit with the Fraction-based routines in ``cuts`` (the
test suite holds the two routes against each other).

Only orders up to 11 fit the int64 mask representation; exhaustive and
corpus scans stay far below that.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graphs import edge_slots, slot_pairs

ENGINE_MAX_ORDER = 11


@dataclass(frozen=True)
class SubsetTables:
    """Per-order constants for the subset tournaments."""

    n: int
    shifts: np.ndarray        # (slots,) bit positions
    pair_i: np.ndarray        # (slots,) lower endpoint per slot
    pair_j: np.ndarray        # (slots,) upper endpoint per slot
    inc: np.ndarray           # (slots, n) slot-vertex incidence
    iso_cross: np.ndarray     # (Si,) crossing-slot masks, subsets |X| <= n//2
    iso_den: np.ndarray       # (Si,) |X|
    h_cross: np.ndarray       # (Sh,) crossing-slot masks, subsets containing 0
    h_members: np.ndarray     # (Sh, n) subset indicators
    h_minsize: np.ndarray     # (Sh,) min(|X|, n-|X|)


def _cross_mask(n: int, x: int) -> int:
    mask = 0
    for s, (i, j) in enumerate(slot_pairs(n)):
        if (x >> i & 1) != (x >> j & 1):
            mask |= 1 << s
    return mask


@lru_cache(maxsize=None)
def subset_tables(n: int) -> SubsetTables:
    if not 2 <= n <= ENGINE_MAX_ORDER:
        raise ValueError(f"engine supports 2 <= n <= {ENGINE_MAX_ORDER}, got {n}")
    slots = edge_slots(n)
    pairs = slot_pairs(n)
    inc = np.zeros((slots, n), dtype=np.int64)
    for s, (i, j) in enumerate(pairs):
        inc[s, i] = inc[s, j] = 1

    iso_subsets = sorted(
        (x for x in range(1, 1 << n) if x.bit_count() <= n // 2),
        key=lambda x: (x.bit_count(), x),
    )
    h_subsets = [half << 1 | 1 for half in range((1 << (n - 1)) - 1)]

    return SubsetTables(
        n=n,
        shifts=np.arange(slots, dtype=np.int64),
        pair_i=np.array([i for i, _ in pairs], dtype=np.int64),
        pair_j=np.array([j for _, j in pairs], dtype=np.int64),
        inc=inc,
        iso_cross=np.array([_cross_mask(n, x) for x in iso_subsets], dtype=np.int64),
        iso_den=np.array([x.bit_count() for x in iso_subsets], dtype=np.int64),
        h_cross=np.array([_cross_mask(n, x) for x in h_subsets], dtype=np.int64),
        h_members=np.array(
            [[x >> v & 1 for v in range(n)] for x in h_subsets], dtype=np.int64),
        h_minsize=np.array(
            [min(x.bit_count(), n - x.bit_count()) for x in h_subsets], dtype=np.int64),
    )


@dataclass
class SideInvariants:
    i_num: np.ndarray
    i_den: np.ndarray
    h_num: np.ndarray
    h_den: np.ndarray
    lam2: np.ndarray
    conn: np.ndarray
    h_below_i_above: np.ndarray
    i_above_h_below: np.ndarray
    regular: np.ndarray


@dataclass
class ChunkInvariants:
    """All invariants for one chunk of masks, graph side and complement side."""

    n: int
    masks: np.ndarray
    g: SideInvariants
    c: SideInvariants

    def __len__(self) -> int:
        return len(self.masks)


def _reduce(num: np.ndarray, den: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    g = np.gcd(num, den)
    g = np.where(g == 0, 1, g)
    out_num = num // g
    out_den = den // g
    return out_num, np.where(out_num == 0, 1, out_den)


def _tournament_update(best_num, best_den, num, den):
    better = num * best_den < best_num * den
    np.copyto(best_num, num, where=better)
    np.copyto(best_den, den, where=better)


def _side_invariants(n: int, masks: np.ndarray, t: SubsetTables) -> SideInvariants:
    nbatch = masks.shape[0]
    bits = ((masks[:, None] >> t.shifts[None, :]) & 1).astype(np.int64)
    deg = bits @ t.inc
    total_vol = 2 * bits.sum(axis=1)
    f = n // 2

    # isoperimetric tournament (denominators fixed per subset)
    i_num = np.bitwise_count(masks & t.iso_cross[0]).astype(np.int64)
    i_den = np.full(nbatch, t.iso_den[0], dtype=np.int64)
    for s in range(1, len(t.iso_cross)):
        num = np.bitwise_count(masks & t.iso_cross[s]).astype(np.int64)
        den = np.full(nbatch, t.iso_den[s], dtype=np.int64)
        _tournament_update(i_num, i_den, num, den)

    # Cheeger tournament over anchored subsets; a zero-volume side forces an
    # empty boundary, so those entries are folded in as exact zeros.
    h_num = h_den = None
    h_below_i_above = np.zeros(nbatch, dtype=bool)
    i_above_h_below = np.zeros(nbatch, dtype=bool)
    for s in range(len(t.h_cross)):
        bnd = np.bitwise_count(masks & t.h_cross[s]).astype(np.int64)
        volx = deg @ t.h_members[s]
        minvol = np.minimum(volx, total_vol - volx)
        ok = minvol > 0
        num = np.where(ok, bnd, 0)
        den = np.where(ok, minvol, 1)
        if h_num is None:
            h_num, h_den = num, den
        else:
            _tournament_update(h_num, h_den, num, den)
        minsize = t.h_minsize[s]
        h_below_i_above |= (bnd * f < minvol) & (bnd >= minsize)
        i_above_h_below |= (bnd > minsize) & (bnd * f <= minvol)

    conn = i_num > 0

    # normalized-Laplacian lambda_2, eigensolve only where connected
    lam2 = np.zeros(nbatch, dtype=np.float64)
    idx = np.nonzero(conn)[0]
    if idx.size:
        sub = bits[idx].astype(np.float64)
        adj = np.zeros((idx.size, n, n))
        adj[:, t.pair_i, t.pair_j] = sub
        adj[:, t.pair_j, t.pair_i] = sub
        dsub = deg[idx].astype(np.float64)
        dinv = np.where(dsub > 0, 1.0 / np.sqrt(np.maximum(dsub, 1.0)), 0.0)
        lap = -adj * dinv[:, :, None] * dinv[:, None, :]
        diag = np.arange(n)
        lap[:, diag, diag] = (dsub > 0).astype(np.float64)
        lam2[idx] = np.linalg.eigvalsh(lap)[:, 1]

    regular = deg.min(axis=1) == deg.max(axis=1)
    i_num, i_den = _reduce(i_num, i_den)
    h_num, h_den = _reduce(h_num, h_den)
    return SideInvariants(i_num, i_den, h_num, h_den, lam2, conn,
                          h_below_i_above, i_above_h_below, regular)


def compute_chunk(n: int, masks: np.ndarray) -> ChunkInvariants:
    """Invariants of every mask in the chunk, plus its complement."""
    t = subset_tables(n)
    masks = np.asarray(masks, dtype=np.int64)
    full = (1 << edge_slots(n)) - 1
    return ChunkInvariants(
        n=n,
        masks=masks,
        g=_side_invariants(n, masks, t),
        c=_side_invariants(n, full ^ masks, t),
    )


def masks_to_graph6(n: int, masks: np.ndarray) -> list[bytes]:
    """graph6 records for a batch of labeled masks."""
    masks = np.asarray(masks, dtype=np.int64)
    slots = edge_slots(n)
    nbytes = (slots + 5) // 6
    shifts = np.arange(6 * nbytes, dtype=np.int64)
    bits = np.zeros((masks.shape[0], 6 * nbytes), dtype=np.int64)
    bits[:, :slots] = (masks[:, None] >> shifts[None, :slots]) & 1
    groups = bits.reshape(masks.shape[0], nbytes, 6)
    payload = groups @ np.array([32, 16, 8, 4, 2, 1], dtype=np.int64) + 63
    out = np.empty((masks.shape[0], 1 + nbytes), dtype=np.uint8)
    out[:, 0] = n + 63
    out[:, 1:] = payload
    raw = out.tobytes()
    width = 1 + nbytes
    return [raw[i * width:(i + 1) * width] for i in range(masks.shape[0])]
