"""Exact isoperimetric number i(G) and Cheeger constant h(G).

Everything here runs on exact rationals (``fractions.Fraction``) so that
the equality cases of the complement-pair bounds, e.g. i(G^c) = 1 or
h(G^c) = 1/floor(n/2), are decided without floating point.  Minima are
taken by exhaustive subset enumeration: fine at witness scale (n <= 12);
bulk scans go through the vectorized engine instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import (
    Graph,
    GraphError,
    boundary_size,
    check_subset,
    complement,
    components,
    volume,
)

ExactRatio = Fraction


@dataclass(frozen=True)
class CutWitness:
    """A minimizing vertex subset with the numbers behind its ratio."""

    subset: int
    boundary: int
    denominator: int
    ratio: Fraction

    def __post_init__(self):
        if self.subset == 0:
            raise GraphError("witness subset must be nonempty")
        if self.denominator > 0 and self.ratio != Fraction(self.boundary, self.denominator):
            raise GraphError("witness ratio inconsistent with boundary/denominator")


def _subsets_by_size(n: int, max_size: int):
    """Nonempty subsets of {0..n-1} up to max_size, by (popcount, mask)."""
    by_size: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1, 1 << n):
        k = mask.bit_count()
        if k <= max_size:
            by_size[k].append(mask)
    for bucket in by_size:
        yield from bucket


def isoperimetric_ratio(g: Graph, x: int) -> Fraction:
    """|boundary(X)| / min(|X|, |V-X|) for a nonempty proper subset."""
    check_subset(g, x)
    size = x.bit_count()
    return Fraction(boundary_size(g, x), min(size, g.n - size))


def isoperimetric_number(g: Graph) -> tuple[Fraction, CutWitness]:
    """Exact min of the isoperimetric ratio, with a lex-min witness.

    Enumerates subsets with 1 <= |X| <= floor(n/2); the ratio is symmetric
    under complementation so larger sets add nothing.  Among minimizers the
    witness is the numerically smallest bitmask.
    """
    n = g.n
    best_num = best_den = -1
    best_mask = -1
    for x in _subsets_by_size(n, n // 2):
        num = boundary_size(g, x)
        den = x.bit_count()
        if best_mask < 0 or num * best_den < best_num * den:
            best_num, best_den, best_mask = num, den, x
        elif num * best_den == best_num * den and x < best_mask:
            best_mask = x
            best_num, best_den = num, den
    ratio = Fraction(best_num, best_den)
    return ratio, CutWitness(best_mask, best_num, best_den, ratio)


def cheeger_ratio(g: Graph, x: int) -> Fraction:
    """|boundary(X)| / min(vol(X), vol(V-X)); rejects zero-volume sides."""
    check_subset(g, x)
    vol = volume(g, x)
    minvol = min(vol, 2 * g.edge_count() - vol)
    if minvol == 0:
        raise GraphError("degenerate set: smaller side has volume 0")
    return Fraction(boundary_size(g, x), minvol)


def cheeger_constant(g: Graph) -> tuple[Fraction, CutWitness]:
    """Exact Cheeger constant with a witness.

    Disconnected graphs (isolated vertices included) short-circuit to 0
    with the numerically smallest component as witness.  Otherwise the
    ratio is symmetric under complementation, so only subsets containing
    vertex 0 are enumerated; ties resolve to the smallest bitmask.
    """
    comps = components(g)
    if len(comps) > 1:
        comp = min(comps)
        return Fraction(0), CutWitness(comp, 0, volume(g, comp), Fraction(0))
    n = g.n
    total = 2 * g.edge_count()
    best_num = best_den = -1
    best_mask = -1
    full = g.vertex_mask()
    for half in range(1 << (n - 1)):
        x = half << 1 | 1
        if x == full:
            continue
        vol = volume(g, x)
        den = min(vol, total - vol)
        num = boundary_size(g, x)
        if best_mask < 0 or num * best_den < best_num * den:
            best_num, best_den, best_mask = num, den, x
        elif num * best_den == best_num * den and x < best_mask:
            best_mask = x
            best_num, best_den = num, den
    ratio = Fraction(best_num, best_den)
    return ratio, CutWitness(best_mask, best_num, best_den, ratio)


def max_pair_isoperimetric(g: Graph) -> Fraction:
    """max(i(G), i(G^c))."""
    return max(isoperimetric_number(g)[0], isoperimetric_number(complement(g))[0])


def max_pair_cheeger(g: Graph) -> Fraction:
    """max(h(G), h(G^c))."""
    return max(cheeger_constant(g)[0], cheeger_constant(complement(g))[0])
