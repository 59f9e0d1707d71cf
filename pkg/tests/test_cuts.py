"""Exact cut ratios and constants against an independent brute-force oracle.

The oracle enumerates every nonempty proper subset with no symmetry
shortcuts, so it exercises none of the half-enumeration logic used by the
implementation.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ngscan import cuts
from ngscan import graphs as gr
from tests.conftest import graph_strategy, graph_with_permutation


def oracle_isoperimetric(g):
    """Min over every nonempty proper subset, no half restriction."""
    best = None
    for x in range(1, g.vertex_mask()):
        size = x.bit_count()
        r = Fraction(gr.boundary_size(g, x), min(size, g.n - size))
        best = r if best is None else min(best, r)
    return best


def oracle_cheeger(g):
    """Min over every nonempty proper subset; 0 whenever a zero-volume or
    zero-boundary side exists (disconnected)."""
    total = 2 * g.edge_count()
    best = None
    for x in range(1, g.vertex_mask()):
        minvol = min(gr.volume(g, x), total - gr.volume(g, x))
        bnd = gr.boundary_size(g, x)
        r = Fraction(0) if minvol == 0 else Fraction(bnd, minvol)
        best = r if best is None else min(best, r)
    return best


class TestRatios:
    def test_isoperimetric_ratio_examples(self):
        assert cuts.isoperimetric_ratio(gr.complete(4), 0b0011) == 2
        assert cuts.isoperimetric_ratio(gr.path(4), 0b0011) == Fraction(1, 2)
        two = gr.disjoint_union(gr.complete(3), gr.complete(3))
        assert cuts.isoperimetric_ratio(two, 0b000111) == 0

    def test_cheeger_ratio_examples(self):
        assert cuts.cheeger_ratio(gr.path(4), 0b0011) == Fraction(1, 3)
        assert cuts.cheeger_ratio(gr.complete(4), 0b0011) == Fraction(2, 3)
        two = gr.disjoint_union(gr.complete(3), gr.complete(3))
        assert cuts.cheeger_ratio(two, 0b000111) == 0

    def test_cheeger_ratio_rejects_zero_volume(self):
        g = gr.disjoint_union(gr.empty(2), gr.complete(2))
        with pytest.raises(gr.GraphError):
            cuts.cheeger_ratio(g, 0b0001)

    def test_ratios_reject_empty_and_full(self):
        with pytest.raises(gr.GraphError):
            cuts.isoperimetric_ratio(gr.path(4), 0)
        with pytest.raises(gr.GraphError):
            cuts.cheeger_ratio(gr.path(4), 0b1111)


class TestConstants:
    def test_isoperimetric_examples(self):
        assert cuts.isoperimetric_number(gr.path(4))[0] == Fraction(1, 2)
        assert cuts.isoperimetric_number(gr.complete(5))[0] == 3
        assert cuts.isoperimetric_number(
            gr.disjoint_union(gr.complete(2), gr.complete(3)))[0] == 0

    def test_cheeger_examples(self):
        assert cuts.cheeger_constant(gr.path(4))[0] == Fraction(1, 3)
        assert cuts.cheeger_constant(gr.complete(4))[0] == Fraction(2, 3)
        assert cuts.cheeger_constant(gr.join_vertex_two_cliques(9))[0] == Fraction(1, 4)

    def test_complete_graph_closed_forms(self):
        for n in range(2, 9):
            kn = gr.complete(n)
            assert cuts.isoperimetric_number(kn)[0] == -(-n // 2)  # ceil(n/2)
            assert cuts.cheeger_constant(kn)[0] == Fraction(-(-n // 2), n - 1)

    def test_disconnected_witness_is_component(self):
        g = gr.disjoint_union(gr.complete(2), gr.complete(3))
        val, wit = cuts.cheeger_constant(g)
        assert val == 0
        assert wit.subset in gr.components(g)

    def test_witness_consistency(self):
        for g in (gr.path(5), gr.cycle(6), gr.join_vertex_two_cliques(7)):
            val, wit = cuts.isoperimetric_number(g)
            assert val == cuts.isoperimetric_ratio(g, wit.subset)
            assert wit.boundary == gr.boundary_size(g, wit.subset)
            val, wit = cuts.cheeger_constant(g)
            assert val == cuts.cheeger_ratio(g, wit.subset)

    def test_witness_lex_minimal(self):
        # every tied minimizer has a mask >= the reported witness
        g = gr.cycle(6)
        val, wit = cuts.isoperimetric_number(g)
        ties = [x for x in range(1, g.vertex_mask())
                if x.bit_count() <= 3 and cuts.isoperimetric_ratio(g, x) == val]
        assert wit.subset == min(ties)

    def test_oracle_equivalence_exhaustive_small(self):
        for n in (2, 3, 4, 5):
            for mask in range(1 << gr.edge_slots(n)):
                g = gr.graph_from_mask(n, mask)
                assert cuts.isoperimetric_number(g)[0] == oracle_isoperimetric(g)
                assert cuts.cheeger_constant(g)[0] == oracle_cheeger(g)

    def test_anchored_equals_full_enumeration_exhaustive_n6(self):
        # the anchored (vertex-0) half-enumeration inside cheeger_constant is
        # value-equivalent to minimizing over all nonempty proper subsets
        for mask in range(1 << gr.edge_slots(6)):
            g = gr.graph_from_mask(6, mask)
            assert cuts.cheeger_constant(g)[0] == oracle_cheeger(g)

    @settings(max_examples=80)
    @given(graph_strategy(min_n=6, max_n=7))
    def test_oracle_equivalence_sampled(self, g):
        assert cuts.isoperimetric_number(g)[0] == oracle_isoperimetric(g)
        assert cuts.cheeger_constant(g)[0] == oracle_cheeger(g)

    @given(graph_with_permutation(max_n=6))
    def test_isomorphism_invariance(self, pair):
        g, perm = pair
        relabeled = g.permuted(perm)
        assert cuts.isoperimetric_number(relabeled)[0] == cuts.isoperimetric_number(g)[0]
        assert cuts.cheeger_constant(relabeled)[0] == cuts.cheeger_constant(g)[0]

    @given(graph_strategy(max_n=7))
    def test_zero_iff_disconnected(self, g):
        disc = not gr.is_connected(g)
        assert (cuts.isoperimetric_number(g)[0] == 0) == disc
        assert (cuts.cheeger_constant(g)[0] == 0) == disc


class TestMaxPairs:
    def test_examples(self):
        assert cuts.max_pair_isoperimetric(gr.path(4)) == Fraction(1, 2)
        assert cuts.max_pair_cheeger(gr.path(4)) == Fraction(1, 3)
        assert cuts.max_pair_isoperimetric(gr.complete(5)) == 3
        assert cuts.max_pair_isoperimetric(
            gr.disjoint_union(gr.complete(2), gr.complete(2))) >= 1

    @given(graph_strategy(max_n=6))
    def test_complement_symmetry(self, g):
        assert cuts.max_pair_isoperimetric(g) == cuts.max_pair_isoperimetric(gr.complement(g))
        assert cuts.max_pair_cheeger(g) == cuts.max_pair_cheeger(gr.complement(g))


class TestPointwiseLemmas:
    def test_cut_lemmas_exhaustive_up_to_5(self):
        """h(X) < 1/floor(n/2) forces i(X) < 1 everywhere; i(X) > 1 forces
        h(X) > 1/floor(n/2) from n = 4 on (at n = 3 the star centre attains
        equality, e.g. P3 with X the middle vertex)."""
        for n in (2, 3, 4, 5):
            f = n // 2
            for mask in range(1 << gr.edge_slots(n)):
                g = gr.graph_from_mask(n, mask)
                total = 2 * g.edge_count()
                for x in range(1, g.vertex_mask()):
                    minvol = min(gr.volume(g, x), total - gr.volume(g, x))
                    if minvol == 0:
                        continue
                    h_x = cuts.cheeger_ratio(g, x)
                    i_x = cuts.isoperimetric_ratio(g, x)
                    if h_x < Fraction(1, f):
                        assert i_x < 1, (n, mask, x)
                    if i_x > 1:
                        if n >= 4:
                            assert h_x > Fraction(1, f), (n, mask, x)
                        else:
                            assert h_x >= Fraction(1, f), (n, mask, x)
