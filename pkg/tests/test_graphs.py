"""Graph core: constructors, complement, boundary/volume, codec, canonical form."""

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ngscan import graphs as gr
from tests.conftest import graph_strategy, graph_with_permutation


def edge_set(g):
    return set(g.edges())


class TestConstruction:
    def test_rejects_small_and_large_orders(self):
        with pytest.raises(gr.GraphError):
            gr.Graph(1, [0])
        with pytest.raises(gr.GraphError):
            gr.Graph(63, [0] * 63)

    def test_rejects_loops_and_asymmetry(self):
        with pytest.raises(gr.GraphError):
            gr.Graph(2, [1, 0])  # loop at 0
        with pytest.raises(gr.GraphError):
            gr.Graph(2, [2, 0])  # 0-1 present only on one side

    def test_rejects_stray_bits(self):
        with pytest.raises(gr.GraphError):
            gr.Graph(2, [4, 0])

    def test_standard_graphs(self):
        assert edge_set(gr.complete(4)) == {(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)}
        assert edge_set(gr.path(4)) == {(0, 1), (1, 2), (2, 3)}
        assert edge_set(gr.cycle(4)) == {(0, 1), (1, 2), (2, 3), (0, 3)}
        assert gr.empty(5).edge_count() == 0

    def test_disjoint_union_and_join(self):
        g = gr.disjoint_union(gr.complete(3), gr.complete(3))
        assert g.n == 6 and g.edge_count() == 6 and not gr.is_connected(g)
        j = gr.join(gr.empty(2), gr.empty(3))
        assert j.edge_count() == 6  # complete bipartite K_{2,3}

    def test_join_vertex_two_cliques(self):
        g = gr.join_vertex_two_cliques(5)
        assert edge_set(g) == {(0, 4), (1, 4), (2, 4), (3, 4), (0, 1), (2, 3)}
        # same construction via an explicit join with the apex last
        alt = gr.Graph.from_edges(5, [(0, 1), (2, 3)] + [(v, 4) for v in range(4)])
        assert g == alt
        with pytest.raises(gr.GraphError):
            gr.join_vertex_two_cliques(6)


class TestComplement:
    def test_complete_to_empty(self):
        assert gr.complement(gr.complete(4)) == gr.empty(4)

    def test_path4_complement_edges(self):
        assert edge_set(gr.complement(gr.path(4))) == {(0, 2), (0, 3), (1, 3)}
        assert gr.canonical_form(gr.complement(gr.path(4))) == gr.canonical_form(gr.path(4))

    @given(graph_strategy())
    def test_involution(self, g):
        assert gr.complement(gr.complement(g)) == g

    @given(graph_strategy())
    def test_edge_count_identity(self, g):
        assert g.edge_count() + gr.complement(g).edge_count() == g.n * (g.n - 1) // 2


class TestBoundaryVolume:
    def test_examples(self):
        assert gr.boundary_size(gr.complete(4), 0b0011) == 4
        assert gr.boundary_size(gr.path(4), 0b0011) == 1
        two_triangles = gr.disjoint_union(gr.complete(3), gr.complete(3))
        assert gr.boundary_size(two_triangles, 0b000111) == 0
        assert gr.volume(gr.complete(4), 0b0011) == 6
        assert gr.volume(gr.path(4), 0b0011) == 3
        assert gr.volume(gr.path(4), 0) == 0

    def test_rejects_empty_and_full(self):
        with pytest.raises(gr.GraphError):
            gr.boundary_size(gr.path(4), 0)
        with pytest.raises(gr.GraphError):
            gr.boundary_size(gr.path(4), 0b1111)

    @given(graph_strategy(), st.data())
    def test_boundary_symmetry(self, g, data):
        x = data.draw(st.integers(1, g.vertex_mask() - 1))
        assert gr.boundary_size(g, x) == gr.boundary_size(g, g.vertex_mask() ^ x)

    @given(graph_strategy(), st.data())
    def test_volume_additivity(self, g, data):
        x = data.draw(st.integers(0, g.vertex_mask()))
        assert gr.volume(g, x) + gr.volume(g, g.vertex_mask() ^ x) == 2 * g.edge_count()


class TestGraph6:
    def test_known_decodes(self):
        assert edge_set(gr.parse_graph6(b"Bw")) == {(0, 1), (0, 2), (1, 2)}
        assert edge_set(gr.parse_graph6(b"Ch")) == {(0, 1), (1, 2), (2, 3)}

    def test_known_encodes(self):
        assert gr.encode_graph6(gr.complete(3)) == b"Bw"
        assert gr.encode_graph6(gr.path(4)) == b"Ch"

    def test_roundtrip_canonical_length(self):
        for g6 in (b"Bw", b"Ch", b"D?{", b"FwCWw"):
            assert gr.encode_graph6(gr.parse_graph6(g6)) == g6

    @given(graph_strategy(max_n=10))
    def test_parse_encode_identity(self, g):
        assert gr.parse_graph6(gr.encode_graph6(g)) == g

    def test_rejects_malformed(self):
        with pytest.raises(gr.Graph6Error):
            gr.parse_graph6(b"")
        with pytest.raises(gr.Graph6Error):
            gr.parse_graph6(b"C")  # truncated payload
        with pytest.raises(gr.Graph6Error):
            gr.parse_graph6(b"Chh")  # excess payload
        with pytest.raises(gr.Graph6Error):
            gr.parse_graph6(b"C\x1f")  # payload byte < 63
        with pytest.raises(gr.Graph6Error):
            gr.parse_graph6(b"B\x7f")  # nonzero padding bits
        with pytest.raises(gr.Graph6Error):
            gr.parse_graph6(b"@")  # order 1 below supported range
        with pytest.raises(gr.Graph6Error):
            gr.parse_graph6(bytes([30]))  # header below 63

    def test_order_62_roundtrip(self):
        g = gr.path(62)
        assert gr.parse_graph6(gr.encode_graph6(g)) == g

    def test_agrees_with_reference_codec(self):
        nx = pytest.importorskip("networkx")
        for n, step in ((4, 1), (7, 97)):
            for mask in range(0, 1 << gr.edge_slots(n), step):
                g = gr.graph_from_mask(n, mask)
                ref = nx.from_graph6_bytes(gr.encode_graph6(g))
                assert set(map(frozenset, ref.edges())) == set(
                    map(frozenset, g.edges()))
                ours = gr.parse_graph6(
                    nx.to_graph6_bytes(ref, header=False).strip())
                assert ours == g


class TestCanonicalForm:
    def test_relabeled_path_matches(self):
        relabeled = gr.Graph.from_edges(4, [(0, 2), (0, 3), (1, 3)])
        assert gr.canonical_form(relabeled) == gr.canonical_form(gr.path(4))

    def test_complete_permutation_invariant(self):
        k4 = gr.complete(4)
        assert gr.canonical_form(k4.permuted([2, 0, 3, 1])) == gr.canonical_form(k4)

    def test_c5_self_complementary(self):
        c5 = gr.cycle(5)
        assert gr.canonical_form(c5) == gr.canonical_form(gr.complement(c5))

    def test_distinct_classes_distinct_forms(self):
        assert gr.canonical_form(gr.path(4)) != gr.canonical_form(gr.cycle(4))

    def test_rejects_beyond_limit(self):
        with pytest.raises(gr.GraphError):
            gr.canonical_form(gr.path(11))
        assert gr.canonical_form(gr.path(11), limit=11)

    def test_matches_exhaustive_minimum(self):
        # independent oracle: lex-min slot string over all n! relabelings
        slots = gr.edge_slots(4)
        for mask in range(1 << slots):
            g = gr.graph_from_mask(4, mask)
            oracle = min(
                format(gr.mask_from_graph(g.permuted(list(p))), f"0{slots}b")[::-1]
                for p in permutations(range(4)))
            assert gr.canonical_form(g).decode() == oracle

    @settings(max_examples=60)
    @given(graph_with_permutation(max_n=6))
    def test_isomorphism_invariance(self, pair):
        g, perm = pair
        assert gr.canonical_form(g.permuted(perm)) == gr.canonical_form(g)


class TestPredicates:
    def test_connectivity(self):
        assert gr.is_connected(gr.path(4))
        assert not gr.is_connected(gr.disjoint_union(gr.complete(2), gr.complete(2)))

    def test_components_partition(self):
        g = gr.disjoint_union(gr.complete(2), gr.path(3))
        comps = gr.components(g)
        assert comps == [0b00011, 0b11100]

    def test_bipartite(self):
        assert gr.is_bipartite(gr.path(4))
        assert not gr.is_bipartite(gr.cycle(5))
        assert gr.is_bipartite(gr.empty(3))

    def test_k_regular(self):
        assert gr.is_k_regular(gr.cycle(5), 2)
        assert gr.is_k_regular(gr.complete(4), 3)
        assert not gr.is_k_regular(gr.path(4), 1)

    def test_dominating_vertices(self):
        assert gr.dominating_vertices(gr.join_vertex_two_cliques(5)) == 1 << 4
        assert gr.dominating_vertices(gr.complete(3)) == 0b111
        assert gr.dominating_vertices(gr.path(4)) == 0

    def test_components_within(self):
        g = gr.join_vertex_two_cliques(5)
        rest = g.vertex_mask() & ~(1 << 4)
        assert gr.components_within(g, rest) == [0b0011, 0b1100]

    def test_is_clique(self):
        g = gr.join_vertex_two_cliques(7)
        assert gr.is_clique(g, 0b0000111)
        assert not gr.is_clique(g, 0b0011001)
