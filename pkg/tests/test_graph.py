import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unidom import (
    Bipartition,
    Graph,
    Graph6Error,
    are_isomorphic,
    bipartite_complement,
    bit_list,
    degree_sequence,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    find_bipartition,
    from_edge_list,
    mask_of,
    parse_edge_list,
    parse_graph6,
)

from conftest import bipartite_graphs, brute_force_isomorphic, graphs, random_bipartite


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


class TestFromEdgeList:
    def test_p3(self):
        g = from_edge_list(3, [(0, 1), (1, 2)])
        assert g.size() == 2
        assert g.degree(1) == 2

    def test_single_vertex(self):
        g = from_edge_list(1, [])
        assert g.n == 1 and g.size() == 0

    def test_duplicates_collapse(self):
        g = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
        assert g.size() == 1

    def test_reference_graph_size(self, reference_10_3):
        assert reference_10_3.size() == 15

    def test_endpoint_out_of_range(self):
        with pytest.raises(ValueError):
            from_edge_list(3, [(0, 3)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            from_edge_list(3, [(1, 1)])

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            Graph(65, tuple([0] * 65))

    def test_asymmetry_rejected(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0b00))


class TestDegreeSequence:
    def test_triangle(self):
        assert degree_sequence(cycle(3)) == [2, 2, 2]

    def test_edgeless(self):
        assert degree_sequence(from_edge_list(4, [])) == [0, 0, 0, 0]

    def test_reference_graph(self, reference_10_3):
        # hand count from the entered edge list
        assert degree_sequence(reference_10_3) == [5, 5, 3, 3, 3, 3, 3, 2, 2, 1]


class TestBipartition:
    def test_even_cycle(self):
        p = find_bipartition(cycle(4))
        assert p is not None
        assert p.a == mask_of([0, 2]) and p.b == mask_of([1, 3])

    def test_odd_cycle(self):
        assert find_bipartition(cycle(3)) is None

    def test_reference_graph_sides(self, reference_10_3):
        # a11, a12, a21, a22, x1 must land on one common side
        p = find_bipartition(reference_10_3)
        assert p is not None
        one_side = mask_of([0, 5, 6, 7, 8])
        assert p.a & one_side in (0, one_side)
        assert p.b & one_side in (0, one_side)

    def test_disconnected_roots_on_a(self):
        g = from_edge_list(6, [(0, 1), (2, 3), (4, 5)])
        p = find_bipartition(g)
        assert p.a == mask_of([0, 2, 4])

    @given(graphs(max_n=9))
    def test_partition_valid_when_found(self, g):
        p = find_bipartition(g)
        if p is not None:
            assert p.a & p.b == 0
            assert (p.a | p.b) == g.full_mask
            for u, v in g.edges():
                assert ((p.a >> u) & 1) != ((p.a >> v) & 1)


class TestBipartiteComplement:
    def test_complete_to_edgeless(self):
        g = from_edge_list(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
        p = Bipartition(mask_of([0, 1]), mask_of([2, 3, 4]))
        assert bipartite_complement(g, p).size() == 0

    def test_edgeless_to_complete(self):
        g = from_edge_list(4, [])
        p = Bipartition(mask_of([0, 1]), mask_of([2, 3]))
        assert bipartite_complement(g, p).size() == 4

    def test_invalid_partition_rejected(self):
        g = from_edge_list(3, [(0, 1)])
        with pytest.raises(ValueError):
            bipartite_complement(g, Bipartition(mask_of([0, 1]), mask_of([2])))

    def test_involution_on_random_sample(self):
        rng = random.Random(20260808)
        for _ in range(100):
            n = rng.randint(2, 12)
            g, side = random_bipartite(rng, n, rng.uniform(0.1, 0.9))
            p = Bipartition(side, g.full_mask & ~side)
            assert bipartite_complement(bipartite_complement(g, p), p) == g

    @given(bipartite_graphs(max_n=10))
    def test_sizes_sum_to_grid(self, pair):
        g, side = pair
        p = Bipartition(side, g.full_mask & ~side)
        bc = bipartite_complement(g, p)
        assert g.size() + bc.size() == side.bit_count() * (g.n - side.bit_count())


def _reference_graph6(g: Graph) -> str:
    """Second, independent encoder: string-of-bits construction."""
    if g.n <= 62:
        head = chr(63 + g.n)
    else:
        head = "~" + "".join(
            chr(63 + int(f"{g.n:018b}"[i : i + 6], 2)) for i in (0, 6, 12)
        )
    bits = ""
    for j in range(1, g.n):
        for i in range(j):
            bits += "1" if g.has_edge(i, j) else "0"
    while len(bits) % 6:
        bits += "0"
    body = "".join(chr(63 + int(bits[i : i + 6], 2)) for i in range(0, len(bits), 6))
    return head + body


class TestGraph6:
    def test_edgeless_n3(self):
        # hand-encoded: order byte 'B', empty payload packs to '?'
        assert emit_graph6(from_edge_list(3, [])) == "B?"

    def test_known_one_edge(self):
        g = parse_graph6("B_")
        assert g.n == 3 and g.edges() == [(0, 1)]
        assert emit_graph6(g) == "B_"

    def test_matches_reference_encoder_exhaustive_n5(self):
        for n in range(6):
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            for picks in range(1 << len(pairs)):
                g = from_edge_list(n, [pairs[i] for i in bit_list(picks)])
                s = emit_graph6(g)
                assert s == _reference_graph6(g)
                assert parse_graph6(s) == g

    def test_roundtrip_exhaustive_n6(self):
        self._roundtrip_all(6)

    @pytest.mark.slow
    def test_roundtrip_exhaustive_n7(self):
        self._roundtrip_all(7)

    @staticmethod
    def _roundtrip_all(n):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for picks in range(1 << len(pairs)):
            rows = [0] * n
            for i in bit_list(picks):
                u, v = pairs[i]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            g = Graph(n, tuple(rows))
            assert parse_graph6(emit_graph6(g)) == g

    def test_roundtrip_random_n12(self):
        rng = random.Random(1234)
        for _ in range(1000):
            n = rng.randint(0, 12)
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.4
            ]
            g = from_edge_list(n, edges)
            assert parse_graph6(emit_graph6(g)) == g

    def test_long_form_order(self):
        g = from_edge_list(63, [(0, 62)])
        s = emit_graph6(g)
        assert s.startswith("~")
        assert parse_graph6(s) == g

    def test_header_prefix_accepted(self):
        assert parse_graph6(">>graph6<<B?").n == 3

    def test_truncated_payload(self):
        with pytest.raises(Graph6Error):
            parse_graph6("D")  # n=5 needs payload bytes

    def test_bad_byte(self):
        with pytest.raises(Graph6Error):
            parse_graph6("B\x1f")

    def test_trailing_garbage(self):
        with pytest.raises(Graph6Error):
            parse_graph6("B??")


class TestEdgeListFormat:
    def test_roundtrip(self, reference_10_3):
        assert parse_edge_list(emit_edge_list(reference_10_3)) == reference_10_3

    def test_header_mismatch(self):
        with pytest.raises(ValueError):
            parse_edge_list("3 2\n0 1\n")


class TestDot:
    def test_labels_present(self):
        g = from_edge_list(2, [(0, 1)])
        out = emit_dot(g, labels={0: "x1", 1: "b1,1"})
        assert 'label="x1"' in out and "0 -- 1;" in out


class TestIsomorphism:
    def test_relabelled_path(self):
        g = path(3)
        h = from_edge_list(3, [(2, 1), (1, 0)])
        assert are_isomorphic(g, h)

    def test_different_sizes(self):
        assert not are_isomorphic(path(3), cycle(3))

    def test_same_degseq_not_isomorphic(self):
        # C6 vs two triangles: both 2-regular on six vertices
        g = cycle(6)
        h = from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert not are_isomorphic(g, h)

    @given(graphs(max_n=7), st.randoms(use_true_random=False))
    @settings(max_examples=60)
    def test_invariant_under_permutation(self, g, rng):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert are_isomorphic(g, h)

    @given(graphs(max_n=7), graphs(max_n=7))
    @settings(max_examples=60, deadline=None)
    def test_agrees_with_brute_force(self, g, h):
        assert are_isomorphic(g, h) == brute_force_isomorphic(g, h)

    def test_reflexive_symmetric_sample(self):
        rng = random.Random(7)
        gs = []
        for _ in range(10):
            n = rng.randint(1, 8)
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.5
            ]
            gs.append(from_edge_list(n, edges))
        for g in gs:
            assert are_isomorphic(g, g)
        for g in gs:
            for h in gs:
                assert are_isomorphic(g, h) == are_isomorphic(h, g)
