import random
from fractions import Fraction

import pytest

from hamtough import (
    Graph,
    Graph6Error,
    all_labeled_graphs,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    degree_sequence,
    disjoint_union,
    empty_graph,
    encode_graph6,
    parse_graph6,
    path_graph,
    petersen_graph,
    random_graph,
    sample_t_tough_graph,
    star_graph,
)
from oracles import nx_graph6, nx_parse_graph6


class TestGraphBasics:
    def test_edges_and_degrees(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert g.edge_count == 3
        assert g.has_edge(1, 0) and not g.has_edge(0, 2)
        assert g.degrees() == (1, 2, 2, 1)
        assert sorted(g.neighbors(1)) == [0, 2]

    def test_rejects_loops_and_bad_vertices(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(0, [])

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_add_edge_is_persistent(self):
        g = path_graph(4)
        h = g.add_edge(0, 3)
        assert not g.has_edge(0, 3) and h.has_edge(0, 3)
        assert h.add_edge(0, 3) == h

    def test_equality_and_hash(self):
        a = Graph(3, [(0, 1), (1, 2)])
        b = path_graph(3)
        assert a == b and hash(a) == hash(b)
        assert a != Graph(3, [(0, 1)])

    def test_from_neighbor_sets_validates(self):
        g = Graph.from_neighbor_sets([{1}, {0, 2}, {1}])
        assert g == path_graph(3)
        with pytest.raises(ValueError):
            Graph.from_neighbor_sets([{1}, {2}, {1}])  # asymmetric
        with pytest.raises(ValueError):
            Graph.from_neighbor_sets([{0}, {0}])  # loop
        with pytest.raises(ValueError):
            Graph.from_neighbor_sets([{5}, {0}])

    def test_induced_subgraph_mapping(self):
        g = cycle_graph(5)
        sub, old = g.induced([1, 2, 4])
        assert old == (1, 2, 4)
        assert sub.n == 3
        assert sub.has_edge(0, 1)  # 1-2 survives
        assert not sub.has_edge(0, 2) and not sub.has_edge(1, 2)

    def test_is_connected_and_complete(self):
        assert complete_graph(5).is_complete()
        assert not cycle_graph(5).is_complete()
        assert complete_graph(1).is_complete()
        assert cycle_graph(5).is_connected()
        assert not disjoint_union(complete_graph(3), complete_graph(3)).is_connected()


class TestComponents:
    def test_component_sets(self):
        g = disjoint_union(path_graph(2), path_graph(3))
        assert components(g) == [frozenset({0, 1}), frozenset({2, 3, 4})]

    def test_removed_vertices(self):
        g = path_graph(5)
        assert components(g, removed=[2]) == [frozenset({0, 1}), frozenset({3, 4})]
        assert components(g, removed=range(5)) == []

    def test_order_by_smallest_member(self):
        g = Graph(4, [(0, 3), (1, 2)])
        assert components(g) == [frozenset({0, 3}), frozenset({1, 2})]


class TestDegreeSequence:
    def test_sorted_with_vertex_order(self):
        g = star_graph(3)
        seq, order = degree_sequence(g)
        assert seq == (1, 1, 1, 3)
        assert order == (1, 2, 3, 0)

    def test_ties_by_vertex_id(self):
        seq, order = degree_sequence(cycle_graph(4))
        assert seq == (2, 2, 2, 2)
        assert order == (0, 1, 2, 3)


class TestGraph6:
    # spot values checked against the format definition by hand
    CASES = [
        ("@", empty_graph(1)),
        ("A_", complete_graph(2)),
        ("A?", empty_graph(2)),
        ("B?", empty_graph(3)),
        ("Bg", path_graph(3)),
        ("Ds_", star_graph(4)),
        ("D?{", Graph(5, [(0, 4), (1, 4), (2, 4), (3, 4)])),
        ("DUW", Graph(5, [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)])),
        ("Dhc", cycle_graph(5)),
        ("D~{", complete_graph(5)),
    ]

    @pytest.mark.parametrize("text,graph", CASES)
    def test_spot_encodings(self, text, graph):
        assert encode_graph6(graph) == text
        assert parse_graph6(text) == graph

    def test_prefix_and_newline_tolerated(self):
        assert parse_graph6(">>graph6<<A_\n") == complete_graph(2)

    def test_large_order_headers(self):
        for n in (62, 63, 64, 100):
            g = path_graph(n)
            assert parse_graph6(encode_graph6(g)) == g

    @pytest.mark.parametrize(
        "text,offset",
        [
            ("", 0),  # empty
            ("D?", 2),  # truncated edge field
            ("D?{?", 3),  # trailing garbage
            ("A`", 1),  # nonzero padding bits
            ("A" + chr(32), 1),  # byte below graph6 alphabet
            ("~", 1),  # truncated extended header
        ],
    )
    def test_malformed_inputs_report_offsets(self, text, offset):
        with pytest.raises(Graph6Error) as err:
            parse_graph6(text)
        assert err.value.offset == offset

    def test_rejects_empty_order(self):
        # n = 0 encodes as "?" but we require at least one vertex
        with pytest.raises(Graph6Error):
            parse_graph6("?")

    def test_roundtrip_against_networkx(self):
        rng = random.Random(20240601)
        checked = 0
        while checked < 1200:
            n = rng.randint(1, 30)
            p = Fraction(rng.randint(0, 10), 10)
            g = random_graph(n, p, rng.getrandbits(32))
            ours = encode_graph6(g)
            assert ours == nx_graph6(g)
            assert parse_graph6(ours) == g
            assert nx_parse_graph6(ours) == g
            checked += 1

    def test_named_graphs_against_networkx(self):
        for g in (petersen_graph(), complete_bipartite_graph(3, 4), star_graph(9)):
            assert encode_graph6(g) == nx_graph6(g)


class TestEnumeration:
    def test_counts(self):
        assert sum(1 for _ in all_labeled_graphs(1)) == 1
        assert sum(1 for _ in all_labeled_graphs(3)) == 8
        assert sum(1 for _ in all_labeled_graphs(4)) == 64

    def test_edge_mask_order(self):
        got = list(all_labeled_graphs(3))
        assert got[0] == empty_graph(3)
        assert got[-1] == complete_graph(3)
        assert got[1] == Graph(3, [(0, 1)])  # lowest bit = lex-first pair

    def test_no_duplicates(self):
        seen = {encode_graph6(g) for g in all_labeled_graphs(4)}
        assert len(seen) == 64


class TestRandomGraph:
    def test_determinism(self):
        a = random_graph(12, Fraction(1, 2), seed=7)
        b = random_graph(12, Fraction(1, 2), seed=7)
        assert a == b
        assert a != random_graph(12, Fraction(1, 2), seed=8)

    def test_extreme_probabilities(self):
        assert random_graph(8, 0, seed=1) == empty_graph(8)
        assert random_graph(8, 1, seed=1) == complete_graph(8)

    def test_rejects_bad_probability(self):
        with pytest.raises(ValueError):
            random_graph(5, Fraction(3, 2), seed=0)

    def test_density_tracks_p(self):
        total = sum(
            random_graph(20, Fraction(1, 4), seed=s).edge_count
            for s in range(40)
        )
        mean = total / 40
        assert 35 < mean < 60  # 190 pairs at p=1/4 -> expect ~47.5


class TestToughSampler:
    def test_finds_one_tough_graph(self):
        sample = sample_t_tough_graph(12, 1, max_trials=200, seed=5)
        assert sample.graph is not None
        assert sample.graph.n == 12
        assert min(sample.graph.degrees()) >= 2
        assert 1 <= sample.trials <= 200

    def test_small_order_high_toughness_fails(self):
        # 5/2-tough needs minimum degree >= 5, impossible on 4 vertices
        sample = sample_t_tough_graph(4, Fraction(5, 2), max_trials=60, seed=5)
        assert sample.graph is None
        assert sample.trials == 60

    def test_triangle_is_only_one_tough_graph_on_three(self):
        sample = sample_t_tough_graph(3, 1, max_trials=50, seed=1)
        assert sample.graph == complete_graph(3)

    def test_deterministic(self):
        a = sample_t_tough_graph(10, Fraction(3, 2), max_trials=300, seed=42)
        b = sample_t_tough_graph(10, Fraction(3, 2), max_trials=300, seed=42)
        assert a == b
