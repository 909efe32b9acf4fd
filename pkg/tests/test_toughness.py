import random
from fractions import Fraction
from itertools import combinations

import pytest

from hamtough import (
    INFINITE,
    Graph,
    InstanceTooLarge,
    all_labeled_graphs,
    complete_bipartite_graph,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    is_t_tough,
    path_graph,
    petersen_graph,
    random_graph,
    star_graph,
    toughness,
)
from oracles import naive_is_t_tough, naive_toughness


class TestSpotValues:
    def test_cycle_five(self):
        rep = toughness(cycle_graph(5))
        assert rep.value == 1
        assert rep.witness == frozenset({0, 2})

    def test_complete_six_is_infinite(self):
        rep = toughness(complete_graph(6))
        assert rep.is_infinite
        assert rep.witness is None
        assert rep.value > 100 and rep.value >= Fraction(5, 2)

    def test_petersen(self):
        assert toughness(petersen_graph()).value == Fraction(4, 3)

    def test_path_three(self):
        rep = toughness(path_graph(3))
        assert rep.value == Fraction(1, 2)
        assert rep.witness == frozenset({1})

    def test_disconnected_is_zero(self):
        rep = toughness(disjoint_union(complete_graph(3), complete_graph(3)))
        assert rep.value == 0
        assert rep.witness == frozenset()

    def test_single_vertex_is_complete(self):
        assert toughness(complete_graph(1)).is_infinite

    def test_star(self):
        rep = toughness(star_graph(6))
        assert rep.value == Fraction(1, 6)
        assert rep.witness == frozenset({0})

    def test_complete_bipartite(self):
        # removing the smaller side leaves the larger side isolated
        rep = toughness(complete_bipartite_graph(2, 4))
        assert rep.value == Fraction(2, 4)
        assert rep.witness == frozenset({0, 1})


class TestWitnesses:
    def test_witness_attains_value(self):
        rng = random.Random(77)
        for _ in range(150):
            n = rng.randint(2, 8)
            g = random_graph(n, Fraction(1, 2), rng.getrandbits(32))
            rep = toughness(g)
            if rep.is_infinite:
                assert g.is_complete()
                continue
            cut = rep.witness
            comps = components(g, removed=cut)
            if rep.value == 0:
                assert cut == frozenset() and len(comps) >= 2
            else:
                assert len(comps) >= 2
                assert Fraction(len(cut), len(comps)) == rep.value

    def test_at_least_helper(self):
        rep = toughness(cycle_graph(6))
        assert rep.at_least(1) and rep.at_least(Fraction(1, 2))
        assert not rep.at_least(Fraction(3, 2))
        assert toughness(complete_graph(4)).at_least(10 ** 6)


class TestOracleAgreement:
    def test_exhaustive_small(self):
        for n in range(1, 6):
            for g in all_labeled_graphs(n):
                rep = toughness(g)
                expected = naive_toughness(g)
                if expected is None:
                    assert rep.is_infinite
                else:
                    assert rep.value == expected

    def test_random_medium(self):
        rng = random.Random(4242)
        for _ in range(250):
            n = rng.randint(6, 9)
            p = Fraction(rng.randint(2, 8), 10)
            g = random_graph(n, p, rng.getrandbits(32))
            rep = toughness(g)
            expected = naive_toughness(g)
            if expected is None:
                assert rep.is_infinite
            else:
                assert rep.value == expected


class TestIsTTough:
    def test_matches_threshold_comparison(self):
        rng = random.Random(99)
        grid = [Fraction(1, 2), 1, Fraction(4, 3), 2, Fraction(5, 2), 3]
        for _ in range(120):
            n = rng.randint(2, 8)
            g = random_graph(n, Fraction(1, 2), rng.getrandbits(32))
            rep = toughness(g)
            for t in grid:
                assert bool(is_t_tough(g, t)) == (rep.value >= t)

    def test_zero_threshold_always_holds(self):
        assert is_t_tough(disjoint_union(complete_graph(2), complete_graph(2)), 0)

    def test_violating_cutset_is_real(self):
        rng = random.Random(13)
        for _ in range(80):
            g = random_graph(7, Fraction(2, 5), rng.getrandbits(32))
            chk = is_t_tough(g, Fraction(3, 2))
            if not chk:
                cut = chk.violating_cutset
                comps = components(g, removed=cut)
                assert len(comps) >= 2
                assert Fraction(len(cut), len(comps)) < Fraction(3, 2)

    def test_path_witness(self):
        chk = is_t_tough(path_graph(3), 1)
        assert not chk
        assert chk.violating_cutset == frozenset({1})

    def test_oracle_agreement(self):
        rng = random.Random(500)
        for _ in range(60):
            g = random_graph(7, Fraction(1, 2), rng.getrandbits(32))
            for t in (1, Fraction(3, 2), 2):
                assert bool(is_t_tough(g, t)) == naive_is_t_tough(g, t)


class TestConsequences:
    def test_adding_edges_never_hurts(self):
        rng = random.Random(321)
        for _ in range(80):
            g = random_graph(7, Fraction(2, 5), rng.getrandbits(32))
            rep = toughness(g)
            nonadj = [
                (u, v)
                for u, v in combinations(range(7), 2)
                if not g.has_edge(u, v)
            ]
            if not nonadj:
                continue
            u, v = nonadj[rng.randrange(len(nonadj))]
            bumped = toughness(g.add_edge(u, v))
            if rep.is_infinite:
                assert bumped.is_infinite
            else:
                assert bumped.is_infinite or bumped.value >= rep.value

    def test_tough_incomplete_graphs_have_high_degree(self):
        rng = random.Random(654)
        for _ in range(80):
            g = random_graph(8, Fraction(3, 5), rng.getrandbits(32))
            if g.is_complete():
                continue
            rep = toughness(g)
            assert min(g.degrees()) >= 2 * rep.value


class TestInfiniteSentinel:
    def test_comparisons(self):
        assert INFINITE > Fraction(10 ** 9)
        assert INFINITE >= Fraction(10 ** 9)
        assert not (INFINITE < 5) and not (INFINITE <= 5)
        assert INFINITE <= INFINITE and INFINITE >= INFINITE
        assert Fraction(3, 2) < INFINITE and not (Fraction(3, 2) >= INFINITE)


class TestCaps:
    def test_default_cap(self):
        with pytest.raises(InstanceTooLarge):
            toughness(path_graph(25))

    def test_explicit_override(self):
        rep = toughness(star_graph(24), max_n=25)
        assert rep.value == Fraction(1, 24)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("TOUGH_CLOSURE_MAX_N", "25")
        rep = toughness(star_graph(24))
        assert rep.value == Fraction(1, 24)

    def test_is_t_tough_cap(self):
        with pytest.raises(InstanceTooLarge):
            is_t_tough(path_graph(25), 1)
        assert not is_t_tough(path_graph(25), 1, max_n=25)
