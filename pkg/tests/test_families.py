import networkx as nx
import pytest

from robustcol.errors import DomainError, InvalidPartitionError, NotThresholdError
from robustcol.families import (
    FamilyDescriptor,
    ThresholdPartition,
    gen_complete_multipartite,
    gen_kneser,
    gen_path_power,
    gen_r_tower,
    gen_random_chordal,
    gen_split_tight,
    gen_threshold,
    interval_graph_matches,
    is_omega_unique,
    is_omega_unique_threshold,
    kneser_sets,
    threshold_partition,
    validate_threshold_partition,
)
from robustcol.graph import (
    build_graph,
    chromatic_number,
    clique_number,
    complete_graph,
    cycle_graph,
    is_chordal,
    path_graph,
    petersen_graph,
)


def isomorphic(G, H):
    a, b = nx.Graph(), nx.Graph()
    a.add_nodes_from(range(G.n))
    a.add_edges_from(G.edge_list)
    b.add_nodes_from(range(H.n))
    b.add_edges_from(H.edge_list)
    return nx.is_isomorphic(a, b)


class TestMultipartite:
    def test_k4(self):
        assert gen_complete_multipartite([1, 1, 1, 1])[0] == complete_graph(4)

    def test_c4(self):
        assert isomorphic(gen_complete_multipartite([2, 2])[0], cycle_graph(4))

    def test_k4_minus_edge(self):
        G, desc = gen_complete_multipartite([1, 1, 2])
        assert G.m == 5
        assert desc.tag() == "multipartite[sizes=1,1,2]"
        assert desc.labels == ("part1", "part2", "part3", "part3")

    @pytest.mark.parametrize("sizes", [[], [0, 1], [2, 1]])
    def test_rejects(self, sizes):
        with pytest.raises(DomainError):
            gen_complete_multipartite(sizes)

    def test_unknown_kind(self):
        with pytest.raises(DomainError):
            FamilyDescriptor("nonsense", {})


class TestThreshold:
    def test_all_dominating(self):
        G, tp = gen_threshold("dddddd")
        assert G == complete_graph(6)
        assert tp.q == 6 and tp.s == 0

    def test_star_k12(self):
        G, tp = gen_threshold("iid")
        assert G.m == 2 and tp.q == 2

    def test_k6_plus_b(self):
        # two isolated vertices then five dominating: K6 on {1..6} plus vertex 0 seeing five of them
        G, tp = gen_threshold("iiddddd")
        assert clique_number(G)[0] == 6 and tp.q == 6
        b1 = tp.independent_order[0]
        assert G.degree(b1) == 5
        assert G.has_edge(tp.clique_order[-2], b1)

    def test_capital_d(self):
        assert gen_threshold("dDDiD")[0] == gen_threshold("dddid")[0]

    def test_recognise_k6(self):
        tp = threshold_partition(complete_graph(6))
        assert sorted(tp.clique_order) == list(range(6)) and tp.s == 0

    def test_recognise_star(self):
        G = build_graph(6, [(0, i) for i in range(1, 6)])
        tp = threshold_partition(G)
        assert tp.clique_order == (0, 1)
        assert sorted(tp.independent_order) == [2, 3, 4, 5]
        validate_threshold_partition(G, tp)

    def test_c4_not_threshold(self):
        with pytest.raises(NotThresholdError):
            threshold_partition(cycle_graph(4))

    def test_validator_rejects(self):
        G, _ = gen_threshold("iid")
        with pytest.raises(InvalidPartitionError):
            validate_threshold_partition(G, ThresholdPartition((0, 1), (2,)))

    def test_omega_unique(self):
        G, tp = gen_threshold("dddddd")
        assert is_omega_unique_threshold(G, tp) and is_omega_unique(G)
        G, tp = gen_threshold("iiddddd")
        assert not is_omega_unique_threshold(G, tp) and not is_omega_unique(G)

    def test_k12_both_answers(self):
        G, tp = gen_threshold("iid")
        assert is_omega_unique_threshold(G, tp) is False
        assert is_omega_unique(G) is False

    def test_pendant_variant(self):
        # five dominating, isolated, dominating: the last vertex is a pendant on vertex 5
        G, tp = gen_threshold("dddddid")
        assert is_omega_unique(G) and is_omega_unique_threshold(G, tp)


class TestSplitTight:
    @pytest.mark.parametrize("t,m", [(3, 9), (4, 18), (5, 30), (6, 45)])
    def test_sizes(self, t, m):
        G, desc = gen_split_tight(t)
        assert G.n == 2 * t and G.m == m
        assert len(desc.extra["clique"]) == t

    def test_t2_rejected(self):
        with pytest.raises(DomainError):
            gen_split_tight(2)


class TestKneser:
    def test_petersen(self):
        G, desc = gen_kneser(5, 2)
        assert isomorphic(G, petersen_graph())
        assert desc.labels[0] == "{1,2}"

    def test_matching(self):
        G, _ = gen_kneser(4, 2)
        assert G.n == 6 and G.m == 3 and all(G.degree(v) == 1 for v in range(6))

    def test_kg62_frozen(self):
        G, _ = gen_kneser(6, 2)
        assert G.n == 15 and G.m == 45

    def test_colex_order(self):
        assert kneser_sets(4, 2) == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]


class TestPathPowerAndTower:
    def test_p5(self):
        assert gen_path_power(5, 1)[0] == path_graph(5)

    def test_k5(self):
        assert gen_path_power(5, 4)[0] == complete_graph(5)

    def test_p9_squared(self):
        G, _ = gen_path_power(9, 2)
        assert clique_number(G)[0] == 3 and chromatic_number(G)[0] == 3

    def test_towers(self):
        assert gen_r_tower(2)[0] == complete_graph(2)
        G3, _ = gen_r_tower(3)
        assert G3.n == 4 and G3.m == 5 and clique_number(G3)[0] == 3
        G4, d4 = gen_r_tower(4)
        assert G4.n == 8 and clique_number(G4)[0] == 4
        assert interval_graph_matches(G4, d4.extra["intervals"])

    @pytest.mark.parametrize("k", range(2, 7))
    def test_tower_is_chordal_with_omega_k(self, k):
        G, desc = gen_r_tower(k)
        assert is_chordal(G)
        assert clique_number(G, limit=G.n)[0] == k
        assert interval_graph_matches(G, desc.extra["intervals"])


class TestRandomChordal:
    def test_extremes(self):
        assert gen_random_chordal(7, 1.0, 3)[0] == complete_graph(7)
        assert gen_random_chordal(7, 0.0, 3)[0].m == 0

    @pytest.mark.parametrize("seed", range(20))
    def test_chordal(self, seed):
        G, _ = gen_random_chordal(25, 0.6, seed)
        assert is_chordal(G)

    def test_deterministic(self):
        assert gen_random_chordal(30, 0.5, 9)[0] == gen_random_chordal(30, 0.5, 9)[0]
