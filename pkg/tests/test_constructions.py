import pytest

from robustcol import constructions as cons
from robustcol.closed_form import multipartite_base_table
from robustcol.errors import DomainError
from robustcol.families import (
    gen_complete_multipartite,
    gen_kneser,
    gen_split_tight,
    gen_threshold,
    kneser_sets,
)
from robustcol.graph import (
    apply_selection,
    build_graph,
    complete_graph,
    disjoint_union,
    path_graph,
)
from robustcol.oracle import chi1_exact, verify_robust_coloring, verify_robust_independent


def test_forest_erasing():
    G = build_graph(3, [(0, 1), (1, 2)])
    f = cons.forest_erasing_selection(G)
    assert f.single() == {1: (0, 1), 2: (1, 2)}
    F = disjoint_union(path_graph(4), build_graph(5, [(0, i) for i in range(1, 5)]))
    assert apply_selection(F, cons.forest_erasing_selection(F)).m == 0


def test_star_erasing():
    G = build_graph(5, [(0, i) for i in range(1, 5)])
    f = cons.star_erasing_selection(G, 0, [1, 2, 3, 4])
    assert all(f.single()[v] == (0, v) for v in range(1, 5))


class TestChordal:
    @pytest.mark.parametrize("n,blocks", [(4, 2), (5, 3), (6, 3), (1, 1)])
    def test_complete(self, n, blocks):
        cert = cons.construct_chordal_half(complete_graph(n))
        assert cert.num_blocks == blocks
        assert verify_robust_coloring(complete_graph(n), cert)

    def test_tree(self):
        assert cons.construct_chordal_half(path_graph(9)).num_blocks == 1


class TestThreshold:
    @pytest.mark.parametrize("seq,blocks", [("dddddd", 2), ("iiddddd", 3), ("iiiiid", 1)])
    def test_blocks(self, seq, blocks):
        G, tp = gen_threshold(seq)
        cert = cons.construct_threshold_coloring(G, tp)
        assert cert.num_blocks == blocks
        assert verify_robust_coloring(G, cert)

    def test_k6_blocks_are_triples(self):
        G, tp = gen_threshold("dddddd")
        cert = cons.construct_threshold_coloring(G, tp)
        assert sorted(len(b) for b in cert.parts) == [3, 3]


class TestSplit:
    @pytest.mark.parametrize("t,blocks", [(3, 2), (4, 2), (5, 3), (6, 3)])
    def test_tight(self, t, blocks):
        G, desc = gen_split_tight(t)
        cert = cons.construct_split_coloring(G, desc.extra["clique"], desc.extra["independent"])
        assert cert.num_blocks == blocks
        assert verify_robust_coloring(G, cert)

    def test_clique_only(self):
        G = complete_graph(5)
        cert = cons.construct_split_coloring(G, range(5), [])
        assert cert.num_blocks == 2 and verify_robust_coloring(G, cert)


class TestUnitInterval:
    def test_square(self):
        cert = cons.construct_unit_interval_coloring(9, 2)
        assert cert.num_blocks == 2

    def test_path(self):
        assert cons.construct_unit_interval_coloring(6, 1).num_blocks == 1

    def test_fifth_power(self):
        G, _ = cons.path_power_subgraph(30, 5)
        cert = cons.construct_unit_interval_coloring(30, 5)
        assert cert.num_blocks == 3 and verify_robust_coloring(G, cert)

    def test_induced(self):
        subset = [0, 2, 3, 7, 8, 9, 10, 15]
        G, pos = cons.path_power_subgraph(20, 4, subset)
        assert pos == subset
        assert verify_robust_coloring(G, cons.construct_unit_interval_coloring(20, 4, subset))


class TestMultipartite:
    @pytest.mark.parametrize("sizes,blocks", [
        ([3, 3, 3], 3), ([2, 2], 1), ([1, 1, 2], 2), ([2, 3], 2), ([1, 2, 2, 2, 2], 3)])
    def test_blocks(self, sizes, blocks):
        G, _ = gen_complete_multipartite(sizes)
        cert = cons.construct_multipartite_coloring(sizes)
        assert cert.num_blocks == blocks
        assert verify_robust_coloring(G, cert)
        assert chi1_exact(G)[0] == blocks

    def test_base_values_match_frozen_table(self):
        for (p, q), v in multipartite_base_table().items():
            assert cons.multipartite_base_value(p, q) == v


class TestKneser:
    def test_alpha1_petersen(self):
        G, _ = gen_kneser(5, 2)
        cert = cons.construct_kneser_alpha1(5, 2)
        assert cert.size == 5 and verify_robust_independent(G, cert)

    def test_alpha1_73(self):
        G, _ = gen_kneser(7, 3)
        cert = cons.construct_kneser_alpha1(7, 3)
        assert cert.size == 16 and verify_robust_independent(G, cert)

    def test_alpha1_boundary(self):
        with pytest.raises(DomainError):
            cons.construct_kneser_alpha1(4, 2)

    def test_3k_family(self):
        G, desc = gen_kneser(6, 2)
        cert = cons.construct_kneser_3k_family(2)
        assert cert.size == 7 and verify_robust_independent(G, cert)
        sets = [desc.extra["sets"][i] for i in cert.subset]
        assert [s for s in sets if 1 not in s] == [(3, 4), (5, 6)]
        G9, _ = gen_kneser(9, 3)
        cert9 = cons.construct_kneser_3k_family(3)
        assert cert9.size == 30 and verify_robust_independent(G9, cert9)

    @pytest.mark.parametrize("n,c,blocks", [(5, 4, 2), (6, 4, 3), (4, 4, 1)])
    def test_chi1(self, n, c, blocks):
        G, _ = gen_kneser(n, 2)
        assert cons.kneser_c(n, 2) == c
        cert = cons.construct_kneser_chi1(n, 2)
        assert cert.num_blocks == blocks and verify_robust_coloring(G, cert)

    def test_chi1_kg62_matches_oracle(self):
        G, _ = gen_kneser(6, 2)
        assert chi1_exact(G)[0] == 3

    def test_extra_family_checker(self):
        assert cons.check_extra_family(3, 1, [(1, 2, 3), (1, 4, 5)]) is None
        assert "disjoint" in cons.check_extra_family(3, 1, [(1, 2, 3), (4, 5, 6)])
        assert "union" in cons.check_extra_family(3, 1, [(1, 2, 3), (1, 2, 4)])
        with pytest.raises(DomainError):
            cons.extra_family_certificate(3, 1, [(1, 2, 3), (4, 5, 6)])

    def test_star_like(self):
        fam = kneser_sets(5, 2)
        assert not cons.is_star_like(fam, 1)
        assert cons.is_star_like([s for s in fam if 1 in s] + [(2, 3)], 1)
        assert cons.avoids_every_element_twice([(1, 2), (3, 4), (1, 3), (2, 4)], 4)
