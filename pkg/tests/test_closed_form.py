import pytest

from robustcol import closed_form as cf
from robustcol.errors import DomainError, NotBipartiteError
from robustcol.families import gen_threshold
from robustcol.graph import build_graph, cycle_graph, disjoint_union, path_graph

# Exact chi1 of the (p singletons, q pairs) base, p + 2q <= 11, measured by the
# oracle once and frozen here.
FROZEN_BASE = {
    0: [0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4],
    1: [1, 1, 2, 2, 2, 3, 3, 3, 4, 4],
    2: [1, 2, 2, 2, 3, 3, 3, 4],
    3: [2, 2, 3, 3, 3, 4],
    4: [2, 3, 3, 3],
    5: [3, 3],
}


def test_base_table_frozen():
    table = cf.multipartite_base_table()
    for q, row in FROZEN_BASE.items():
        for p, v in enumerate(row):
            assert table[p, q] == v, (p, q)
    assert cf.base_identities_hold()


def test_printed_divergence_cells():
    table = cf.multipartite_base_table()
    diverge = sorted(k for k, v in table.items() if cf.printed_base(*k) != v)
    assert diverge == [(2, 1), (2, 3), (5, 1), (5, 3), (8, 1)]


class TestThreshold:
    def test_k6(self):
        G, tp = gen_threshold("dddddd")
        r = cf.chi1_threshold(G, tp)
        assert (r.value, r.clause) == (2, "ceil-third")

    def test_k6_plus_b(self):
        G, tp = gen_threshold("iiddddd")
        r = cf.chi1_threshold(G, tp)
        assert (r.value, r.clause) == (3, "not-omega-unique")

    def test_star(self):
        G, tp = gen_threshold("iiiiid")
        assert cf.chi1_threshold(G, tp).value == 1


@pytest.mark.parametrize("chi,want", [(3, 2), (4, 2), (5, 3), (6, 3), (7, 3)])
def test_split_upper(chi, want):
    assert cf.chi1_split_upper(chi) == want


def test_split_upper_rejects_bipartite():
    with pytest.raises(DomainError):
        cf.chi1_split_upper(2)


class TestMultipartiteBase:
    def test_examples(self):
        assert cf.chi1_multipartite_base(4, 0).value == 2
        assert cf.chi1_multipartite_base(0, 2).value == 1

    def test_divergence_reported(self):
        printed = cf.chi1_multipartite_base(2, 1, cf.AS_PRINTED)
        assert (printed.value, printed.clause) == (1, "base-printed")
        validated = cf.chi1_multipartite_base(2, 1, cf.ORACLE_VALIDATED)
        assert validated.value == 2 and validated.divergent and validated.printed == 1

    def test_extrapolation(self):
        r = cf.chi1_multipartite_base(14, 1)
        assert r.clause == "base-extrapolated"
        # (14,1) -> (11,1) -> (8,1) = 4, plus 2
        assert r.value == 6

    def test_bad_mode(self):
        with pytest.raises(DomainError):
            cf.chi1_multipartite_base(1, 1, "guess")


class TestMultipartite:
    def test_smallest_part_at_least_t(self):
        assert cf.chi1_multipartite([3, 3, 3]).value == 3

    def test_peeling(self):
        assert cf.peel_multipartite([2, 3]) == (1, [1])
        assert cf.chi1_multipartite([2, 3]).value == 2
        assert cf.peel_multipartite([5]) == (1, [])
        assert cf.chi1_multipartite([]).value == 0

    @pytest.mark.parametrize("n", range(1, 12))
    def test_all_singletons(self, n):
        assert cf.chi1_multipartite([1] * n).value == -(-n // 3)

    def test_rejects_unsorted(self):
        with pytest.raises(DomainError):
            cf.chi1_multipartite([3, 1])

    @pytest.mark.parametrize("sizes,bound", [
        ([1, 1, 1, 1, 1], 3), ([3, 3, 3], 3), ([1, 5, 5, 5, 5, 5, 5], 6)])
    def test_upper_bound(self, sizes, bound):
        assert cf.multipartite_upper_bound(sizes) == bound


@pytest.mark.parametrize("rst,want", [((1, 1, 2), 2), ((3, 3, 3), 3), ((2, 5, 9), 2)])
def test_tripartite(rst, want):
    assert cf.chi1_tripartite(*rst) == want


class TestBipartite:
    def test_k23(self):
        G = build_graph(5, [(u, v) for u in (0, 1) for v in (2, 3, 4)])
        assert cf.chi1_bipartite(G) == 2

    def test_forest(self):
        assert cf.chi1_bipartite(disjoint_union(path_graph(4), path_graph(3))) == 1

    def test_c6_c4(self):
        assert cf.chi1_bipartite(disjoint_union(cycle_graph(6), cycle_graph(4))) == 1

    def test_odd_cycle(self):
        with pytest.raises(NotBipartiteError):
            cf.chi1_bipartite(cycle_graph(5))


def test_misc_values():
    assert cf.chi1_bounds(7) == (3, 7)
    assert cf.chi1_chordal_upper(5) == 3
    assert [cf.chi1_r_tower(k) for k in (2, 3, 4, 5)] == [1, 2, 2, 3]
    assert cf.chi1_unit_interval_upper(6) == 3
    assert cf.ekr_bound(5, 2) == 4
    assert cf.ekr_bound(4, 2) == 3
    assert cf.hm_bound(7, 3) == 13
    assert cf.kneser_alpha1_threshold(2) == 32
    assert cf.alpha1_kneser(32, 2).value == 32
    with pytest.raises(DomainError):
        cf.alpha1_kneser(31, 2)
    assert cf.avoided_twice_bound(10, 2) == 16
