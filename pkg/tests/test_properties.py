"""Randomised invariants checked with hypothesis."""

import itertools

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from robustcol import _subsets
from robustcol import closed_form as cf
from robustcol import constructions as cons
from robustcol.families import gen_complete_multipartite, gen_random_chordal
from robustcol.fileformats import format_coloring_certificate, parse_certificate
from robustcol.graph import (
    Graph,
    Selection,
    apply_selection,
    chromatic_number,
    disjoint_union,
    independence_number,
    is_quasi_unicyclic,
    is_removable_edge_set,
)
from robustcol.oracle import (
    alpha1_exact,
    chi1_exact,
    erasing_selection,
    omega1_exact,
    verify_robust_coloring,
    verify_robust_independent,
)

SETTINGS = settings(max_examples=60, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, k in zip(pairs, keep) if k))


@st.composite
def graph_and_selection(draw):
    G = draw(graphs())
    choice = {}
    for v in range(G.n):
        inc = [e for e in G.edge_list if v in e]
        pick = draw(st.sampled_from([None] + inc))
        if pick is not None:
            choice[v] = (pick,)
    return G, Selection(choice)


@SETTINGS
@given(graphs())
def test_chi1_between_bounds(G):
    chi = chromatic_number(G)[0]
    k, cert = chi1_exact(G)
    lo, hi = cf.chi1_bounds(chi)
    assert lo <= k <= hi
    assert verify_robust_coloring(G, cert)
    assert (k <= 1) == is_quasi_unicyclic(G)


@SETTINGS
@given(graphs(max_n=7))
def test_omega1_at_most_chi1(G):
    assert omega1_exact(G)[0] <= chi1_exact(G)[0]


@SETTINGS
@given(graphs())
def test_alpha1_dominates(G):
    a1, cert = alpha1_exact(G)
    assert a1 >= independence_number(G)[0]
    assert verify_robust_independent(G, cert)
    # every block of a robust colouring is robust independent
    assert a1 * chi1_exact(G)[0] >= G.n


@SETTINGS
@given(graphs(), st.data())
def test_monotone_under_edge_deletion(G, data):
    if not G.m:
        return
    e = data.draw(st.sampled_from(G.edge_list))
    H = Graph(G.n, G.edges - {e})
    assert chi1_exact(H)[0] <= chi1_exact(G)[0]
    assert alpha1_exact(H)[0] >= alpha1_exact(G)[0]


@SETTINGS
@given(graphs(max_n=6), graphs(max_n=6))
def test_disjoint_union_takes_max(G, H):
    assert chi1_exact(disjoint_union(G, H))[0] == max(chi1_exact(G)[0], chi1_exact(H)[0])


@SETTINGS
@given(graph_and_selection())
def test_selection_images_are_removable(pair):
    G, f = pair
    assert is_removable_edge_set(G, f.image())
    assert apply_selection(G, f).m == G.m - len(f.image())


@SETTINGS
@given(graphs())
def test_erasing_selection_clears_quasi_unicyclic(G):
    if is_quasi_unicyclic(G):
        assert apply_selection(G, erasing_selection(G.n, G.edge_list)).m == 0


@SETTINGS
@given(graphs(max_n=10))
def test_counting_cover_matches_dp(G):
    flags = _subsets.quasi_unicyclic_flags(G.adj, G.n)
    k_dp, _ = _subsets._min_cover_dp(flags.tolist(), G.n)
    k_ct, blocks = _subsets._min_cover_counting(flags, G.n)
    assert k_dp == k_ct
    assert sum(blocks) == G.full_mask and all(flags[b] for b in blocks)


@SETTINGS
@given(graphs(max_n=8))
def test_edge_counts_match_direct(G):
    counts = _subsets.induced_edge_counts(G.adj, G.n)
    for S in range(1 << G.n):
        assert counts[S] == G.edges_within(S)
    assert np.all(_subsets.popcounts(G.n) == [bin(S).count("1") for S in range(1 << G.n)])


@SETTINGS
@given(graphs())
def test_certificate_file_round_trip(G):
    _, cert = chi1_exact(G)
    _, back = parse_certificate(format_coloring_certificate(G.n, cert))
    assert verify_robust_coloring(G, back)


@SETTINGS
@given(st.integers(1, 30), st.floats(0, 1), st.integers(0, 10**6))
def test_chordal_half_blocks(n, density, seed):
    G, _ = gen_random_chordal(n, density, seed)
    cert = cons.construct_chordal_half(G)
    chi = chromatic_number(G, limit=max(n, 24))[0]
    assert verify_robust_coloring(G, cert)
    assert cert.num_blocks == cf.chi1_chordal_upper(chi)


@SETTINGS
@given(st.lists(st.integers(1, 5), min_size=1, max_size=7).map(sorted))
def test_multipartite_construction_matches_formula(sizes):
    G, _ = gen_complete_multipartite(sizes)
    cert = cons.construct_multipartite_coloring(sizes)
    assert verify_robust_coloring(G, cert)
    assert cert.num_blocks == cf.chi1_multipartite(sizes).value
    assert cert.num_blocks <= cf.multipartite_upper_bound(sizes)


@SETTINGS
@given(st.integers(1, 60), st.integers(1, 8))
def test_unit_interval_blocks(n, p):
    G, _ = cons.path_power_subgraph(n, p)
    cert = cons.construct_unit_interval_coloring(n, p)
    assert verify_robust_coloring(G, cert)
    assert cert.num_blocks <= cf.chi1_unit_interval_upper(min(n, p + 1))
