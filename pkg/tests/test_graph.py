import itertools

import networkx as nx
import pytest

from robustcol.errors import (
    DuplicateEdgeError,
    EdgeSubsetError,
    InvalidSelectionError,
    NotBipartiteError,
    SelfLoopError,
    SizeLimitError,
    VertexRangeError,
)
from robustcol.graph import (
    Graph,
    Selection,
    apply_selection,
    bipartition,
    build_graph,
    check_selection,
    chromatic_number,
    clique_number,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    independence_number,
    is_chordal,
    is_proper_coloring,
    is_quasi_unicyclic,
    is_removable_edge_set,
    maximum_cliques,
    path_graph,
    perfect_elimination_ordering,
    petersen_graph,
    require_bipartite,
)


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edge_list)
    return H


class TestBuild:
    def test_complete(self):
        G = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        assert G == complete_graph(4)
        assert G.m == 6

    def test_edgeless(self):
        G = build_graph(3, [])
        assert G.n == 3 and G.m == 0

    def test_self_loop(self):
        with pytest.raises(SelfLoopError):
            build_graph(2, [(0, 0)])

    def test_out_of_range(self):
        with pytest.raises(VertexRangeError):
            build_graph(2, [(0, 2)])

    def test_duplicate(self):
        with pytest.raises(DuplicateEdgeError):
            build_graph(3, [(0, 1), (1, 0)])

    def test_immutable(self):
        G = complete_graph(3)
        with pytest.raises(AttributeError):
            G.n = 4

    def test_degrees_and_neighbours(self):
        G = petersen_graph()
        assert all(G.degree(v) == 3 for v in range(10))
        assert G.m == 15
        assert set(G.neighbors(0)) == {v for v in range(10) if G.has_edge(0, v)}

    def test_induced_subgraph_relabels(self):
        G = cycle_graph(5)
        H, old = G.induced_subgraph([0, 1, 2])
        assert old == [0, 1, 2]
        assert H.edges == {(0, 1), (1, 2)}

    def test_disjoint_union(self):
        G = disjoint_union(complete_graph(3), complete_graph(3))
        assert G.n == 6 and G.m == 6
        assert not G.has_edge(2, 3)


class TestSelection:
    def test_full_triangle_removal(self):
        G = complete_graph(3)
        f = Selection({0: ((0, 1),), 1: ((1, 2),), 2: ((0, 2),)})
        assert apply_selection(G, f).m == 0

    def test_empty_is_identity(self):
        G = path_graph(3)
        assert apply_selection(G, Selection.empty()) == G

    def test_image_is_a_set(self):
        G = complete_graph(4)
        f = Selection({0: ((0, 1),), 1: ((0, 1),)})
        assert apply_selection(G, f).m == 5

    def test_non_incident_rejected(self):
        G = complete_graph(4)
        with pytest.raises(InvalidSelectionError):
            check_selection(G, Selection({0: ((1, 2),)}))

    def test_non_edge_rejected(self):
        with pytest.raises(InvalidSelectionError):
            check_selection(path_graph(3), Selection({0: ((0, 2),)}))

    def test_cap_enforced(self):
        G = complete_graph(3)
        with pytest.raises(InvalidSelectionError):
            check_selection(G, Selection({0: ((0, 1), (0, 2))}))

    def test_cap_two_allowed_when_declared(self):
        G = complete_graph(3)
        check_selection(G, Selection({0: ((0, 1), (0, 2))}, cap=2))


class TestStructure:
    def test_tree_is_quasi_unicyclic(self):
        assert is_quasi_unicyclic(path_graph(7))

    def test_k4_is_not(self):
        assert not is_quasi_unicyclic(complete_graph(4))

    def test_two_triangles(self):
        assert is_quasi_unicyclic(disjoint_union(complete_graph(3), complete_graph(3)))

    def test_removable_triangle_in_k4(self):
        assert is_removable_edge_set(complete_graph(4), [(0, 1), (1, 2), (0, 2)])

    def test_all_of_k4_not_removable(self):
        G = complete_graph(4)
        assert not is_removable_edge_set(G, G.edge_list)

    def test_empty_removable(self):
        assert is_removable_edge_set(petersen_graph(), [])

    def test_non_subset_rejected(self):
        with pytest.raises(EdgeSubsetError):
            is_removable_edge_set(path_graph(3), [(0, 2)])

    def test_components(self):
        G = disjoint_union(complete_graph(3), complete_graph(3))
        assert sorted(map(sorted, connected_components(G))) == [[0, 1, 2], [3, 4, 5]]
        assert len(connected_components(petersen_graph())) == 1
        assert connected_components(build_graph(4, [])) == [[0], [1], [2], [3]]

    def test_bipartition(self):
        left, right = require_bipartite(cycle_graph(6))
        assert len(left) == len(right) == 3
        assert bipartition(cycle_graph(5)) is None
        with pytest.raises(NotBipartiteError):
            require_bipartite(cycle_graph(5))

    def test_chordal(self):
        assert is_chordal(complete_graph(5))
        assert not is_chordal(cycle_graph(4))
        assert perfect_elimination_ordering(cycle_graph(5)) is None


class TestParameters:
    def test_small_chromatic(self):
        assert chromatic_number(complete_graph(4))[0] == 4
        assert chromatic_number(cycle_graph(5))[0] == 3
        assert chromatic_number(path_graph(5))[0] == 2
        assert chromatic_number(build_graph(3, []))[0] == 1
        assert chromatic_number(build_graph(0, []))[0] == 0

    def test_petersen(self):
        G = petersen_graph()
        k, colors = chromatic_number(G)
        assert k == 3 and is_proper_coloring(G, colors)
        assert clique_number(G)[0] == 2
        size, witness = independence_number(G)
        assert size == 4 and all(not G.has_edge(u, v) for u, v in itertools.combinations(witness, 2))

    def test_k4_and_edgeless(self):
        assert clique_number(complete_graph(4))[0] == 4
        assert independence_number(complete_graph(4))[0] == 1
        E5 = build_graph(5, [])
        assert clique_number(E5)[0] == 1 and independence_number(E5)[0] == 5

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            chromatic_number(path_graph(30))

    def test_maximum_cliques(self):
        G = build_graph(4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)])
        assert sorted(map(sorted, maximum_cliques(G))) == [[0, 1, 2], [1, 2, 3]]

    def test_dsatur_path_above_dp_limit(self):
        # 22 vertices forces the DSATUR branch
        G = disjoint_union(complete_graph(5), cycle_graph(17))
        k, colors = chromatic_number(G)
        assert k == 5 and is_proper_coloring(G, colors)

    @pytest.mark.parametrize("seed", range(6))
    def test_against_networkx(self, seed):
        H = nx.gnp_random_graph(11, 0.45, seed=seed)
        G = build_graph(11, H.edges())
        assert clique_number(G)[0] == max(len(c) for c in nx.find_cliques(H))
        assert is_chordal(G) == nx.is_chordal(H)
        best = min(
            max(nx.coloring.greedy_color(H, strategy=s).values(), default=-1) + 1
            for s in ("largest_first", "DSATUR", "smallest_last")
        )
        assert chromatic_number(G)[0] <= best
