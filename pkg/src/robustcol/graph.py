"""Simple undirected graphs on vertices ``0..n-1`` and the classical solvers.

Adjacency is stored as one int bit-row per vertex, so induced subgraphs,
components and clique searches are word operations on Python ints.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType

from . import _subsets
from ._subsets import iter_bits, mask_of
from .errors import (
    DuplicateEdgeError,
    EdgeSubsetError,
    InvalidSelectionError,
    NotBipartiteError,
    SelfLoopError,
    SizeLimitError,
    VertexRangeError,
)

Edge = tuple[int, int]

CHROMATIC_LIMIT = 24
CHROMATIC_DP_LIMIT = 20
CLIQUE_LIMIT = 24


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise VertexRangeError(f"negative vertex count {self.n}")
        norm = set()
        rows = [0] * self.n
        for u, v in self.edges:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexRangeError(f"edge {u}-{v} outside 0..{self.n - 1}")
            norm.add(norm_edge(u, v))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(rows))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edge_list)}

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def incident_edges(self, v: int) -> list[Edge]:
        return [norm_edge(v, u) for u in iter_bits(self.adj[v])]

    def edges_within(self, mask: int) -> int:
        return sum((self.adj[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled ``0..k-1`` in increasing vertex order.

        Also returns the list mapping new labels back to the old ones.
        """
        old = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(old)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(old), frozenset(edges)), old

    def complement(self) -> Graph:
        return Graph(
            self.n,
            frozenset((u, v) for u in range(self.n) for v in range(u + 1, self.n)
                      if not self.has_edge(u, v)),
        )

    def without_edges(self, removed: Iterable[Edge]) -> Graph:
        return Graph(self.n, self.edges - {norm_edge(*e) for e in removed})

    def edge_mask(self, edges: Iterable[Edge]) -> int:
        """Bitmask over ``edge_list`` positions."""
        idx = self.edge_index
        return mask_of(idx[norm_edge(*e)] for e in edges)

    def edges_from_mask(self, mask: int) -> frozenset[Edge]:
        el = self.edge_list
        return frozenset(el[i] for i in iter_bits(mask))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, rejecting out-of-range endpoints, loops and duplicates."""
    if n < 0:
        raise VertexRangeError(f"negative vertex count {n}")
    seen: set[Edge] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge {u}-{v} outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = norm_edge(u, v)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {u}-{v}")
        seen.add(e)
    return Graph(n, frozenset(seen))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, frozenset(norm_edge(i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph(off, frozenset(edges))


# --------------------------------------------------------------------------
# Selections


@dataclass(frozen=True)
class Selection:
    """Per-vertex choice of at most ``cap`` incident edges.

    ``choice`` maps a vertex to the tuple of edges it selects; unmapped
    vertices select nothing.  Every solver in the package uses ``cap == 1``.
    """

    choice: Mapping[int, tuple[Edge, ...]]
    cap: int = 1

    def __post_init__(self):
        frozen = {}
        for v, es in self.choice.items():
            es = tuple(sorted({norm_edge(*e) for e in es}))
            if es:
                frozen[v] = es
        object.__setattr__(self, "choice", MappingProxyType(dict(sorted(frozen.items()))))

    @classmethod
    def from_edges(cls, picks: Mapping[int, Edge]) -> Selection:
        return cls({v: (e,) for v, e in picks.items()})

    @classmethod
    def empty(cls) -> Selection:
        return cls({})

    def image(self) -> frozenset[Edge]:
        return frozenset(e for es in self.choice.values() for e in es)

    def single(self) -> dict[int, Edge]:
        """The selection as a plain ``vertex -> edge`` dict (cap 1 only)."""
        if self.cap != 1:
            raise InvalidSelectionError("single() needs a 1-selection")
        return {v: es[0] for v, es in self.choice.items()}

    def merged(self, other: Selection) -> Selection:
        both = dict(self.choice)
        for v, es in other.choice.items():
            both[v] = tuple(both.get(v, ())) + tuple(es)
        return Selection(both, max(self.cap, other.cap))

    def __eq__(self, other):
        if not isinstance(other, Selection):
            return NotImplemented
        return self.cap == other.cap and dict(self.choice) == dict(other.choice)

    def __hash__(self):
        return hash((self.cap, tuple(self.choice.items())))


def selection_issue(G: Graph, f: Selection) -> tuple[str, tuple[int, ...]] | None:
    """Why ``f`` is invalid for ``G`` as a format template plus the vertices it
    mentions, or None when it is valid."""
    for v, es in f.choice.items():
        if not 0 <= v < G.n:
            return "vertex {0} out of range", (v,)
        if len(es) > f.cap:
            return f"vertex {{0}} selects {len(es)} edges, cap is {f.cap}", (v,)
        for e in es:
            if e not in G.edges:
                return "vertex {0} selects non-edge {1}-{2}", (v, *e)
            if v not in e:
                return "vertex {0} selects non-incident edge {1}-{2}", (v, *e)
    return None


def selection_problem(G: Graph, f: Selection) -> str | None:
    """Reason ``f`` is invalid for ``G``, or None when it is valid."""
    issue = selection_issue(G, f)
    return None if issue is None else issue[0].format(*issue[1])


def check_selection(G: Graph, f: Selection) -> None:
    problem = selection_problem(G, f)
    if problem is not None:
        raise InvalidSelectionError(problem)


def apply_selection(G: Graph, f: Selection) -> Graph:
    """The removed subgraph ``G_f``: same vertices, selected edges deleted."""
    check_selection(G, f)
    return Graph(G.n, G.edges - f.image())


# --------------------------------------------------------------------------
# Structure


def connected_components(G: Graph, within: int | None = None) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    remaining = G.full_mask if within is None else within
    comps = []
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= G.adj[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(list(iter_bits(comp)))
        remaining &= ~comp
    return comps


def _pseudoforest_violation(n: int, edges: Iterable[Edge]) -> bool:
    """True iff some component of (range(n), edges) has more edges than vertices."""
    parent = list(range(n))
    size = [1] * n
    count = [0] * n

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            count[ru] += count[rv]
        count[ru] += 1
        if count[ru] > size[ru]:
            return True
    return False


def is_quasi_unicyclic(G: Graph) -> bool:
    """Every component has at most one cycle, i.e. ``|E(C)| <= |V(C)|``."""
    return not _pseudoforest_violation(G.n, G.edges)


def is_removable_edge_set(G: Graph, D: Iterable[Edge]) -> bool:
    """Whether some 1-selection of ``G`` removes exactly the edges ``D``.

    Each vertex contributes at most one edge, so ``D`` is removable iff every
    component of the spanning subgraph ``(V, D)`` has no more edges than
    vertices.
    """
    D = {norm_edge(*e) for e in D}
    if not D <= G.edges:
        extra = sorted(D - G.edges)[0]
        raise EdgeSubsetError(f"{extra[0]}-{extra[1]} is not an edge of the graph")
    return not _pseudoforest_violation(G.n, D)


def bipartition(G: Graph) -> tuple[list[int], list[int]] | None:
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_bits(G.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    return [v for v in range(G.n) if side[v] == 0], [v for v in range(G.n) if side[v] == 1]


def is_bipartite(G: Graph) -> bool:
    return bipartition(G) is not None


def require_bipartite(G: Graph) -> tuple[list[int], list[int]]:
    parts = bipartition(G)
    if parts is None:
        raise NotBipartiteError("graph contains an odd cycle")
    return parts


def mcs_order(G: Graph) -> list[int]:
    """Maximum cardinality search visit order, ties to the lowest index."""
    weight = [0] * G.n
    visited = 0
    order = []
    for _ in range(G.n):
        best = -1
        for v in range(G.n):
            if not visited >> v & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        order.append(best)
        visited |= 1 << best
        for u in iter_bits(G.adj[best] & ~visited):
            weight[u] += 1
    return order


def perfect_elimination_ordering(G: Graph) -> list[int] | None:
    """A perfect elimination ordering, or None when ``G`` is not chordal."""
    peo = mcs_order(G)[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in iter_bits(G.adj[v]) if pos[u] > pos[v]]
        if not later:
            continue
        first = min(later, key=pos.__getitem__)
        rest = mask_of(later) & ~(1 << first)
        if rest & ~G.adj[first]:
            return None
    return peo


def is_chordal(G: Graph) -> bool:
    return perfect_elimination_ordering(G) is not None


# --------------------------------------------------------------------------
# Classical parameters


def _check_limit(G: Graph, limit: int, what: str) -> None:
    if G.n > limit:
        raise SizeLimitError(f"{what}: n={G.n} exceeds the exact-solver limit {limit}")


def is_proper_coloring(G: Graph, colors: list[int]) -> bool:
    return len(colors) == G.n and all(colors[u] != colors[v] for u, v in G.edges)


def chromatic_number(G: Graph, limit: int = CHROMATIC_LIMIT) -> tuple[int, list[int]]:
    """Exact chromatic number and an optimal colouring ``colors[v]``.

    Subset DP over independent sets up to ``CHROMATIC_DP_LIMIT`` vertices,
    DSATUR branch and bound above that.
    """
    _check_limit(G, limit, "chromatic_number")
    if G.n <= CHROMATIC_DP_LIMIT:
        k, blocks = _subsets.min_cover(_subsets.independent_flags(G.adj, G.n), G.n)
        colors = [0] * G.n
        for c, block in enumerate(blocks):
            for v in iter_bits(block):
                colors[v] = c
        return k, colors
    return _dsatur(G)


def _greedy_coloring(G: Graph, order: list[int]) -> list[int]:
    colors = [-1] * G.n
    for v in order:
        used = {colors[u] for u in iter_bits(G.adj[v])}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def _dsatur(G: Graph) -> tuple[int, list[int]]:
    n = G.n
    best = _greedy_coloring(G, sorted(range(n), key=lambda v: -G.degree(v)))
    best_k = max(best, default=-1) + 1
    lower, _ = clique_number(G, limit=max(n, CLIQUE_LIMIT))
    if best_k == lower:
        return best_k, best
    colors = [-1] * n

    def pick() -> int:
        cand, key = -1, None
        for v in range(n):
            if colors[v] < 0:
                sat = len({colors[u] for u in iter_bits(G.adj[v]) if colors[u] >= 0})
                k = (sat, G.degree(v))
                if key is None or k > key:
                    cand, key = v, k
        return cand

    def search(used: int, done: int) -> bool:
        nonlocal best, best_k
        if used >= best_k:
            return False
        if done == n:
            best, best_k = colors[:], used
            return best_k == lower
        v = pick()
        forbidden = {colors[u] for u in iter_bits(G.adj[v])}
        for c in range(min(used + 1, best_k - 1)):
            if c in forbidden:
                continue
            colors[v] = c
            if search(max(used, c + 1), done + 1):
                return True
            colors[v] = -1
        return False

    search(0, 0)
    return best_k, best


def _max_clique_in(adj: tuple[int, ...], n: int) -> list[int]:
    """Branch and bound with greedy-colouring bounds over bitsets."""
    best: list[int] = []
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())
    rank = {v: i for i, v in enumerate(order)}

    def color_sort(P: int) -> list[tuple[int, int]]:
        out = []
        uncolored = P
        color = 0
        while uncolored:
            color += 1
            Q = uncolored
            while Q:
                v = min(iter_bits(Q), key=rank.__getitem__)
                out.append((v, color))
                Q &= ~(1 << v) & ~adj[v]
                uncolored &= ~(1 << v)
        return out

    def expand(R: list[int], P: int) -> None:
        nonlocal best
        for v, bound in reversed(color_sort(P)):
            if len(R) + bound <= len(best):
                return
            R.append(v)
            nxt = P & adj[v]
            if nxt:
                expand(R, nxt)
            elif len(R) > len(best):
                best = R[:]
            R.pop()
            P &= ~(1 << v)

    if n:
        expand([], (1 << n) - 1)
    return sorted(best)


def clique_number(G: Graph, limit: int = CLIQUE_LIMIT) -> tuple[int, list[int]]:
    """Exact clique number with a maximum clique as witness."""
    _check_limit(G, limit, "clique_number")
    clique = _max_clique_in(G.adj, G.n)
    return len(clique), clique


def independence_number(G: Graph, limit: int = CLIQUE_LIMIT) -> tuple[int, list[int]]:
    """Exact independence number with a maximum independent set as witness."""
    _check_limit(G, limit, "independence_number")
    full = G.full_mask
    comp = tuple(full & ~G.adj[v] & ~(1 << v) for v in range(G.n))
    ind = _max_clique_in(comp, G.n)
    return len(ind), ind


def maximum_cliques(G: Graph, limit: int = CLIQUE_LIMIT) -> list[list[int]]:
    """Every clique of maximum order (Bron-Kerbosch with pivoting)."""
    _check_limit(G, limit, "maximum_cliques")
    if G.n == 0:
        return [[]]
    found: list[int] = []

    def bk(R: int, P: int, X: int) -> None:
        if not P and not X:
            found.append(R)
            return
        pivot = max(iter_bits(P | X), key=lambda u: (G.adj[u] & P).bit_count())
        for v in iter_bits(P & ~G.adj[pivot]):
            bk(R | 1 << v, P & G.adj[v], X & G.adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    bk(0, G.full_mask, 0)
    top = max(r.bit_count() for r in found)
    return sorted(list(iter_bits(r)) for r in found if r.bit_count() == top)


def is_clique(G: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(G.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def is_independent(G: Graph, vertices: Iterable[int]) -> bool:
    m = mask_of(vertices)
    return all(not (G.adj[v] & m) for v in iter_bits(m))
