"""Deterministic generators for the graph families under study.

Every generator returns the graph together with a :class:`FamilyDescriptor`
recording its parameters and structural annotations (part membership,
k-set labels, interval models, threshold partitions).
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType

from ._subsets import iter_bits
from .errors import DomainError, InvalidPartitionError, NotThresholdError
from .graph import Graph, build_graph, is_clique, is_independent, maximum_cliques

KINDS = ("multipartite", "threshold", "split_tight", "kneser", "path_power", "r_tower",
         "random_chordal")


@dataclass(frozen=True)
class FamilyDescriptor:
    kind: str
    params: Mapping[str, object]
    labels: tuple[str, ...] = ()
    extra: Mapping[str, object] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))
        object.__setattr__(self, "extra", MappingProxyType(dict(self.extra)))

    def tag(self) -> str:
        """Compact, sortable text form used in reports."""
        parts = []
        for key, val in self.params.items():
            if isinstance(val, (list, tuple)):
                val = ",".join(map(str, val))
            parts.append(f"{key}={val}")
        return f"{self.kind}[{';'.join(parts)}]"


@dataclass(frozen=True)
class ThresholdPartition:
    """Clique ``a_1..a_q`` and independent set ``b_1..b_s`` of a threshold graph.

    Orders follow the nesting conventions: closed neighbourhoods shrink
    along the clique, open neighbourhoods shrink along the independent set,
    and ``a_q`` has no neighbour in the independent set.
    """

    clique_order: tuple[int, ...]
    independent_order: tuple[int, ...]

    @property
    def q(self) -> int:
        return len(self.clique_order)

    @property
    def s(self) -> int:
        return len(self.independent_order)


# --------------------------------------------------------------------------
# Complete multipartite


def gen_complete_multipartite(sizes: Sequence[int]) -> tuple[Graph, FamilyDescriptor]:
    sizes = list(sizes)
    if not sizes:
        raise DomainError("multipartite graph needs at least one part")
    if any(s < 1 for s in sizes):
        raise DomainError(f"part sizes must be positive, got {sizes}")
    if sizes != sorted(sizes):
        raise DomainError(f"part sizes must be ascending, got {sizes}")
    part_of = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part_of)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part_of[u] != part_of[v]]
    desc = FamilyDescriptor(
        "multipartite",
        {"sizes": tuple(sizes)},
        labels=tuple(f"part{p + 1}" for p in part_of),
        extra={"parts": tuple(tuple(v for v in range(n) if part_of[v] == i)
                              for i in range(len(sizes)))},
    )
    return build_graph(n, edges), desc


# --------------------------------------------------------------------------
# Threshold graphs

_CREATION = {"i": False, "isolated": False, "d": True, "dominating": True}


def parse_creation(seq: str | Iterable) -> list[bool]:
    """Creation sequence as booleans (True = dominating).

    Accepts ``"iddi"``-style strings (``D`` also means dominating) or an
    iterable of ``"isolated"`` / ``"dominating"`` / bool.
    """
    out = []
    for item in seq:
        if isinstance(item, bool):
            out.append(item)
            continue
        key = str(item).lower()
        if key not in _CREATION:
            raise DomainError(f"bad creation step {item!r}")
        out.append(_CREATION[key])
    return out


def gen_threshold(creation) -> tuple[Graph, ThresholdPartition]:
    """Add vertices left to right, each isolated or adjacent to all earlier ones."""
    steps = parse_creation(creation)
    if not steps:
        raise DomainError("creation sequence must be nonempty")
    edges = [(u, v) for v, dom in enumerate(steps) if dom for u in range(v)]
    G = build_graph(len(steps), edges)
    return G, threshold_partition(G)


def threshold_descriptor(creation) -> FamilyDescriptor:
    steps = parse_creation(creation)
    seq = "".join("d" if d else "i" for d in steps)
    return FamilyDescriptor("threshold", {"seq": seq})


def threshold_partition(G: Graph) -> ThresholdPartition:
    """Recognise a threshold graph and return a threshold partition.

    Peels a dominating vertex (preferred) or an isolated one until the rest
    is edgeless.  Peeled dominating vertices become ``a_1, a_2, ...`` in
    order, one leftover vertex becomes ``a_q`` and the others, followed by
    the peeled isolated vertices in reverse order, form ``b_1, b_2, ...``.
    """
    remaining = G.full_mask
    dominating: list[int] = []
    isolated: list[int] = []
    while any(G.adj[v] & remaining for v in iter_bits(remaining)):
        pick = None
        for v in iter_bits(remaining):
            if G.adj[v] & remaining == remaining & ~(1 << v):
                pick = v
                dominating.append(v)
                break
        if pick is None:
            for v in iter_bits(remaining):
                if not G.adj[v] & remaining:
                    pick = v
                    isolated.append(v)
                    break
        if pick is None:
            raise NotThresholdError("no isolated or dominating vertex left to peel")
        remaining &= ~(1 << pick)
    rest = list(iter_bits(remaining))
    A = dominating + rest[:1]
    B = rest[1:] + isolated[::-1]
    return ThresholdPartition(tuple(A), tuple(B))


def threshold_partition_problem(G: Graph, tp: ThresholdPartition) -> str | None:
    """Why ``tp`` fails conditions (i)-(iii) for ``G``, or None if it holds."""
    A, B = list(tp.clique_order), list(tp.independent_order)
    if sorted(A + B) != list(range(G.n)):
        return "clique and independent orders do not partition the vertices"
    if G.n and not A:
        return "clique part is empty"
    if not is_clique(G, A):
        return "clique part is not complete"
    if not is_independent(G, B):
        return "independent part has an edge"
    closed = [G.adj[a] | 1 << a for a in A]
    for x, y in itertools.pairwise(closed):
        if y & ~x:
            return "closed neighbourhoods along the clique are not nested"
    opened = [G.adj[b] for b in B]
    for x, y in itertools.pairwise(opened):
        if y & ~x:
            return "neighbourhoods along the independent set are not nested"
    bmask = sum(1 << b for b in B)
    if A and G.adj[A[-1]] & bmask:
        return "a_q has a neighbour in the independent part"
    return None


def validate_threshold_partition(G: Graph, tp: ThresholdPartition) -> None:
    problem = threshold_partition_problem(G, tp)
    if problem is not None:
        raise InvalidPartitionError(problem)


def is_omega_unique_threshold(G: Graph, tp: ThresholdPartition) -> bool:
    """Uniqueness of the maximum clique via the edge test on ``a_{q-1} b_1``.

    With ``B`` empty the clique ``A`` is the only maximum clique.  With
    ``q == 1`` the graph is edgeless and ``b_1`` is a second 1-clique.
    """
    validate_threshold_partition(G, tp)
    if not tp.independent_order:
        return True
    if tp.q == 1:
        return False
    return not G.has_edge(tp.clique_order[-2], tp.independent_order[0])


def is_omega_unique(G: Graph) -> bool:
    """Uniqueness of the maximum clique by direct enumeration."""
    return len(maximum_cliques(G, limit=max(G.n, 1))) == 1


# --------------------------------------------------------------------------
# Split graphs with a tight robust chromatic number


def gen_split_tight(t: int) -> tuple[Graph, FamilyDescriptor]:
    """Clique a_1..a_t, independent b_1..b_t, a_i adjacent to every b_j with j != i."""
    if t < 3:
        raise DomainError("split_tight needs t >= 3 (bipartite split graphs are double stars)")
    edges = [(i, j) for i in range(t) for j in range(i + 1, t)]
    edges += [(i, t + j) for i in range(t) for j in range(t) if i != j]
    desc = FamilyDescriptor(
        "split_tight",
        {"t": t},
        labels=tuple(["A"] * t + ["B"] * t),
        extra={"clique": tuple(range(t)), "independent": tuple(range(t, 2 * t))},
    )
    return build_graph(2 * t, edges), desc


# --------------------------------------------------------------------------
# Kneser graphs


def kneser_sets(n: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of {1..n} in colexicographic order."""
    return sorted(itertools.combinations(range(1, n + 1), k), key=lambda s: s[::-1])


def gen_kneser(n: int, k: int) -> tuple[Graph, FamilyDescriptor]:
    if k < 2 or n < 2 * k:
        raise DomainError(f"Kneser graph needs k >= 2 and n >= 2k, got n={n}, k={k}")
    sets = kneser_sets(n, k)
    as_sets = [set(s) for s in sets]
    edges = [(i, j) for i in range(len(sets)) for j in range(i + 1, len(sets))
             if as_sets[i].isdisjoint(as_sets[j])]
    desc = FamilyDescriptor(
        "kneser",
        {"n": n, "k": k},
        labels=tuple("{" + ",".join(map(str, s)) + "}" for s in sets),
        extra={"sets": tuple(sets)},
    )
    return build_graph(len(sets), edges), desc


# --------------------------------------------------------------------------
# Path powers


def gen_path_power(n: int, p: int) -> tuple[Graph, FamilyDescriptor]:
    if n < 1 or p < 1:
        raise DomainError(f"path power needs n >= 1 and p >= 1, got n={n}, p={p}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, min(n, u + p + 1))]
    desc = FamilyDescriptor("path_power", {"n": n, "p": p},
                            extra={"intervals": tuple((i, i + p) for i in range(n))})
    return build_graph(n, edges), desc


# --------------------------------------------------------------------------
# Towers of interval graphs: three copies joined to two universal vertices


def _r_tower_parts(k: int) -> tuple[int, list[tuple[int, int]], list[tuple[int, int]]]:
    """(vertex count, edges, closed intervals) of the tower G_k."""
    if k == 2:
        return 2, [(0, 1)], [(0, 1), (0, 1)]
    if k == 3:
        # K4 minus the edge 0-1
        return 4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], [(0, 1), (2, 3), (0, 3), (0, 3)]
    m, sub_edges, sub_iv = _r_tower_parts(k - 2)
    width = max(r for _, r in sub_iv) + 1
    edges, intervals = [], []
    for c in range(3):
        edges += [(u + c * m, v + c * m) for u, v in sub_edges]
        intervals += [(lo + c * width, hi + c * width) for lo, hi in sub_iv]
    x, y = 3 * m, 3 * m + 1
    edges += [(v, x) for v in range(3 * m)] + [(v, y) for v in range(3 * m)] + [(x, y)]
    span = (0, 3 * width - 1)
    return 3 * m + 2, edges, intervals + [span, span]


def gen_r_tower(k: int) -> tuple[Graph, FamilyDescriptor]:
    """Interval graph G_k with omega = chi = k and robust parameters ceil(k/2).

    G_2 = K_2, G_3 = K_4 - e, and G_k is three disjoint copies of G_{k-2}
    joined to two adjacent universal vertices.  Copies come first in the
    vertex order, the two universal vertices last.
    """
    if k < 2:
        raise DomainError(f"tower needs k >= 2, got {k}")
    n, edges, intervals = _r_tower_parts(k)
    desc = FamilyDescriptor("r_tower", {"k": k}, extra={"intervals": tuple(intervals)})
    return build_graph(n, edges), desc


def interval_graph_matches(G: Graph, intervals: Sequence[tuple[float, float]]) -> bool:
    """Whether closed ``intervals`` intersect exactly along the edges of G."""
    if len(intervals) != G.n:
        return False
    for u in range(G.n):
        for v in range(u + 1, G.n):
            (a, b), (c, d) = intervals[u], intervals[v]
            if (max(a, c) <= min(b, d)) != G.has_edge(u, v):
                return False
    return True


# --------------------------------------------------------------------------
# Random chordal graphs


def gen_random_chordal(n: int, density: float, seed: int) -> tuple[Graph, FamilyDescriptor]:
    """Chordal graph grown by adding vertices whose earlier neighbourhood is a clique.

    Vertex v picks a random earlier vertex u, grows ``{u}`` greedily (in index
    order) to a maximal clique among earlier vertices, and keeps each member as a
    neighbour with probability ``density``.  Reversing the insertion order
    gives a perfect elimination ordering.
    """
    if n < 1 or not 0 <= density <= 1:
        raise DomainError(f"need n >= 1 and 0 <= density <= 1, got n={n}, density={density}")
    rng = random.Random(seed)
    adj = [0] * n
    for v in range(1, n):
        u = rng.randrange(v)
        clique = 1 << u
        for w in range(v):
            if not clique >> w & 1 and adj[w] & clique == clique:
                clique |= 1 << w
        for w in iter_bits(clique):
            if rng.random() < density:
                adj[v] |= 1 << w
                adj[w] |= 1 << v
    edges = [(u, v) for v in range(n) for u in iter_bits(adj[v]) if u < v]
    desc = FamilyDescriptor("random_chordal", {"n": n, "density": density, "seed": seed})
    return build_graph(n, edges), desc
