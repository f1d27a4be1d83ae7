"""Certificate-producing constructions realising the upper bounds.

Every function returns a certificate that :mod:`robustcol.oracle` can check;
none of them claims optimality on its own.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from ._subsets import iter_bits
from .errors import DomainError, InvalidPartitionError, NotChordalError, NotForestError
from .families import (
    ThresholdPartition,
    gen_complete_multipartite,
    gen_kneser,
    gen_path_power,
    is_omega_unique_threshold,
    kneser_sets,
    validate_threshold_partition,
)
from .graph import (
    Edge,
    Graph,
    Selection,
    connected_components,
    is_clique,
    is_independent,
    mcs_order,
    norm_edge,
    perfect_elimination_ordering,
)
from .oracle import (
    RobustColoringCertificate,
    RobustIndependenceCertificate,
    block_erasing_selection,
    erasing_selection,
)


@dataclass(frozen=True)
class StarLikeFamily:
    """k-sets that all contain ``center`` except at most one."""

    center: int
    members: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        outsiders = [F for F in self.members if self.center not in F]
        if len(outsiders) > 1:
            raise DomainError(f"{len(outsiders)} members avoid the centre {self.center}")

    @property
    def exceptional(self) -> tuple[int, ...] | None:
        return next((F for F in self.members if self.center not in F), None)


def is_star_like(family: Iterable[Sequence[int]], center: int) -> bool:
    return sum(1 for F in family if center not in F) <= 1


def avoids_every_element_twice(family: Iterable[Sequence[int]], n: int) -> bool:
    """Every x in [n] is missed by at least two members of the family."""
    family = [set(F) for F in family]
    return all(sum(1 for F in family if x not in F) >= 2 for x in range(1, n + 1))


# --------------------------------------------------------------------------
# Erasing helpers


def forest_erasing_selection(F: Graph) -> Selection:
    """Erase a forest: root each tree at its lowest vertex, children select the parent edge."""
    if F.m != F.n - len(connected_components(F)):
        raise NotForestError("graph contains a cycle")
    return erasing_selection(F.n, F.edges)


def star_erasing_selection(G: Graph, center: int, leaves: Iterable[int]) -> Selection:
    """Each leaf selects its edge to the centre; the centre takes its lowest leaf edge."""
    hit = sorted(v for v in leaves if G.has_edge(center, v))
    picks: dict[int, Edge] = {v: norm_edge(v, center) for v in hit}
    if hit:
        picks[center] = norm_edge(center, hit[0])
    return Selection.from_edges(picks)


def _merge(selections: Iterable[Selection]) -> Selection:
    out = Selection.empty()
    for s in selections:
        out = out.merged(s)
    return out


# --------------------------------------------------------------------------
# Chordal graphs: pair up colour classes


def peo_coloring(G: Graph) -> list[int]:
    """Optimal colouring of a chordal graph, greedy along the MCS visit order."""
    if perfect_elimination_ordering(G) is None:
        raise NotChordalError("maximum cardinality search found no perfect elimination ordering")
    colors = [-1] * G.n
    for v in mcs_order(G):
        used = {colors[u] for u in iter_bits(G.adj[v])}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def construct_chordal_half(G: Graph) -> RobustColoringCertificate:
    """ceil(chi/2) blocks: colour classes paired (1,2), (3,4), ...

    Two colour classes of a chordal graph induce a forest, which a
    1-selection erases completely.
    """
    colors = peo_coloring(G)
    chi = max(colors, default=-1) + 1
    blocks = [[v for v in range(G.n) if colors[v] // 2 == b] for b in range(-(-chi // 2))]
    return RobustColoringCertificate(block_erasing_selection(G, blocks), tuple(map(tuple, blocks)),
                                     {"chi": str(chi)})


# --------------------------------------------------------------------------
# Threshold and split graphs


def construct_threshold_coloring(G: Graph, tp: ThresholdPartition) -> RobustColoringCertificate:
    """Consecutive clique triples plus one residue block (two when q = 0 mod 3 and
    the maximum clique is not unique)."""
    validate_threshold_partition(G, tp)
    A, B = list(tp.clique_order), list(tp.independent_order)
    q = len(A)
    if q == 0:
        return RobustColoringCertificate(Selection.empty(), ())
    k = -(-q // 3) - 1
    if q % 3 == 0 and not is_omega_unique_threshold(G, tp):
        blocks = [A[3 * j : 3 * j + 3] for j in range(k + 1)] + [B]
        case = "not-omega-unique"
    else:
        blocks = [A[3 * j : 3 * j + 3] for j in range(k)] + [A[3 * k :] + B]
        case = f"q={q % 3}mod3"
    return RobustColoringCertificate(block_erasing_selection(G, blocks), tuple(map(tuple, blocks)),
                                     {"case": case})


def construct_split_coloring(G: Graph, clique: Iterable[int],
                             independent: Iterable[int]) -> RobustColoringCertificate:
    """ceil((chi-1)/3) + 1 blocks for a split graph with chi >= 3.

    Clique triples become erased triangles.  With chi = 1 (mod 3) the
    leftover clique vertex joins the independent side as the centre of a
    star; with chi = 2 (mod 3) the leftover pair forms its own block.
    """
    A, B = list(clique), sorted(independent)
    if sorted(A + B) != list(range(G.n)):
        raise InvalidPartitionError("clique and independent set must partition the vertices")
    if not is_clique(G, A) or not is_independent(G, B):
        raise InvalidPartitionError("not a split partition")
    amask = sum(1 << a for a in A)
    if any(G.adj[b] & amask == amask for b in B):
        raise InvalidPartitionError("clique is not maximum, so its size is not chi")
    q = len(A)
    if q < 3:
        raise DomainError("split construction needs chi >= 3")
    triples = [A[3 * j : 3 * j + 3] for j in range(q // 3)]
    leftover = A[3 * (q // 3) :]
    sels = [block_erasing_selection(G, triples)]
    if len(leftover) == 1:
        v = leftover[0]
        blocks = triples + [[v] + B]
        sels.append(star_erasing_selection(G, v, B))
    elif len(leftover) == 2:
        blocks = triples + [leftover, B]
        sels.append(block_erasing_selection(G, [leftover]))
    else:
        blocks = triples + [B]
    blocks = [b for b in blocks if b]
    return RobustColoringCertificate(_merge(sels), tuple(map(tuple, blocks)))


# --------------------------------------------------------------------------
# Path powers and their induced subgraphs


def path_power_subgraph(n: int, p: int, subset: Iterable[int] | None = None) -> tuple[Graph, list[int]]:
    """P_n^p, or its induced subgraph on ``subset``; returns the graph and its
    vertices' positions on the path."""
    G, _ = gen_path_power(n, p)
    if subset is None:
        return G, list(range(n))
    subset = sorted(set(subset))
    if subset and not (0 <= subset[0] and subset[-1] < n):
        raise DomainError("induced subset must lie in 0..n-1")
    return G.induced_subgraph(subset)


def construct_unit_interval_coloring(n: int, p: int,
                                     induced_subset: Iterable[int] | None = None
                                     ) -> RobustColoringCertificate:
    """Consecutive path triples, erased as triangles, coloured i mod (k+1).

    With chi = p + 1 = 3k - r (r in {0,1,2}), triples more than k apart
    are non-adjacent.  For p = 1 the graph is a linear forest: one block.
    """
    if p < 1:
        raise DomainError(f"need p >= 1, got {p}")
    G, pos = path_power_subgraph(n, p, induced_subset)
    if p == 1:
        block = list(range(G.n))
        return RobustColoringCertificate(forest_erasing_selection(G), (tuple(block),) if block else ())
    k = math.ceil((p + 1) / 3)
    color = [(pos[v] // 3) % (k + 1) for v in range(G.n)]
    triples: dict[int, list[int]] = {}
    for v in range(G.n):
        triples.setdefault(pos[v] // 3, []).append(v)
    blocks = [[v for v in range(G.n) if color[v] == c] for c in range(k + 1)]
    return RobustColoringCertificate(block_erasing_selection(G, triples.values()),
                                     tuple(tuple(b) for b in blocks if b), {"k": str(k)})


# --------------------------------------------------------------------------
# Complete multipartite graphs

# Block shapes in the (p, q) base: how many singleton parts and pair parts a
# block touches, and how many vertices it takes from each touched pair.
# Each entry: (label, singles used, vertices taken from each touched pair).
_BASE_MOVES = (
    ("c3", 0, (1, 2)),       # pair vertex + whole other pair: star
    ("a1", 3, ()),           # triangle on three singletons
    ("b1", 0, (2, 2)),       # C4 on two pairs
    ("a2", 2, (1,)),         # triangle: two singletons + one pair vertex
    ("c2", 1, (2,)),         # singleton + whole pair: star
    ("c1", 2, ()),           # edge between two singletons
    ("a3", 1, (1, 1)),       # triangle: singleton + two pair vertices
    ("a4", 0, (1, 1, 1)),    # triangle on three pair vertices
    ("c2'", 1, (1,)),        # edge: singleton + one pair vertex
    ("c3'", 0, (1, 1)),      # edge: two pair vertices
    ("pair", 0, (2,)),       # a whole pair on its own
    ("half", 0, (1,)),       # one pair vertex on its own
    ("single", 1, ()),       # one singleton on its own
)


def _after(p: int, q: int, singles: int, takes: tuple[int, ...]) -> tuple[int, int] | None:
    if singles > p or len(takes) > q:
        return None
    halves = sum(1 for t in takes if t == 1)
    return p - singles + halves, q - len(takes)


@lru_cache(maxsize=None)
def _base_plan(p: int, q: int) -> tuple[int, tuple[str, ...]]:
    """Minimum number of blocks for the (p, q) base and the move sequence."""
    if p == 0 and q == 0:
        return 0, ()
    best = None
    for label, singles, takes in _BASE_MOVES:
        nxt = _after(p, q, singles, takes)
        if nxt is None:
            continue
        cost, plan = _base_plan(*nxt)
        if best is None or cost + 1 < best[0]:
            best = (cost + 1, (label,) + plan)
    return best


def multipartite_base_value(p: int, q: int) -> int:
    """chi1 of the (p, q) base by exhaustive DP over block shapes."""
    return _base_plan(p, q)[0]


def construct_multipartite_coloring(sizes: Sequence[int]) -> RobustColoringCertificate:
    """Peel ``{v} + V_t`` stars while the largest part has >= 3 vertices, then
    cover the parts of size <= 2 with an optimal plan of triangles, C4s and
    stars."""
    G, desc = gen_complete_multipartite(sizes)
    parts = [list(p) for p in desc.extra["parts"]]
    blocks: list[list[int]] = []
    sels: list[Selection] = []
    peeled = 0
    while parts and len(parts[-1]) >= 3:
        largest = parts.pop()
        if parts:
            v = parts[0].pop(0)
            if not parts[0]:
                parts.pop(0)
            blocks.append([v] + largest)
            sels.append(star_erasing_selection(G, v, largest))
        else:
            blocks.append(largest)
        parts.sort(key=len)
        peeled += 1

    singles = [p for p in parts if len(p) == 1]
    pairs = [p for p in parts if len(p) == 2]
    _, plan = _base_plan(len(singles), len(pairs))
    moves = {label: (s, t) for label, s, t in _BASE_MOVES}
    base_blocks = []
    for label in plan:
        n_single, takes = moves[label]
        block = [singles.pop(0)[0] for _ in range(n_single)]
        touched = [pairs.pop(0) for _ in takes]
        for pair, take in zip(touched, takes):
            block += pair[:take]
            if take == 1:
                singles.append(pair[1:])
        singles.sort()
        base_blocks.append(block)
    blocks += base_blocks
    sels.append(block_erasing_selection(G, base_blocks))
    return RobustColoringCertificate(_merge(sels), tuple(tuple(b) for b in blocks),
                                     {"peeled": str(peeled), "plan": ",".join(plan)})


# --------------------------------------------------------------------------
# Kneser graphs


def construct_kneser_alpha1(n: int, k: int) -> RobustIndependenceCertificate:
    """All k-sets containing 1 plus the set {2..k+1}; they induce a star."""
    if k < 2 or n < 2 * k + 1:
        raise DomainError(f"need k >= 2 and n >= 2k+1, got n={n}, k={k}")
    G, desc = gen_kneser(n, k)
    sets = desc.extra["sets"]
    index = {s: i for i, s in enumerate(sets)}
    extra = tuple(range(2, k + 2))
    star = [i for i, s in enumerate(sets) if 1 in s]
    center = index[extra]
    f = star_erasing_selection(G, center, star)
    return RobustIndependenceCertificate(f, tuple(star) + (center,),
                                         {"family": "star-plus-one", "extra": str(extra)})


def construct_kneser_3k_family(k: int) -> RobustIndependenceCertificate:
    """{F : 1 in F} plus [k+1,2k] and [2k+1,3k] in KG(3k, k).

    The induced graph is a triangle with pendant edges at two of its
    vertices, erased by the unicyclic rule.
    """
    if k < 2:
        raise DomainError(f"need k >= 2, got {k}")
    G, desc = gen_kneser(3 * k, k)
    sets = desc.extra["sets"]
    index = {s: i for i, s in enumerate(sets)}
    Y = tuple(range(k + 1, 2 * k + 1))
    Z = tuple(range(2 * k + 1, 3 * k + 1))
    members = sorted([i for i, s in enumerate(sets) if 1 in s] + [index[Y], index[Z]])
    f = block_erasing_selection(G, [members])
    meta = {
        "family": "star-plus-two",
        "interpretation": "second interval read as [2k+1,3k]; membership condition read as 1 in F",
    }
    return RobustIndependenceCertificate(f, tuple(members), meta)


def kneser_c(n: int, k: int) -> int:
    """Largest c >= 2k with n - c >= C(c,k) - C(2k,k)."""
    if k < 2 or n < 2 * k:
        raise DomainError(f"need k >= 2 and n >= 2k, got n={n}, k={k}")
    base = comb(2 * k, k)
    c = 2 * k
    while c + 1 <= n and n - (c + 1) >= comb(c + 1, k) - base:
        c += 1
    return c


def construct_kneser_chi1(n: int, k: int) -> RobustColoringCertificate:
    """n - c + 1 robust independent classes of KG(n, k).

    Class i (i = 1..n-c) holds the sets with maximum element n+1-i plus the
    i-th set of C([c],k) minus C([2k],k); the sets of C([2k],k) form the
    last class, a perfect matching.
    """
    c = kneser_c(n, k)
    G, desc = gen_kneser(n, k)
    sets = desc.extra["sets"]
    index = {s: i for i, s in enumerate(sets)}
    spare = [s for s in kneser_sets(c, k) if s[-1] > 2 * k]
    blocks: list[list[int]] = []
    sels: list[Selection] = []
    for i in range(1, n - c + 1):
        top = n + 1 - i
        star = [index[s] for s in sets if s[-1] == top]
        if i <= len(spare):
            center = index[spare[i - 1]]
            sels.append(star_erasing_selection(G, center, star))
            star.append(center)
        blocks.append(star)
    matching = [index[s] for s in kneser_sets(2 * k, k)]
    blocks.append(matching)
    sels.append(block_erasing_selection(G, [matching]))
    return RobustColoringCertificate(_merge(sels), tuple(tuple(b) for b in blocks), {"c": str(c)})


def check_extra_family(k: int, m: int, family: Iterable[Sequence[int]]) -> str | None:
    """Why ``family`` fails the requirements on the extra family for KG(2k+m, k), or None.

    Members must be k-subsets of [2k+m-1], pairwise intersecting, with
    pairwise unions of more than k+m elements.
    """
    if not (k >= 2 and 1 <= m < k):
        return f"need k >= 2 and 1 <= m < k, got k={k}, m={m}"
    fam = [frozenset(F) for F in family]
    for F in fam:
        if len(F) != k or not F <= set(range(1, 2 * k + m)):
            return f"{sorted(F)} is not a {k}-subset of [1,{2 * k + m - 1}]"
    for i, F in enumerate(fam):
        for G_ in fam[i + 1:]:
            if not F & G_:
                return f"{sorted(F)} and {sorted(G_)} are disjoint"
            if len(F | G_) <= k + m:
                return f"{sorted(F)} and {sorted(G_)} have a union of only {len(F | G_)}"
    return None


def extra_family_certificate(k: int, m: int,
                              family: Iterable[Sequence[int]]) -> RobustIndependenceCertificate:
    """{F : 2k+m in F} plus a checked extra family; the induced graph is a star forest."""
    family = [tuple(sorted(F)) for F in family]
    problem = check_extra_family(k, m, family)
    if problem is not None:
        raise DomainError(problem)
    n = 2 * k + m
    G, desc = gen_kneser(n, k)
    index = {s: i for i, s in enumerate(desc.extra["sets"])}
    members = sorted({i for s, i in index.items() if n in s} | {index[F] for F in family})
    return RobustIndependenceCertificate(block_erasing_selection(G, [members]), tuple(members),
                                         {"family": f"star-plus-extra(m={m})"})
