"""Exact robust parameters with checkable certificates.

chi1 is computed as the minimum number of blocks in a partition of V into
sets inducing quasi-unicyclic subgraphs, alpha1 as the largest such set, and
omega1 as the minimum clique number over all removable edge sets.  The raw
definition (enumerate every 1-selection) is kept as
:func:`enumerate_removed_graphs` so the three shortcuts can be checked
against it on small graphs.
"""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from . import _subsets
from ._subsets import iter_bits, mask_of
from .errors import SizeLimitError
from .graph import (
    Edge,
    Graph,
    Selection,
    _pseudoforest_violation,
    clique_number,
    norm_edge,
    selection_issue,
)

CHI1_LIMIT = 18
ALPHA1_LIMIT = 20
OMEGA1_LIMIT = 10
ENUM_MAX_N = 5
ENUM_MAX_EDGES = 10


@dataclass(frozen=True)
class RobustColoringCertificate:
    selection: Selection
    parts: tuple[tuple[int, ...], ...]
    meta: Mapping[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        parts = tuple(tuple(sorted(p)) for p in self.parts if p)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "meta", MappingProxyType(dict(self.meta)))

    @property
    def num_blocks(self) -> int:
        return len(self.parts)

    def colors(self, n: int) -> list[int]:
        out = [-1] * n
        for c, part in enumerate(self.parts):
            for v in part:
                out[v] = c
        return out


@dataclass(frozen=True)
class RobustIndependenceCertificate:
    selection: Selection
    subset: tuple[int, ...]
    meta: Mapping[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "subset", tuple(sorted(self.subset)))
        object.__setattr__(self, "meta", MappingProxyType(dict(self.meta)))

    @property
    def size(self) -> int:
        return len(self.subset)


@dataclass(frozen=True)
class RobustCliqueWitness:
    selection: Selection
    value: int


@dataclass(frozen=True)
class Verdict:
    """Outcome of a certificate check; falsy when the check failed.

    ``template`` names the offending vertices as ``{0}``, ``{1}``, ... so they
    can be rendered 0-based (``detail``) or shifted for 1-based file formats.
    """

    ok: bool
    reason: str = ""
    template: str = ""
    vertices: tuple[int, ...] = ()

    def __bool__(self):
        return self.ok

    @property
    def detail(self) -> str:
        return self.render_detail(0)

    def render_detail(self, base: int = 0) -> str:
        return self.template.format(*(v + base for v in self.vertices))

    def render(self, base: int = 0) -> str:
        if self.ok:
            return "OK"
        detail = self.render_detail(base)
        return f"FAIL {self.reason}" + (f" {detail}" if detail else "")

    def __str__(self):
        return self.render(0)


# --------------------------------------------------------------------------
# Erasing selections


def erasing_selection(n: int, edges: Iterable[Edge]) -> Selection:
    """A 1-selection whose image is exactly ``edges``.

    Works per component of ``(range(n), edges)``, which must have at most as
    many edges as vertices.  A tree is rooted at its lowest vertex and every
    other vertex selects the edge to its parent.  A unicyclic component has
    its cycle walked from the lowest cycle vertex towards the smaller of its
    two cycle neighbours, each cycle vertex selecting the edge to its
    successor; the remaining vertices select the edge towards the cycle.
    """
    edges = sorted({norm_edge(*e) for e in edges})
    if _pseudoforest_violation(n, edges):
        raise ValueError("edge set has a component with more edges than vertices")
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    for lst in nbrs.values():
        lst.sort()

    picks: dict[int, Edge] = {}
    seen: set[int] = set()
    for start in sorted(nbrs):
        if start in seen:
            continue
        comp = _component(nbrs, start)
        seen |= comp
        n_edges = sum(len(nbrs[v]) for v in comp) // 2
        if n_edges < len(comp):
            roots = [min(comp)]
        else:
            cycle = _cycle_order(nbrs, comp)
            for i, v in enumerate(cycle):
                picks[v] = norm_edge(v, cycle[(i + 1) % len(cycle)])
            roots = cycle
        # BFS outward; each newly reached vertex selects the edge it came by.
        reached = set(roots)
        queue = deque(sorted(roots))
        while queue:
            v = queue.popleft()
            for u in nbrs[v]:
                if u not in reached:
                    reached.add(u)
                    picks[u] = norm_edge(u, v)
                    queue.append(u)
    return Selection.from_edges(picks)


def _component(nbrs: dict[int, list[int]], start: int) -> set[int]:
    comp = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in nbrs[v]:
            if u not in comp:
                comp.add(u)
                stack.append(u)
    return comp


def _cycle_order(nbrs: dict[int, list[int]], comp: set[int]) -> list[int]:
    deg = {v: len(nbrs[v]) for v in comp}
    alive = set(comp)
    leaves = [v for v in comp if deg[v] == 1]
    while leaves:
        v = leaves.pop()
        alive.discard(v)
        for u in nbrs[v]:
            if u in alive:
                deg[u] -= 1
                if deg[u] == 1:
                    leaves.append(u)
    first = min(alive)
    ring = [first]
    prev, cur = first, min(u for u in nbrs[first] if u in alive)
    while cur != first:
        ring.append(cur)
        nxt = next(u for u in nbrs[cur] if u in alive and u != prev)
        prev, cur = cur, nxt
    return ring


def block_erasing_selection(G: Graph, blocks: Iterable[Iterable[int]]) -> Selection:
    """Erase every edge inside each block (blocks must be pairwise disjoint)."""
    edges = []
    for block in blocks:
        m = mask_of(block)
        edges.extend(e for e in G.edge_list if (m >> e[0] & 1) and (m >> e[1] & 1))
    return erasing_selection(G.n, edges)


# --------------------------------------------------------------------------
# Solvers


def _check(G: Graph, limit: int, what: str) -> None:
    if G.n > limit:
        raise SizeLimitError(f"{what}: n={G.n} exceeds the exact-solver limit {limit}")


def chi1_exact(G: Graph, limit: int = CHI1_LIMIT) -> tuple[int, RobustColoringCertificate]:
    """Robust chromatic number with a certificate.

    Minimum partition of V into quasi-unicyclic blocks; the selection erases
    each block's internal edges using only vertices of that block.
    """
    _check(G, limit, "chi1_exact")
    flags = _subsets.quasi_unicyclic_flags(G.adj, G.n)
    k, masks = _subsets.min_cover(flags, G.n)
    parts = [list(iter_bits(m)) for m in masks]
    cert = RobustColoringCertificate(block_erasing_selection(G, parts), tuple(map(tuple, parts)))
    return k, cert


def alpha1_exact(G: Graph, limit: int = ALPHA1_LIMIT) -> tuple[int, RobustIndependenceCertificate]:
    """Largest vertex set inducing a quasi-unicyclic graph, with certificate.

    Edges inside U can only be removed by selections at vertices of U, so U
    is robust independent exactly when G[U] is quasi-unicyclic.
    """
    _check(G, limit, "alpha1_exact")
    if G.n == 0:
        return 0, RobustIndependenceCertificate(Selection.empty(), ())
    flags = _subsets.quasi_unicyclic_flags(G.adj, G.n)
    sizes = np.where(flags, _subsets.popcounts(G.n), -1)
    best = int(np.argmax(sizes))  # argmax returns the first, i.e. smallest, mask
    subset = tuple(iter_bits(best))
    return len(subset), RobustIndependenceCertificate(block_erasing_selection(G, [subset]), subset)


def _cliques_of_size(G: Graph, size: int) -> list[int]:
    """Vertex masks of all cliques with exactly ``size`` vertices."""
    out = []

    def grow(R: int, count: int, P: int) -> None:
        if count == size:
            out.append(R)
            return
        for v in iter_bits(P):
            P &= ~(1 << v)
            if (P & G.adj[v]).bit_count() >= size - count - 1:
                grow(R | 1 << v, count + 1, P & G.adj[v])

    grow(0, 0, G.full_mask)
    return out


def _hitting_removable_set(G: Graph, cliques: list[int]) -> list[Edge] | None:
    """A removable edge set meeting the edge set of every given clique."""
    clique_edges = []
    for c in cliques:
        vs = list(iter_bits(c))
        clique_edges.append([(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]])

    def search(D: list[Edge], Dset: set[Edge]) -> list[Edge] | None:
        for es in clique_edges:
            if not any(e in Dset for e in es):
                break
        else:
            return D
        if len(D) >= G.n:
            return None
        for e in es:
            D.append(e)
            Dset.add(e)
            if not _pseudoforest_violation(G.n, D):
                found = search(D, Dset)
                if found is not None:
                    return found
            D.pop()
            Dset.discard(e)
        return None

    return search([], set())


def omega1_exact(G: Graph, limit: int = OMEGA1_LIMIT) -> tuple[int, RobustCliqueWitness]:
    """Robust clique number: min over removable D of omega(G - D).

    Tries targets w = 1, 2, ... and searches for a removable D that breaks
    every clique on w + 1 vertices, branching on the edges of the first
    clique D leaves intact.
    """
    _check(G, limit, "omega1_exact")
    if G.n == 0:
        return 0, RobustCliqueWitness(Selection.empty(), 0)
    omega, _ = clique_number(G)
    for w in range(1, omega + 1):
        D = [] if w == omega else _hitting_removable_set(G, _cliques_of_size(G, w + 1))
        if D is not None:
            f = erasing_selection(G.n, D)
            value, _ = clique_number(G.without_edges(D))
            return value, RobustCliqueWitness(f, value)
    raise AssertionError("unreachable: D = {} always achieves omega(G)")  # pragma: no cover


# --------------------------------------------------------------------------
# Verification


def verify_robust_coloring(G: Graph, cert: RobustColoringCertificate) -> Verdict:
    seen: dict[int, int] = {}
    for c, part in enumerate(cert.parts):
        for v in part:
            if not 0 <= v < G.n:
                return Verdict(False, "not-a-partition", "vertex {0} out of range", (v,))
            if v in seen:
                return Verdict(False, "not-a-partition", "vertex {0} in two blocks", (v,))
            seen[v] = c
    if len(seen) != G.n:
        missing = min(set(range(G.n)) - set(seen))
        return Verdict(False, "not-a-partition", "vertex {0} uncoloured", (missing,))
    issue = selection_issue(G, cert.selection)
    if issue is not None:
        return Verdict(False, "invalid-selection", *issue)
    removed = cert.selection.image()
    for u, v in G.edge_list:
        if seen[u] == seen[v] and (u, v) not in removed:
            return Verdict(False, "monochromatic-edge", "{0}-{1}", (u, v))
    return Verdict(True)


def verify_robust_independent(G: Graph, cert: RobustIndependenceCertificate) -> Verdict:
    members = set(cert.subset)
    if len(members) != len(cert.subset):
        return Verdict(False, "not-a-set", "repeated vertex")
    bad = sorted(v for v in members if not 0 <= v < G.n)
    if bad:
        return Verdict(False, "not-a-set", "vertex {0} out of range", (bad[0],))
    issue = selection_issue(G, cert.selection)
    if issue is not None:
        return Verdict(False, "invalid-selection", *issue)
    removed = cert.selection.image()
    for u, v in G.edge_list:
        if u in members and v in members and (u, v) not in removed:
            return Verdict(False, "surviving-edge", "{0}-{1}", (u, v))
    return Verdict(True)


# --------------------------------------------------------------------------
# The raw definition


def removal_image_masks(G: Graph) -> set[int]:
    """Edge masks (over ``G.edge_list``) of every 1-selection image."""
    if G.n > ENUM_MAX_N or G.m > ENUM_MAX_EDGES:
        raise SizeLimitError(
            f"enumerate_removed_graphs: needs n <= {ENUM_MAX_N} and "
            f"|E| <= {ENUM_MAX_EDGES}, got n={G.n}, |E|={G.m}"
        )
    idx = G.edge_index
    options = [[0] + [1 << idx[e] for e in G.incident_edges(v)] for v in range(G.n)]
    images = set()
    for combo in itertools.product(*options):
        m = 0
        for bit in combo:
            m |= bit
        images.add(m)
    return images


def enumerate_removed_graphs(G: Graph) -> set[frozenset[Edge]]:
    """Every edge set ``E(G) - E(G_f)`` over all 1-selections ``f``."""
    return {G.edges_from_mask(m) for m in removal_image_masks(G)}
