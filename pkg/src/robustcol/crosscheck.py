"""Cross-validation suites: oracle versus formulas versus constructions.

Each suite returns a :class:`Report`.  Reports are deterministic for fixed
arguments (seeded RNGs, rows sorted by descriptor) so two runs with the same
flags produce byte-identical text.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from math import comb

from . import closed_form as cf
from . import constructions as cons
from .families import (
    ThresholdPartition,
    gen_complete_multipartite,
    gen_kneser,
    gen_r_tower,
    gen_random_chordal,
    gen_split_tight,
    gen_threshold,
    interval_graph_matches,
    is_omega_unique,
    is_omega_unique_threshold,
    threshold_descriptor,
    threshold_partition_problem,
)
from .graph import (
    Graph,
    _pseudoforest_violation,
    build_graph,
    chromatic_number,
    clique_number,
    independence_number,
    is_quasi_unicyclic,
)
from .oracle import (
    alpha1_exact,
    chi1_exact,
    omega1_exact,
    removal_image_masks,
    verify_robust_coloring,
    verify_robust_independent,
)

DEFAULT_SEED = 1


def _natural_key(text: str):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", text)]


@dataclass
class Row:
    desc: str
    oracle: object = "-"
    formula: object = "-"
    constr: object = "-"
    extra: dict[str, object] = field(default_factory=dict)
    flags: list[str] = field(default_factory=list)
    skipped: str = ""

    def line(self) -> str:
        if self.skipped:
            return f"row {self.desc} skipped reason={self.skipped}"
        parts = [f"row {self.desc}", f"oracle={self.oracle}", f"formula={self.formula}",
                 f"constr={self.constr}"]
        parts += [f"{k}={v}" for k, v in self.extra.items()]
        parts.append(f"flags={','.join(self.flags) or '-'}")
        return " ".join(parts)


@dataclass
class Report:
    suite: str
    params: dict[str, object]
    rows: list[Row] = field(default_factory=list)
    tallies: dict[str, list[int]] = field(default_factory=dict)

    def tally(self, tag: str, ok: bool) -> bool:
        counts = self.tallies.setdefault(tag, [0, 0])
        counts[0 if ok else 1] += 1
        return ok

    def matches(self, tag: str) -> int:
        return self.tallies.get(tag, [0, 0])[0]

    def mismatches(self, tag: str) -> int:
        return self.tallies.get(tag, [0, 0])[1]

    def flagged(self, flag: str | None = None) -> list[Row]:
        return [r for r in self.rows if (r.flags if flag is None else flag in r.flags)]

    def text(self) -> str:
        head = " ".join(f"{k}={v}" for k, v in self.params.items())
        out = [f"crosscheck {self.suite} {head}".rstrip()]
        out += [r.line() for r in sorted(self.rows, key=lambda r: _natural_key(r.desc))]
        for tag in sorted(self.tallies):
            ok, bad = self.tallies[tag]
            out.append(f"tag {tag} match={ok} mismatch={bad}")
        skipped = sum(1 for r in self.rows if r.skipped)
        out.append(f"summary rows={len(self.rows)} skipped={skipped} "
                   f"flagged={len(self.flagged())}")
        return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# Graph enumeration helpers


def all_labeled_graphs(n: int) -> Iterator[tuple[int, Graph]]:
    """Every graph on vertices 0..n-1, keyed by its mask over K_n's sorted edges."""
    pairs = list(itertools.combinations(range(n), 2))
    for gm in range(1 << len(pairs)):
        yield gm, Graph(n, frozenset(pairs[i] for i in range(len(pairs)) if gm >> i & 1))


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)
                              if rng.random() < p))


def _tree_code(adj: list[list[int]], root: int, parent: int) -> str:
    return "(" + "".join(sorted(_tree_code(adj, c, root) for c in adj[root] if c != parent)) + ")"


def _tree_canonical(n: int, edges: list[tuple[int, int]]) -> str:
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    # centres: strip leaves layer by layer
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] <= 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return min(_tree_code(adj, c, -1) for c in layer)


def nonisomorphic_trees(n: int) -> list[Graph]:
    """All trees on n vertices up to isomorphism, grown leaf by leaf."""
    if n < 1:
        return []
    level = {"()": []}
    for size in range(2, n + 1):
        nxt = {}
        for edges in level.values():
            for v in range(size - 1):
                grown = edges + [(v, size - 1)]
                nxt.setdefault(_tree_canonical(size, grown), grown)
        level = nxt
    return [build_graph(n, e) for _, e in sorted(level.items())]


def ascending_partitions(total: int, smallest: int = 1) -> Iterator[list[int]]:
    if total == 0:
        yield []
        return
    for first in range(smallest, total + 1):
        for rest in ascending_partitions(total - first, first):
            yield [first] + rest


# --------------------------------------------------------------------------
# Suites


def suite_removable_lemma(limit_n: int = 5, limit_edges: int = 10) -> Report:
    """Selection images versus the per-component |E| <= |V| criterion, all graphs."""
    rep = Report("removable-lemma", {"limit-n": limit_n, "limit-edges": limit_edges})
    for n in range(1, limit_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        if len(pairs) > limit_edges:
            rep.rows.append(Row(f"removable-lemma[n={n}]", skipped="edge-limit"))
            continue
        removable = [not _pseudoforest_violation(n, [pairs[i] for i in range(len(pairs)) if D >> i & 1])
                     for D in range(1 << len(pairs))]
        graphs = bad = 0
        for gm, G in all_labeled_graphs(n):
            # G.edge_list is K_n's pair order restricted to gm, so map masks back
            positions = [i for i in range(len(pairs)) if gm >> i & 1]
            images = {sum(1 << positions[j] for j in range(len(positions)) if m >> j & 1)
                      for m in removal_image_masks(G)}
            criterion = set()
            sub = gm
            while True:
                if removable[sub]:
                    criterion.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & gm
            graphs += 1
            if not rep.tally("removable-lemma", images == criterion):
                bad += 1
        rep.rows.append(Row(f"removable-lemma[n={n}]", extra={"graphs": graphs, "mismatches": bad},
                            flags=["mismatch"] if bad else []))
    return rep


def suite_definition(limit_n: int = 5) -> Report:
    """chi1/alpha1/omega1 solvers against min/max over every 1-selection."""
    rep = Report("definition", {"limit-n": limit_n})
    for n in range(1, limit_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        table = {}
        for gm, H in all_labeled_graphs(n):
            table[gm] = (chromatic_number(H)[0], independence_number(H)[0], clique_number(H)[0])
        bad = {"chi1": 0, "alpha1": 0, "omega1": 0}
        graphs = 0
        for gm, G in all_labeled_graphs(n):
            positions = [i for i in range(len(pairs)) if gm >> i & 1]
            survivors = []
            for m in removal_image_masks(G):
                removed = sum(1 << positions[j] for j in range(len(positions)) if m >> j & 1)
                survivors.append(table[gm & ~removed])
            want = {
                "chi1": min(s[0] for s in survivors),
                "alpha1": max(s[1] for s in survivors),
                "omega1": min(s[2] for s in survivors),
            }
            got = {"chi1": chi1_exact(G)[0], "alpha1": alpha1_exact(G)[0],
                   "omega1": omega1_exact(G)[0]}
            graphs += 1
            for key in bad:
                if not rep.tally(f"definition-{key}", want[key] == got[key]):
                    bad[key] += 1
        rep.rows.append(Row(f"definition[n={n}]",
                            extra={"graphs": graphs} | {f"{k}_mismatch": v for k, v in bad.items()},
                            flags=[k for k, v in bad.items() if v]))
    return rep


def suite_bounds(limit_n: int = 6, random_count: int = 500, random_max_n: int = 12,
                 seed: int = DEFAULT_SEED) -> Report:
    """ceil(chi/3) <= chi1 <= chi, and chi1 = 1 iff quasi-unicyclic."""
    rep = Report("bounds", {"limit-n": limit_n, "random": random_count,
                            "random-max-n": random_max_n, "seed": seed})

    def check(G: Graph) -> tuple[int, int, list[str]]:
        chi = chromatic_number(G)[0]
        k, cert = chi1_exact(G)
        flags = []
        lo, hi = cf.chi1_bounds(chi)
        if not rep.tally("chi-bounds", lo <= k <= hi):
            flags.append("bound-violation")
        if not rep.tally("qu-iff-chi1-one", (k <= 1) == is_quasi_unicyclic(G)):
            flags.append("qu-mismatch")
        if not rep.tally("certificate", bool(verify_robust_coloring(G, cert))):
            flags.append("cert-invalid")
        return chi, k, flags

    for n in range(1, limit_n + 1):
        count = 0
        flagged = set()
        for _, G in all_labeled_graphs(n):
            count += 1
            flagged.update(check(G)[2])
        rep.rows.append(Row(f"bounds-all[n={n}]", extra={"graphs": count}, flags=sorted(flagged)))

    rng = random.Random(seed)
    for i in range(random_count):
        n = rng.randint(1, random_max_n)
        p = round(rng.random(), 3)
        G = random_graph(rng, n, p)
        chi, k, flags = check(G)
        rep.rows.append(Row(f"bounds-random[i={i};n={n};p={p}]", oracle=k, extra={"chi": chi},
                            flags=flags))
    return rep


def threshold_partition_variants(G: Graph, tp: ThresholdPartition) -> list[ThresholdPartition]:
    """The given partition plus valid variants obtained by choosing a different
    a_q or a_{q-1} where the neighbourhood conditions leave room."""
    A, B = list(tp.clique_order), list(tp.independent_order)
    out = [tp]
    if len(A) < 2:
        return out
    candidates = set()
    # a_q can be traded for an independent vertex with the same neighbourhood
    for i, b in enumerate(B):
        alt = ThresholdPartition(tuple(A[:-1] + [b]), tuple(B[:i] + [A[-1]] + B[i + 1:]))
        candidates.add(alt)
    # reorder among clique vertices with equal closed neighbourhoods
    for i, a in enumerate(A):
        for j in range(i + 1, len(A)):
            if G.adj[a] | 1 << a == G.adj[A[j]] | 1 << A[j]:
                swapped = A[:]
                swapped[i], swapped[j] = swapped[j], swapped[i]
                candidates.add(ThresholdPartition(tuple(swapped), tuple(B)))
    for alt in sorted(candidates, key=lambda t: (t.clique_order, t.independent_order)):
        if alt != tp and threshold_partition_problem(G, alt) is None:
            out.append(alt)
    return out


def suite_threshold(max_len: int = 10) -> Report:
    """Threshold formula against the oracle on every creation sequence."""
    rep = Report("threshold", {"max-len": max_len})
    for length in range(1, max_len + 1):
        for tail in itertools.product("id", repeat=length - 1):
            seq = "d" + "".join(tail)
            G, tp = gen_threshold(seq)
            formula = cf.chi1_threshold(G, tp)
            k, _ = chi1_exact(G)
            cert = cons.construct_threshold_coloring(G, tp)
            variants = threshold_partition_variants(G, tp)
            criteria = {is_omega_unique_threshold(G, v) for v in variants}
            enumerated = is_omega_unique(G)
            flags = []
            ambiguous = criteria != {enumerated}
            if ambiguous:
                flags.append("omega-unique-ambiguity")
            elif not rep.tally("threshold-formula", formula.value == k):
                flags.append("formula-mismatch")
            if not rep.tally("threshold-certificate", bool(verify_robust_coloring(G, cert))):
                flags.append("cert-invalid")
            if not rep.tally("threshold-construction", cert.num_blocks == formula.value):
                flags.append("constr-mismatch")
            rep.rows.append(Row(
                threshold_descriptor(seq).tag(), oracle=k, formula=f"{formula.value}/{formula.clause}",
                constr=cert.num_blocks,
                extra={"q": tp.q, "unique_criterion": "/".join(str(int(c)) for c in sorted(criteria)),
                       "unique_enum": int(enumerated), "partitions": len(variants)},
                flags=flags))
    return rep


def suite_multipartite(max_total: int = 11, modes: tuple[str, ...] = cf.MODES) -> Report:
    rep = Report("multipartite", {"max-total": max_total, "modes": ",".join(modes)})
    for total in range(1, max_total + 1):
        for sizes in ascending_partitions(total):
            G, _ = gen_complete_multipartite(sizes)
            k, _ = chi1_exact(G)
            results = {m: cf.chi1_multipartite(sizes, m) for m in modes}
            cert = cons.construct_multipartite_coloring(sizes)
            bound = cf.multipartite_upper_bound(sizes)
            flags = []
            for m, r in results.items():
                if not rep.tally(m.replace("_", "-"), r.value == k):
                    flags.append(("printed" if m == cf.AS_PRINTED else "validated") + "-mismatch")
            if not rep.tally("certificate", bool(verify_robust_coloring(G, cert))):
                flags.append("cert-invalid")
            if not rep.tally("construction", cert.num_blocks == k):
                flags.append("constr-mismatch")
            if not rep.tally("upper-bound", k <= bound):
                flags.append("bound-violation")
            if sizes[0] >= len(sizes) and not rep.tally("smallest-part-at-least-t", k == len(sizes)):
                flags.append("min-part-mismatch")
            steps, rest = cf.peel_multipartite(sizes)
            rep.rows.append(Row(
                f"multipartite[sizes={','.join(map(str, sizes))}]", oracle=k,
                formula=",".join(f"{r.value}/{m}" for m, r in results.items()),
                constr=cert.num_blocks,
                extra={"base": f"({rest.count(1)},{rest.count(2)})", "peeled": steps,
                       "bound": bound},
                flags=flags))
    return rep


def suite_tripartite(max_total: int = 10) -> Report:
    rep = Report("tripartite", {"max-total": max_total})
    for r in range(1, max_total + 1):
        for s in range(r, max_total + 1):
            for t in range(max(s, 2), max_total - r - s + 1):
                G, _ = gen_complete_multipartite([r, s, t])
                k, _ = chi1_exact(G)
                v = cf.chi1_tripartite(r, s, t)
                flags = [] if rep.tally("tripartite", v == k) else ["formula-mismatch"]
                rep.rows.append(Row(f"tripartite[r={r};s={s};t={t}]", oracle=k, formula=v,
                                    flags=flags))
    return rep


def random_bipartite(rng: random.Random, n: int, p: float) -> Graph:
    left = {v for v in range(n) if rng.random() < 0.5}
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)
                              if (u in left) != (v in left) and rng.random() < p))


def suite_bipartite(max_n: int = 9, random_count: int = 300, tree_max_n: int = 8,
                    seed: int = DEFAULT_SEED) -> Report:
    rep = Report("bipartite", {"max-n": max_n, "random": random_count,
                               "tree-max-n": tree_max_n, "seed": seed})

    def check(desc: str, G: Graph) -> None:
        k, _ = chi1_exact(G)
        v = cf.chi1_bipartite(G)
        flags = [] if rep.tally("bipartite", v == k) else ["formula-mismatch"]
        rep.rows.append(Row(desc, oracle=k, formula=v, extra={"n": G.n, "m": G.m}, flags=flags))

    for n in range(1, tree_max_n + 1):
        for i, T in enumerate(nonisomorphic_trees(n)):
            check(f"tree[n={n};i={i}]", T)
    rng = random.Random(seed)
    for i in range(random_count):
        n = rng.randint(1, max_n)
        p = round(rng.random(), 3)
        check(f"bipartite-random[i={i};n={n};p={p}]", random_bipartite(rng, n, p))
    return rep


def suite_chordal(count: int = 200, max_n: int = 40, oracle_max_n: int = 14,
                  seed: int = DEFAULT_SEED) -> Report:
    rep = Report("chordal", {"count": count, "max-n": max_n, "oracle-max-n": oracle_max_n,
                             "seed": seed})
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(1, max_n)
        density = round(rng.uniform(0.1, 0.9), 3)
        gseed = rng.randrange(10**6)
        G, desc = gen_random_chordal(n, density, gseed)
        cert = cons.construct_chordal_half(G)
        # chordal graphs are perfect, so chi = omega for the larger ones
        chi = chromatic_number(G)[0] if n <= 20 else clique_number(G, limit=n)[0]
        half = cf.chi1_chordal_upper(chi)
        flags = []
        if not rep.tally("certificate", bool(verify_robust_coloring(G, cert))):
            flags.append("cert-invalid")
        if not rep.tally("half-blocks", cert.num_blocks == half):
            flags.append("block-count")
        row = Row(f"chordal[i={i};n={n};d={density};seed={gseed}]", formula=half,
                  constr=cert.num_blocks, extra={"chi": chi}, flags=flags)
        if n <= oracle_max_n:
            k, _ = chi1_exact(G)
            w, _ = omega1_exact(G, limit=oracle_max_n)
            row.oracle = k
            row.extra["omega1"] = w
            if not rep.tally("omega1<=chi1<=half", w <= k <= half):
                flags.append("bound-violation")
        rep.rows.append(row)
    return rep


def random_split(rng: random.Random, a: int, b: int, p: float) -> tuple[Graph, list[int], list[int]]:
    """Clique 0..a-1, independent a..a+b-1, random cross edges; no independent
    vertex sees the whole clique, so the clique is maximum."""
    edges = [(u, v) for u in range(a) for v in range(u + 1, a)]
    for j in range(a, a + b):
        nbrs = [u for u in range(a) if rng.random() < p]
        if len(nbrs) == a:
            nbrs.pop(rng.randrange(a))
        edges += [(u, j) for u in nbrs]
    return build_graph(a + b, edges), list(range(a)), list(range(a, a + b))


def suite_split(ts: tuple[int, ...] = (3, 4, 5, 6), random_count: int = 100,
                random_max_n: int = 12, seed: int = DEFAULT_SEED) -> Report:
    rep = Report("split", {"t": ",".join(map(str, ts)), "random": random_count,
                           "random-max-n": random_max_n, "seed": seed})
    for t in ts:
        G, desc = gen_split_tight(t)
        k, _ = chi1_exact(G)
        upper = cf.chi1_split_upper(t)
        cert = cons.construct_split_coloring(G, desc.extra["clique"], desc.extra["independent"])
        flags = []
        if not rep.tally("tight", k == upper):
            flags.append("not-tight")
        if not rep.tally("certificate", bool(verify_robust_coloring(G, cert))):
            flags.append("cert-invalid")
        if not rep.tally("construction", cert.num_blocks == upper):
            flags.append("constr-mismatch")
        rep.rows.append(Row(desc.tag(), oracle=k, formula=upper, constr=cert.num_blocks,
                            flags=flags))
    rng = random.Random(seed)
    for i in range(random_count):
        a = rng.randint(3, random_max_n - 1)
        b = rng.randint(1, random_max_n - a)
        p = round(rng.random(), 3)
        G, A, B = random_split(rng, a, b, p)
        k, _ = chi1_exact(G)
        upper = cf.chi1_split_upper(a)
        cert = cons.construct_split_coloring(G, A, B)
        flags = []
        if not rep.tally("upper-bound", k <= upper):
            flags.append("bound-violation")
        if not rep.tally("certificate", bool(verify_robust_coloring(G, cert))):
            flags.append("cert-invalid")
        if not rep.tally("construction", cert.num_blocks == upper):
            flags.append("constr-mismatch")
        rep.rows.append(Row(f"split-random[i={i};a={a};b={b};p={p}]", oracle=k, formula=upper,
                            constr=cert.num_blocks, flags=flags))
    return rep


def suite_rtower(ks: tuple[int, ...] = (2, 3, 4, 5), omega_max_n: int = 10) -> Report:
    rep = Report("rtower", {"k": ",".join(map(str, ks)), "omega-max-n": omega_max_n})
    for k in ks:
        G, desc = gen_r_tower(k)
        target = cf.chi1_r_tower(k)
        chi1, _ = chi1_exact(G)
        cert = cons.construct_chordal_half(G)
        flags = []
        extra = {"n": G.n, "omega": clique_number(G)[0],
                 "interval": int(interval_graph_matches(G, desc.extra["intervals"]))}
        if not rep.tally("interval-model", bool(extra["interval"])):
            flags.append("interval-mismatch")
        if not rep.tally("chi1", chi1 == target):
            flags.append("chi1-mismatch")
        if not rep.tally("certificate", bool(verify_robust_coloring(G, cert))
                         and cert.num_blocks == target):
            flags.append("constr-mismatch")
        if G.n <= omega_max_n:
            w, _ = omega1_exact(G, limit=omega_max_n)
            extra["omega1"] = w
            if not rep.tally("omega1", w == target):
                flags.append("omega1-mismatch")
        rep.rows.append(Row(desc.tag(), oracle=chi1, formula=target, constr=cert.num_blocks,
                            extra=extra, flags=flags))
    return rep


def suite_unitinterval(max_n: int = 60, max_p: int = 8, oracle_max_n: int = 16,
                       random_subsets: int = 40, seed: int = DEFAULT_SEED) -> Report:
    rep = Report("unitinterval", {"max-n": max_n, "max-p": max_p, "oracle-max-n": oracle_max_n,
                                  "random-subsets": random_subsets, "seed": seed})

    def check(desc: str, n: int, p: int, subset=None) -> None:
        G, _ = cons.path_power_subgraph(n, p, subset)
        cert = cons.construct_unit_interval_coloring(n, p, subset)
        chi = chromatic_number(G, limit=max(G.n, 24))[0] if subset is not None else min(n, p + 1)
        flags = []
        if not rep.tally("certificate", bool(verify_robust_coloring(G, cert))):
            flags.append("cert-invalid")
        if not rep.tally("block-bound", cert.num_blocks <= math.ceil((p + 1) / 3) + 2):
            flags.append("block-bound")
        # the construction only knows the host power, so an induced subgraph is
        # measured against the host clique size
        host_chi = min(n, p + 1)
        if not rep.tally("additive-gap", cert.num_blocks - host_chi / 3 <= 2):
            flags.append("gap")
        row = Row(desc, formula=cf.chi1_unit_interval_upper(p + 1), constr=cert.num_blocks,
                  extra={"chi": chi, "host_chi": host_chi}, flags=flags)
        if G.n <= oracle_max_n:
            k, _ = chi1_exact(G)
            row.oracle = k
            if not rep.tally("lower-bound", k >= math.ceil(chi / 3)):
                flags.append("lower-bound")
            if not rep.tally("oracle<=constr", k <= cert.num_blocks):
                flags.append("constr-below-oracle")
        rep.rows.append(row)

    for n in range(1, max_n + 1):
        for p in range(1, max_p + 1):
            check(f"pathpower[n={n};p={p}]", n, p)
    rng = random.Random(seed)
    for i in range(random_subsets):
        n = rng.randint(2, max_n)
        p = rng.randint(1, max_p)
        size = rng.randint(1, min(n, oracle_max_n))
        subset = sorted(rng.sample(range(n), size))
        check(f"pathpower-induced[i={i};n={n};p={p};size={size}]", n, p, subset)
    return rep


_EXTRA_FAMILIES = {
    # k, m -> extra family for KG(2k+m, k): pairwise meeting in exactly one point
    (3, 1): [(1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6)],
}


def suite_kneser(max_n_k2: int = 15) -> Report:
    rep = Report("kneser", {"max-n-k2": max_n_k2})

    for n, k in [(4, 2), (5, 2), (6, 2), (7, 2), (6, 3), (7, 3)]:
        G, desc = gen_kneser(n, k)
        a, _ = independence_number(G, limit=G.n)
        ok = rep.tally("ekr", a == cf.ekr_bound(n, k))
        rep.rows.append(Row(f"kneser-alpha[n={n};k={k}]", oracle=a, formula=cf.ekr_bound(n, k),
                            flags=[] if ok else ["ekr-mismatch"]))

    for n in range(5, 13):
        G, _ = gen_kneser(n, 2)
        cert = cons.construct_kneser_alpha1(n, 2)
        ok = rep.tally("alpha1-certificate", bool(verify_robust_independent(G, cert))
                       and cert.size == comb(n - 1, 1) + 1)
        rep.rows.append(Row(f"kneser-alpha1-cert[n={n};k=2]", formula=cf.ekr_bound(n, 2) + 1,
                            constr=cert.size, flags=[] if ok else ["cert-invalid"]))

    for n, k in [(5, 2), (6, 2)]:
        G, _ = gen_kneser(n, k)
        a1, cert = alpha1_exact(G)
        ok = bool(verify_robust_independent(G, cert))
        floor_ = cf.ekr_bound(n, k) + 1
        ok = rep.tally("alpha1-oracle", ok and a1 >= floor_)
        rep.rows.append(Row(f"kneser-alpha1-oracle[n={n};k={k}]", oracle=a1, formula=floor_,
                            flags=[] if ok else ["below-star-plus-one"]))

    for k, ns in [(2, range(4, max_n_k2 + 1)), (3, range(6, 11))]:
        for n in ns:
            G, _ = gen_kneser(n, k)
            c = cons.kneser_c(n, k)
            cert = cons.construct_kneser_chi1(n, k)
            flags = []
            if not rep.tally("chi1-certificate", bool(verify_robust_coloring(G, cert))
                             and cert.num_blocks == n - c + 1):
                flags.append("cert-invalid")
            row = Row(f"kneser-chi1[n={n};k={k}]", formula=n - c + 1, constr=cert.num_blocks,
                      extra={"c": c}, flags=flags)
            if G.n <= 18:
                kk, _ = chi1_exact(G)
                row.oracle = kk
                if not rep.tally("chi1-oracle<=constr", kk <= cert.num_blocks):
                    flags.append("constr-below-oracle")
                if (n, k) == (5, 2) and not rep.tally("petersen-chi1", kk == cert.num_blocks == 2):
                    flags.append("petersen-mismatch")
            rep.rows.append(row)

    for k in (2, 3):
        G, _ = gen_kneser(3 * k, k)
        cert = cons.construct_kneser_3k_family(k)
        want = comb(3 * k - 1, k - 1) + 2
        ok = rep.tally("star-plus-two", bool(verify_robust_independent(G, cert)) and cert.size == want)
        rep.rows.append(Row(f"kneser-star-plus-two[k={k}]", formula=want, constr=cert.size,
                            flags=[] if ok else ["cert-invalid"]))

    for (k, m), fam in _EXTRA_FAMILIES.items():
        n = 2 * k + m
        G, _ = gen_kneser(n, k)
        cert = cons.extra_family_certificate(k, m, fam)
        want = comb(n - 1, k - 1) + len(fam)
        ok = rep.tally("star-plus-extra", bool(verify_robust_independent(G, cert)) and cert.size == want)
        rep.rows.append(Row(f"kneser-star-plus-extra[k={k};m={m}]", formula=want, constr=cert.size,
                            flags=[] if ok else ["cert-invalid"]))

    spots = [("ekr", 5, 2, cf.ekr_bound, 4), ("ekr", 4, 2, cf.ekr_bound, 3),
             ("hm", 7, 3, cf.hm_bound, 13)]
    for name, n, k, fn, want in spots:
        v = fn(n, k)
        ok = rep.tally("bound-values", v == want)
        rep.rows.append(Row(f"kneser-{name}[n={n};k={k}]", formula=v, extra={"expected": want},
                            flags=[] if ok else ["value-mismatch"]))
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "removable-lemma": suite_removable_lemma,
    "definition": suite_definition,
    "bounds": suite_bounds,
    "threshold": suite_threshold,
    "multipartite": suite_multipartite,
    "tripartite": suite_tripartite,
    "bipartite": suite_bipartite,
    "chordal": suite_chordal,
    "split": suite_split,
    "rtower": suite_rtower,
    "unitinterval": suite_unitinterval,
    "kneser": suite_kneser,
}
