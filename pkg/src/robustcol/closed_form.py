"""Closed formulas and classifiers for the robust chromatic number.

Each evaluator reports which case of the formula it used.  The complete
multipartite base formula is available in two modes: ``as_printed`` returns
``ceil((p + floor(3q/2)) / 3)`` verbatim, ``oracle_validated`` returns values
measured by the exact oracle (see :func:`multipartite_base_table`), which
differ from the printed ones whenever p = 2 (mod 3) and q is odd.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import DomainError
from .families import (
    ThresholdPartition,
    gen_complete_multipartite,
    is_omega_unique_threshold,
    validate_threshold_partition,
)
from .graph import Graph, connected_components, require_bipartite

AS_PRINTED = "as_printed"
ORACLE_VALIDATED = "oracle_validated"
MODES = (AS_PRINTED, ORACLE_VALIDATED)

THRESHOLD_CLAUSES = ("not-omega-unique", "ceil-third")
BASE_CLAUSES = ("empty", "base-printed", "base-table", "base-extrapolated")

# Largest p + 2q swept by the oracle for the base table.
BASE_TABLE_TOTAL = 11


@dataclass(frozen=True)
class FormulaResult:
    value: int
    clause: str
    mode: str = ""
    printed: int | None = None  # printed-formula value, set only when it differs
    peeled: int = 0

    @property
    def divergent(self) -> bool:
        return self.printed is not None


def chi1_threshold(G: Graph, tp: ThresholdPartition) -> FormulaResult:
    """Robust chromatic number of a threshold graph from its partition.

    chi(G) = q = |A|.  The value is q/3 + 1 when q = 0 (mod 3) and the
    maximum clique is not unique, and ceil(q/3) otherwise.
    """
    validate_threshold_partition(G, tp)
    q = tp.q
    if q % 3 == 0 and q > 0 and not is_omega_unique_threshold(G, tp):
        return FormulaResult(q // 3 + 1, "not-omega-unique")
    return FormulaResult(-(-q // 3), "ceil-third")


def chi1_split_upper(chi: int) -> int:
    """Upper bound ceil((chi - 1) / 3) + 1 for non-bipartite split graphs."""
    if chi <= 2:
        raise DomainError("split upper bound needs chi >= 3; bipartite split graphs have chi1 = 1")
    return -(-(chi - 1) // 3) + 1


def printed_base(p: int, q: int) -> int:
    return -(-(p + 3 * q // 2) // 3)


@lru_cache(maxsize=None)
def multipartite_base_table() -> dict[tuple[int, int], int]:
    """Exact chi1 of K with p singleton parts and q pair parts, p + 2q <= 11.

    Computed once with the exact oracle; read-only afterwards.
    """
    from .oracle import chi1_exact

    table = {}
    for q in range(BASE_TABLE_TOTAL // 2 + 1):
        for p in range(BASE_TABLE_TOTAL - 2 * q + 1):
            if p + q == 0:
                table[p, q] = 0
                continue
            G, _ = gen_complete_multipartite([1] * p + [2] * q)
            table[p, q] = chi1_exact(G)[0]
    return table


@lru_cache(maxsize=None)
def base_identities_hold() -> bool:
    """Whether f(p,q) = f(p-3,q) + 1 = f(p,q-2) + 1 on the whole table."""
    t = multipartite_base_table()
    for (p, q), v in t.items():
        if (p - 3, q) in t and t[p - 3, q] + 1 != v:
            return False
        if (p, q - 2) in t and t[p, q - 2] + 1 != v:
            return False
    return True


def chi1_multipartite_base(p: int, q: int, mode: str = ORACLE_VALIDATED) -> FormulaResult:
    """chi1 of the complete multipartite graph with p parts of size 1 and q of size 2."""
    if p < 0 or q < 0:
        raise DomainError(f"need p, q >= 0, got p={p}, q={q}")
    if mode not in MODES:
        raise DomainError(f"mode must be one of {MODES}, got {mode!r}")
    printed = printed_base(p, q)
    if p + q == 0:
        return FormulaResult(0, "empty", mode)
    if mode == AS_PRINTED:
        return FormulaResult(printed, "base-printed", mode)

    table = multipartite_base_table()
    if (p, q) in table:
        value, clause = table[p, q], "base-table"
    else:
        if not base_identities_hold():
            raise DomainError(f"({p},{q}) is outside the oracle table and the "
                              "recursion identities failed on it")
        steps = 0
        while (p, q) not in table:
            if p >= 3:
                p -= 3
            else:
                q -= 2
            steps += 1
        value, clause = table[p, q] + steps, "base-extrapolated"
    return FormulaResult(value, clause, mode, None if value == printed else printed)


def _check_sizes(sizes: Sequence[int]) -> list[int]:
    sizes = list(sizes)
    if any(not isinstance(s, int) or s < 1 for s in sizes):
        raise DomainError(f"part sizes must be positive integers, got {sizes}")
    if sizes != sorted(sizes):
        raise DomainError(f"part sizes must be ascending, got {sizes}")
    return sizes


def peel_multipartite(sizes: Sequence[int]) -> tuple[int, list[int]]:
    """Apply chi1(K_{n_1..n_t}) = 1 + chi1(K_{n_1 - 1, n_2, .., n_{t-1}}) while n_t >= 3.

    Returns the number of peeling steps and the remaining sizes (all <= 2).
    Parts that reach size 0 are dropped.
    """
    sizes = _check_sizes(sizes)
    steps = 0
    while sizes and sizes[-1] >= 3:
        sizes.pop()
        if sizes:
            sizes[0] -= 1
            if sizes[0] == 0:
                sizes.pop(0)
        sizes.sort()
        steps += 1
    return steps, sizes


def chi1_multipartite(sizes: Sequence[int], mode: str = ORACLE_VALIDATED) -> FormulaResult:
    steps, rest = peel_multipartite(sizes)
    base = chi1_multipartite_base(rest.count(1), rest.count(2), mode)
    printed = None if base.printed is None else base.printed + steps
    return FormulaResult(base.value + steps, base.clause, mode, printed, steps)


def multipartite_upper_bound(sizes: Sequence[int]) -> int:
    """t - j for the largest j with n_1 + ... + n_j <= t - j (j = 0 if none)."""
    sizes = _check_sizes(sizes)
    t = len(sizes)
    j = 0
    prefix = 0
    for i, s in enumerate(sizes, start=1):
        prefix += s
        if prefix <= t - i:
            j = i
    return t - j


def chi1_tripartite(r: int, s: int, t: int) -> int:
    if not 1 <= r <= s <= t:
        raise DomainError(f"need 1 <= r <= s <= t, got ({r},{s},{t})")
    if t < 2:
        raise DomainError("the tripartite classifier needs t >= 2; use chi1_multipartite")
    return 2 if r <= 2 else 3


def chi1_bipartite(G: Graph) -> int:
    """2 if some component has more edges than vertices, else 1 (0 on no vertices)."""
    require_bipartite(G)
    if G.n == 0:
        return 0
    for comp in connected_components(G):
        mask = sum(1 << v for v in comp)
        if G.edges_within(mask) > len(comp):
            return 2
    return 1


def chi1_bounds(chi: int) -> tuple[int, int]:
    """General bounds ceil(chi/3) <= chi1 <= chi."""
    return -(-chi // 3), chi


def chi1_chordal_upper(chi: int) -> int:
    return -(-chi // 2)


def chi1_r_tower(k: int) -> int:
    """chi1 = omega1 = ceil(k/2) on the tower G_k."""
    if k < 2:
        raise DomainError(f"tower needs k >= 2, got {k}")
    return -(-k // 2)


def chi1_unit_interval_upper(chi: int) -> int:
    """k + 1 where chi = 3k - r, r in {0, 1, 2}; 1 when chi <= 2."""
    if chi <= 2:
        return min(chi, 1)
    return math.ceil(chi / 3) + 1


def ekr_bound(n: int, k: int) -> int:
    """Maximum size of an intersecting family of k-subsets of [n]."""
    if k < 1 or n < 2 * k:
        raise DomainError(f"EKR bound needs n >= 2k, got n={n}, k={k}")
    return comb(n - 1, k - 1)


def hm_bound(n: int, k: int) -> int:
    """Maximum intersecting family with empty common intersection."""
    if k < 1 or n < 2 * k + 1:
        raise DomainError(f"Hilton-Milner bound needs n >= 2k+1, got n={n}, k={k}")
    return comb(n - 1, k - 1) - comb(n - k - 1, k - 1) + 1


def kneser_alpha1_threshold(k: int) -> int:
    """Smallest n for which alpha1(KG(n,k)) = C(n-1,k-1) + 1 is asserted."""
    return 8 * k * k


def alpha1_kneser(n: int, k: int) -> FormulaResult:
    if k < 2 or n < kneser_alpha1_threshold(k):
        raise DomainError(f"alpha1 formula for KG(n,{k}) only asserted for n >= {8 * k * k}")
    return FormulaResult(comb(n - 1, k - 1) + 1, "large-n")


def avoided_twice_bound(n: int, k: int) -> int:
    """Size bound 8k C(n-2,k-2) for robust independent families avoiding every element twice."""
    return 8 * k * comb(n - 2, k - 2)
