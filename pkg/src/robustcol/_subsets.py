"""Bitmask helpers and exact minimum covers by hereditary vertex-set families.

Vertex sets are ints (bit v set iff vertex v is a member).  A family given as
a flag array over all 2**n masks is *hereditary* when every subset of a
flagged mask is flagged; independent sets and quasi-unicyclic sets both are.
For a hereditary family a minimum cover of the vertex set is automatically a
partition, which is what the colouring solvers need.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence

import numpy as np

# Above this size the O(3^n) Python DP gives way to the counting method.
SMALL_DP_MAX_N = 10

# Two primes below 2**31 so products of residues stay inside int64.
_PRIMES = (2147483647, 2147483629)


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcounts(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << n, dtype=np.int64)).astype(np.int64)


def induced_edge_counts(adj: Sequence[int], n: int) -> np.ndarray:
    """Number of edges induced by every vertex mask, built by doubling."""
    counts = np.zeros(1 << n, dtype=np.int64)
    for v in range(n):
        h = 1 << v
        lower = np.arange(h, dtype=np.int64) & adj[v]
        counts[h : 2 * h] = counts[:h] + np.bitwise_count(lower)
    return counts


def down_closure_and(ok: np.ndarray, n: int) -> np.ndarray:
    """flag[S] := AND of ok[T] over all T subset of S."""
    out = ok.copy()
    for v in range(n):
        h = 1 << v
        view = out.reshape(-1, 2, h)
        view[:, 1, :] &= view[:, 0, :]
    return out


def independent_flags(adj: Sequence[int], n: int) -> np.ndarray:
    return induced_edge_counts(adj, n) == 0


def quasi_unicyclic_flags(adj: Sequence[int], n: int) -> np.ndarray:
    # A graph is quasi-unicyclic iff every induced subgraph has |E| <= |V|.
    ok = induced_edge_counts(adj, n) <= popcounts(n)
    return down_closure_and(ok, n)


def min_cover(flags: np.ndarray, n: int) -> tuple[int, list[int]]:
    """Minimum number of flagged masks partitioning ``range(n)``.

    Returns the count and the blocks.  Block ``i`` is the smallest flagged
    mask containing the lowest vertex not covered by blocks ``0..i-1`` such
    that the rest can still be finished optimally, so the output is
    reproducible.  ``flags`` must describe a hereditary family containing
    every singleton.
    """
    if n == 0:
        return 0, []
    if n <= SMALL_DP_MAX_N:
        return _min_cover_dp(flags.tolist(), n)
    return _min_cover_counting(flags, n)


def _submasks_with_low(S: int) -> Iterator[int]:
    """Submasks of S containing its lowest bit, in increasing order."""
    low = S & -S
    rest = S ^ low
    subs = []
    sub = rest
    while True:
        subs.append(sub | low)
        if sub == 0:
            break
        sub = (sub - 1) & rest
    return reversed(subs)


def _min_cover_dp(flags: list[bool], n: int) -> tuple[int, list[int]]:
    size = 1 << n
    dp = [0] * size
    for S in range(1, size):
        low = S & -S
        rest = S ^ low
        best = n + 1
        sub = rest
        while True:
            T = sub | low
            if flags[T]:
                c = dp[S ^ T] + 1
                if c < best:
                    best = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        dp[S] = best
    full = size - 1
    k = dp[full]
    blocks = []
    S, j = full, k
    while S:
        for T in _submasks_with_low(S):
            if flags[T] and dp[S ^ T] == j - 1:
                break
        else:  # pragma: no cover - dp guarantees a successor
            raise AssertionError("cover reconstruction failed")
        blocks.append(T)
        S ^= T
        j -= 1
    return k, blocks


def _zeta_sum(a: np.ndarray, n: int, p: int) -> np.ndarray:
    out = a.copy()
    for v in range(n):
        h = 1 << v
        view = out.reshape(-1, 2, h)
        view[:, 1, :] += view[:, 0, :]
        view[:, 1, :] %= p
    return out


def _mobius(a: np.ndarray, n: int, p: int) -> np.ndarray:
    out = a.copy()
    for v in range(n):
        h = 1 << v
        view = out.reshape(-1, 2, h)
        view[:, 1, :] -= view[:, 0, :]
        view[:, 1, :] %= p
    return out


def _min_cover_counting(flags: np.ndarray, n: int) -> tuple[int, list[int]]:
    # cover_j[S] != 0  iff  S is the union of j flagged sets (empty allowed).
    # Counts are taken modulo two primes; a spurious zero would need a count
    # divisible by both, and any certificate built here is re-verified anyway.
    size = 1 << n
    full = size - 1
    base = flags.astype(np.int64)
    zetas = [_zeta_sum(base, n, p) for p in _PRIMES]
    powers = [np.ones(size, dtype=np.int64) for _ in _PRIMES]
    layers = [np.zeros(size, dtype=bool)]
    layers[0][0] = True
    for j in range(1, n + 1):
        member = np.zeros(size, dtype=bool)
        for i, p in enumerate(_PRIMES):
            powers[i] = powers[i] * zetas[i] % p
            member |= _mobius(powers[i], n, p) != 0
        layers.append(member)
        if member[full]:
            break
    k = len(layers) - 1

    idx = np.arange(size, dtype=np.int64)
    blocks = []
    S, j = full, k
    while S:
        low = S & -S
        cand = ((idx & ~S) == 0) & ((idx & low) != 0) & flags
        cand &= layers[j - 1][idx ^ S]
        hits = np.flatnonzero(cand)
        if hits.size == 0:  # pragma: no cover - needs a double modular collision
            raise AssertionError("cover reconstruction failed")
        T = int(hits[0])
        blocks.append(T)
        S ^= T
        j -= 1
    return k, blocks
