"""Host-tournament generators: raw enumeration, isomorphism-class
representatives, and seeded uniform sampling.

Raw enumeration walks the n(n-1)/2-bit pair code directly, so the p-th bit of
the code matches the p-th character of the TRN/1 wire format. Representative
enumeration extends the (n-1)-vertex class list by every in/out pattern of a
new vertex and dedups with the exact isomorphism backtracker; the checked
quantities in scans that use it are isomorphism-invariant.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator

from .digraph import Digraph, Tournament, are_isomorphic, bits
from .rng import coin


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def all_tournaments(n: int) -> Iterator[Tournament]:
    """Every labeled tournament on n vertices, in pair-code order."""
    for code in range(1 << pair_count(n)):
        yield Tournament.from_code(n, code)


def _local_triangles(t: Tournament, v: int) -> int:
    """Number of cyclic triangles through v; an isomorphism invariant."""
    inr = t.in_rows()
    return sum((t.out(u) & inr[v]).bit_count() for u in bits(t.out(v)))


def _invariant_key(t: Tournament) -> tuple:
    return tuple(sorted((t.out_degree(v), _local_triangles(t, v)) for v in range(t.n)))


@lru_cache(maxsize=None)
def tournament_representatives(n: int) -> tuple[Tournament, ...]:
    """One representative per isomorphism class of n-vertex tournaments.

    Deterministic: candidates are generated in (parent class, extension
    pattern) order and kept on first appearance of their class.
    """
    if n == 0:
        return (Tournament.from_rows([]),)
    if n == 1:
        return (Tournament.from_rows([0]),)
    reps: list[Tournament] = []
    buckets: dict[tuple, list[Tournament]] = {}
    for parent in tournament_representatives(n - 1):
        base = parent.out_rows()
        for pattern in range(1 << (n - 1)):
            # new vertex n-1 beats exactly the pattern bits
            rows = [
                base[v] | (0 if pattern >> v & 1 else 1 << (n - 1))
                for v in range(n - 1)
            ]
            rows.append(pattern)
            cand = Tournament.from_rows(rows)
            key = _invariant_key(cand)
            bucket = buckets.setdefault(key, [])
            if not any(are_isomorphic(cand, seen) for seen in bucket):
                bucket.append(cand)
                reps.append(cand)
    return tuple(reps)


def scan_hosts(n: int, dedup: bool) -> Iterator[Tournament]:
    if dedup:
        yield from tournament_representatives(n)
    else:
        yield from all_tournaments(n)


def uniform_tournament(n: int, seed: int) -> Tournament:
    """Seeded uniform random tournament; each pair is an independent coin."""
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if coin(seed, i, j):
                rows[i] |= 1 << j
            else:
                rows[j] |= 1 << i
    return Tournament.from_rows(rows)


def all_oriented_graphs(n: int) -> Iterator[Digraph]:
    """Every oriented graph on n vertices (3 states per pair)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for states in product((0, 1, 2), repeat=len(pairs)):
        rows = [0] * n
        for (i, j), s in zip(pairs, states):
            if s == 1:
                rows[i] |= 1 << j
            elif s == 2:
                rows[j] |= 1 << i
        yield Digraph.from_rows(rows)
