"""Oriented-graph and tournament data model.

Vertices are the dense integers 0..n-1. Out-adjacency is stored as packed bit
rows (Python ints); in-rows are obtained by a single transpose on demand and
cached. Objects are immutable after construction: every transform returns a
fresh object, so values are safe to share and send across threads.

A digraph here is always *oriented*: no self-loops and no antiparallel edge
pairs. A tournament is a digraph whose orientation is total, i.e. exactly one
directed edge between every pair of distinct vertices.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .rng import coin

ISO_VERTEX_LIMIT = 12


class SizeLimitError(ValueError):
    """Raised when an operation is asked to exceed its hard size guard."""


def mask_of(vertices: Iterable[int]) -> int:
    """Packed bit row for a vertex subset."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of a packed row, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Digraph:
    """An oriented graph on vertices 0..n-1.

    Invariants: no vertex is its own out-neighbor, no pair carries edges in
    both directions, and ``edge_count`` equals the sum of out-degrees.
    """

    __slots__ = ("n", "_out", "_in", "_m", "meta")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if rows[v] >> u & 1:
                raise ValueError(f"antiparallel pair on {{{u},{v}}}")
            if rows[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u},{v})")
            rows[u] |= 1 << v
            m += 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_out", tuple(rows))
        object.__setattr__(self, "_in", None)
        object.__setattr__(self, "_m", m)
        object.__setattr__(self, "meta", None)

    def __setattr__(self, name, value):
        if name == "meta" and self.meta is None:
            object.__setattr__(self, name, value)
            return
        raise AttributeError("Digraph values are immutable")

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Digraph":
        """Build from out-neighbor bit rows, validating orientedness."""
        rows = tuple(rows)
        n = len(rows)
        d = cls.__new__(cls)
        m = 0
        for u, row in enumerate(rows):
            if row >> n:
                raise ValueError(f"row {u} has bits beyond vertex {n - 1}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            m += row.bit_count()
        for u in range(n):
            for v in bits(rows[u]):
                if rows[v] >> u & 1:
                    raise ValueError(f"antiparallel pair on {{{u},{v}}}")
        object.__setattr__(d, "n", n)
        object.__setattr__(d, "_out", rows)
        object.__setattr__(d, "_in", None)
        object.__setattr__(d, "_m", m)
        object.__setattr__(d, "meta", None)
        return d

    # -- basic accessors ---------------------------------------------------

    @property
    def edge_count(self) -> int:
        return self._m

    def out(self, v: int) -> int:
        """Out-neighbors of v as a packed row."""
        return self._out[v]

    def inn(self, v: int) -> int:
        """In-neighbors of v as a packed row (cached transpose)."""
        return self.in_rows()[v]

    def out_rows(self) -> tuple[int, ...]:
        return self._out

    def in_rows(self) -> tuple[int, ...]:
        if self._in is None:
            rows = [0] * self.n
            for u, row in enumerate(self._out):
                for v in bits(row):
                    rows[v] |= 1 << u
            object.__setattr__(self, "_in", tuple(rows))
        return self._in

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._out[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self._out[u] >> v | self._out[v] >> u) & 1)

    def out_degree(self, v: int) -> int:
        return self._out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.inn(v).bit_count()

    def degree(self, v: int) -> int:
        return self.out_degree(v) + self.in_degree(v)

    def edges(self) -> list[tuple[int, int]]:
        """Edge list sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in bits(self._out[u])]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self._out == other._out
        )

    def __hash__(self) -> int:
        return hash((self.n, self._out))

    def __repr__(self) -> str:
        tag = f" {self.meta['family']}" if self.meta else ""
        return f"<{type(self).__name__} n={self.n} m={self._m}{tag}>"

    def __reduce__(self):
        return (_rebuild, (type(self), self._out, self.meta))

    # -- primitive transforms ----------------------------------------------

    def reverse(self) -> "Digraph":
        """The digraph with every edge reversed. An involution."""
        rows = [0] * self.n
        for u, row in enumerate(self._out):
            for v in bits(row):
                rows[v] |= 1 << u
        out = type(self).__new__(type(self))
        object.__setattr__(out, "n", self.n)
        object.__setattr__(out, "_out", tuple(rows))
        object.__setattr__(out, "_in", None)
        object.__setattr__(out, "_m", self._m)
        object.__setattr__(out, "meta", None)
        return out

    def underlying(self) -> "UndirectedGraph":
        """The underlying undirected graph: {u,v} iff u->v or v->u."""
        return UndirectedGraph(
            self.n, [(u, v) for u, v in self.edges()]
        )

    def is_transitive(self) -> bool:
        """True iff for all edges (x,y),(y,z), any edge on {x,z} is (x,z).

        The condition is conditional: a missing {x,z} edge never violates it.
        """
        inr = self.in_rows()
        for y in range(self.n):
            for z in bits(self._out[y]):
                # an edge z->x with x an in-neighbor of y closes a bad triple
                if self._out[z] & inr[y]:
                    return False
        return True

    def blowup(self, m: int) -> "Digraph":
        """Balanced m-blowup: vertex v becomes the block v*m..v*m+m-1.

        Each edge becomes m*m block-to-block edges; blocks are independent.
        """
        if m < 1:
            raise ValueError("blowup multiplier must be >= 1")
        rows = [0] * (self.n * m)
        block = (1 << m) - 1
        for u, row in enumerate(self._out):
            target = 0
            for v in bits(row):
                target |= block << (v * m)
            for i in range(m):
                rows[u * m + i] = target
        return Digraph.from_rows(rows)

    def relabel(self, perm: tuple[int, ...]) -> "Digraph":
        """Apply the vertex bijection v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        rows = [0] * self.n
        for u, row in enumerate(self._out):
            for v in bits(row):
                rows[perm[u]] |= 1 << perm[v]
        return type(self).from_rows(rows)


def _rebuild(cls, rows, meta):
    d = cls.from_rows(rows)
    if meta:
        d.meta = meta
    return d


class Tournament(Digraph):
    """A digraph with exactly one edge on every pair of distinct vertices."""

    __slots__ = ()

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        super().__init__(n, edges)
        if self._m != n * (n - 1) // 2:
            raise ValueError("not a tournament: some pair carries no edge")

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Tournament":
        t = super().from_rows(rows)
        n = t.n
        if t._m != n * (n - 1) // 2:
            raise ValueError("not a tournament: some pair carries no edge")
        return t

    @classmethod
    def from_code(cls, n: int, code: int) -> "Tournament":
        """Decode the pair-order bit code: bit p set means i->j for the p-th
        pair (i,j), i<j, in lexicographic order."""
        rows = [0] * n
        p = 0
        for i in range(n):
            for j in range(i + 1, n):
                if code >> p & 1:
                    rows[i] |= 1 << j
                else:
                    rows[j] |= 1 << i
                p += 1
        t = cls.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "_out", tuple(rows))
        object.__setattr__(t, "_in", None)
        object.__setattr__(t, "_m", n * (n - 1) // 2)
        object.__setattr__(t, "meta", None)
        return t

    def code(self) -> int:
        c = 0
        p = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self._out[i] >> j & 1:
                    c |= 1 << p
                p += 1
        return c


def transitive_host(n: int) -> Tournament:
    """The transitive tournament with i->j for i<j."""
    full = (1 << n) - 1
    return Tournament.from_rows([full ^ ((1 << (i + 1)) - 1) for i in range(n)])


def fill_to_tournament(d: Digraph, strategy: str = "lex", seed: Optional[int] = None) -> Tournament:
    """Complete d to a tournament, one new edge per unordered non-adjacent pair.

    strategy "lex": u->v for u<v (the reproducible default).
    strategy "seeded": direction decided by a counter RNG under `seed`.
    The output restricted to d's edge set is d itself.
    """
    if strategy not in ("lex", "seeded"):
        raise ValueError(f"unknown fill strategy {strategy!r}")
    if strategy == "seeded" and seed is None:
        raise ValueError("seeded fill requires an explicit seed")
    rows = list(d.out_rows())
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if (rows[u] >> v | rows[v] >> u) & 1:
                continue
            if strategy == "lex" or coin(seed, u, v) == 0:
                rows[u] |= 1 << v
            else:
                rows[v] |= 1 << u
    return Tournament.from_rows(rows)


def disjoint_union(d1: Digraph, d2: Digraph) -> Digraph:
    """Disjoint union; d2's vertices are offset by d1.n."""
    shift = d1.n
    rows = list(d1.out_rows()) + [row << shift for row in d2.out_rows()]
    return Digraph.from_rows(rows)


def are_isomorphic(d1: Digraph, d2: Digraph) -> Optional[tuple[int, ...]]:
    """Isomorphism witness (lexicographically least image tuple) or None.

    Degree-refined permutation backtracking; vertices of d1 are assigned in
    natural order with images tried ascending, so the first witness found is
    the lexicographically least. Hard size guard at ISO_VERTEX_LIMIT vertices.
    """
    if max(d1.n, d2.n) > ISO_VERTEX_LIMIT:
        raise SizeLimitError(
            f"isomorphism search is guarded at {ISO_VERTEX_LIMIT} vertices"
        )
    n = d1.n
    if n != d2.n or d1.edge_count != d2.edge_count:
        return None
    pairs1 = sorted((d1.out_degree(v), d1.in_degree(v)) for v in range(n))
    pairs2 = sorted((d2.out_degree(v), d2.in_degree(v)) for v in range(n))
    if pairs1 != pairs2:
        return None

    out1, in1 = d1.out_rows(), d1.in_rows()
    out2, in2 = d2.out_rows(), d2.in_rows()
    cand = [
        [
            w
            for w in range(n)
            if (out2[w].bit_count(), in2[w].bit_count())
            == (out1[v].bit_count(), in1[v].bit_count())
        ]
        for v in range(n)
    ]
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in cand[v]:
            if used[w]:
                continue
            ok = True
            for u in range(v):
                iu = image[u]
                if (out1[u] >> v & 1) != (out2[iu] >> w & 1) or (
                    in1[u] >> v & 1
                ) != (in2[iu] >> w & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    if extend(0):
        return tuple(image)
    return None


class UndirectedGraph:
    """A loop-free undirected graph stored as symmetric packed bit rows."""

    __slots__ = ("n", "_rows", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {{{u},{v}}} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if rows[u] >> v & 1:
                continue
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            m += 1
        self.n = n
        self._rows = tuple(rows)
        self._m = m

    @property
    def edge_count(self) -> int:
        return self._m

    def row(self, v: int) -> int:
        return self._rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as (u, v) with u < v, sorted lexicographically."""
        return [
            (u, v) for u in range(self.n) for v in bits(self._rows[u]) if v > u
        ]

    def is_tree(self) -> bool:
        if self.n == 0 or self._m != self.n - 1:
            return False
        seen = 1
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for w in bits(self._rows[v] & ~seen):
                seen |= 1 << w
                frontier.append(w)
        return seen == (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, UndirectedGraph)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"<UndirectedGraph n={self.n} m={self._m}>"
