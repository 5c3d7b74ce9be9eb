"""Exact counters for homomorphisms, labeled copies, and pinned labeled copies.

The optimized kernel is backtracking over a static pattern-vertex order chosen
by maximum back-degree (most constraints earliest), with candidate sets kept
as bit-row intersections of the already-placed images' in/out neighborhoods.
`oracle_count` is an independent, unpruned full enumeration used to validate
the kernel; it must never share the kernel's code path.

All verdict arithmetic (bounds, ratios) is exact: big integers and Fractions.
Floating point appears only in convenience report fields.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .digraph import Digraph, Tournament, bits, mask_of

DEFAULT_BUDGET = 10**9
_BUDGET_ENV = "TOURSID_BUDGET"


class BudgetExceededError(RuntimeError):
    """The projected or accumulated search work exceeded the ceiling."""


def work_budget(budget: Optional[int] = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(_BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class CountResult:
    """An exact count next to its random-orientation baseline.

    bound is 2^(-e(D)) * n^(v(D)) (or the pinned variant with exponent
    v(D) - |I|); ratio is value/bound, exact.
    """

    value: int
    bound: Fraction

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.value) / self.bound

    def to_json_dict(self) -> dict:
        return {
            "value": str(self.value),
            "bound": {"num": str(self.bound.numerator), "den": str(self.bound.denominator)},
            "ratio": {"num": str(self.ratio.numerator), "den": str(self.ratio.denominator)},
            "ratio_approx": float(self.ratio),
        }


@dataclass(frozen=True)
class PinnedPattern:
    """A pattern digraph with an independent pinned set and optional anchor.

    `pinned` may be given as a bit mask or an iterable of vertices. The anchor,
    when present, maps pinned pattern vertices to host vertices injectively.
    """

    pattern: Digraph
    pinned: int
    anchor: Optional[dict[int, int]] = field(default=None)

    def __init__(self, pattern: Digraph, pinned, anchor: Optional[dict[int, int]] = None):
        if not isinstance(pinned, int):
            pinned = mask_of(pinned)
        if pinned >> pattern.n:
            raise ValueError("pinned set is not a subset of the pattern vertices")
        for v in bits(pinned):
            if (pattern.out(v) | pattern.inn(v)) & pinned:
                raise ValueError("pinned set must be independent in the pattern")
        if anchor is not None:
            if set(anchor) - set(bits(pinned)):
                raise ValueError("anchor keys must lie in the pinned set")
            if len(set(anchor.values())) != len(anchor):
                raise ValueError("anchor must be injective")
        object.__setattr__(self, "pattern", pattern)
        object.__setattr__(self, "pinned", pinned)
        object.__setattr__(self, "anchor", dict(anchor) if anchor else None)

    @property
    def pinned_vertices(self) -> tuple[int, ...]:
        return tuple(bits(self.pinned))


def _search_order(d: Digraph, active: list[int], first: tuple[int, ...] = ()) -> list[int]:
    """Static order: pinned prefix first, then greedily max back-degree, ties
    by larger total degree then smaller index."""
    adj = [d.out(v) | d.inn(v) for v in range(d.n)]
    placed_mask = mask_of(first)
    order = list(first)
    remaining = [v for v in active if not placed_mask >> v & 1]
    while remaining:
        best = max(
            remaining,
            key=lambda v: ((adj[v] & placed_mask).bit_count(), adj[v].bit_count(), -v),
        )
        order.append(best)
        placed_mask |= 1 << best
        remaining.remove(best)
    return order


def _backtrack(
    d: Digraph,
    host: Tournament,
    *,
    injective: bool,
    pins: Optional[dict[int, int]] = None,
    budget: Optional[int] = None,
    limit: Optional[int] = None,
) -> int:
    """Count maps V(d) -> V(host) preserving directed edges.

    Degree-0 unpinned pattern vertices are factored out in closed form. With
    `limit` set, the count saturates there (early exit).
    """
    pins = pins or {}
    n = host.n
    k = d.n
    isolated = [
        v for v in range(d.n) if d.degree(v) == 0 and v not in pins
    ]
    active = [v for v in range(d.n) if d.degree(v) > 0 or v in pins]
    r = len(active)
    if injective and n < k:
        return 0

    # closed-form multiplier for the isolated vertices
    mult = 1
    if isolated:
        if injective:
            for i in range(len(isolated)):
                mult *= n - r - i
        else:
            mult = n ** len(isolated)
        if mult == 0:
            return 0

    order = _search_order(d, active, first=tuple(sorted(pins)))
    plan: list[list[tuple[int, bool]]] = []
    for t, v in enumerate(order):
        cons = []
        for s in range(t):
            u = order[s]
            if d.has_edge(u, v):
                cons.append((s, True))
            if d.has_edge(v, u):
                cons.append((s, False))
        plan.append(cons)

    out_rows = host.out_rows()
    in_rows = host.in_rows()
    full = (1 << n) - 1
    ceiling = work_budget(budget)
    images = [0] * len(order)
    nodes = 0
    total = 0

    def rec(t: int, used: int) -> bool:
        """Returns True when the limit was reached (stop unwinding)."""
        nonlocal nodes, total
        if t == len(order):
            total += 1
            return limit is not None and total >= limit
        nodes += 1
        if nodes > ceiling:
            raise BudgetExceededError(
                f"search exceeded the work budget of {ceiling} expansions"
            )
        v = order[t]
        cand = full
        for s, forward in plan[t]:
            cand &= out_rows[images[s]] if forward else in_rows[images[s]]
        if v in pins:
            cand &= 1 << pins[v]
        if injective:
            cand &= ~used
        while cand:
            b = cand & -cand
            cand ^= b
            images[t] = b.bit_length() - 1
            if rec(t + 1, used | b):
                return True
        return False

    rec(0, 0)
    if limit is not None and total >= limit:
        return limit
    return total * mult


def count_homomorphisms(
    d: Digraph,
    t: Tournament,
    *,
    budget: Optional[int] = None,
    limit: Optional[int] = None,
) -> int:
    """Exact number of (not necessarily injective) edge-preserving maps.

    With `limit` set the search may exit early: the result is exact whenever
    it is below `limit`; any result >= limit certifies count >= limit.
    """
    return _backtrack(d, t, injective=False, budget=budget, limit=limit)


def count_labeled(d: Digraph, t: Tournament, *, budget: Optional[int] = None) -> CountResult:
    """Exact number of injective edge-preserving maps, with its baseline
    bound 2^(-e(D)) n^(v(D))."""
    value = _backtrack(d, t, injective=True, budget=budget)
    bound = Fraction(t.n ** d.n, 1 << d.edge_count)
    return CountResult(value, bound)


def count_labeled_pinned(
    p: PinnedPattern,
    t: Tournament,
    anchor: Optional[dict[int, int]] = None,
    *,
    budget: Optional[int] = None,
) -> CountResult:
    """Labeled copies extending the anchor on the pinned set.

    The bound is 2^(-e(D)) n^(v(D)-|I|). The anchor must be total on the
    pinned set and injective into the host.
    """
    pins = anchor if anchor is not None else p.anchor
    pinned = p.pinned_vertices
    if pins is None or set(pins) != set(pinned):
        raise ValueError("anchor must be defined on exactly the pinned set")
    if len(set(pins.values())) != len(pins):
        raise ValueError("anchor must be injective")
    for hv in pins.values():
        if not 0 <= hv < t.n:
            raise ValueError(f"anchor image {hv} out of host range")
    value = _backtrack(p.pattern, t, injective=True, pins=pins, budget=budget)
    bound = Fraction(
        t.n ** (p.pattern.n - len(pinned)), 1 << p.pattern.edge_count
    )
    return CountResult(value, bound)


def density(d: Digraph, t: Tournament, *, budget: Optional[int] = None) -> Fraction:
    """Exact homomorphism density h_D(T) / n^(v(D))."""
    if t.n == 0:
        raise ValueError("density is undefined on the empty host")
    return Fraction(count_homomorphisms(d, t, budget=budget), t.n ** d.n)


def oracle_count(
    d: Digraph,
    t: Tournament,
    mode: str = "homs",
    *,
    budget: Optional[int] = None,
) -> int:
    """Unpruned full-enumeration counter used to validate the optimized kernel.

    Enumerates all n^v maps ("homs") or all injective tuples ("labeled") and
    checks every edge. Intentionally shares no code with the backtracker.
    """
    if mode not in ("homs", "labeled"):
        raise ValueError(f"unknown oracle mode {mode!r}")
    n, k = t.n, d.n
    ceiling = work_budget(budget)
    volume = n**k
    if mode == "labeled":
        volume = 1
        for i in range(k):
            volume *= max(n - i, 0)
    if volume > ceiling:
        raise BudgetExceededError(
            f"oracle enumeration of {volume} maps exceeds the budget {ceiling}"
        )
    edges = tuple(d.edges())
    rows = t.out_rows()
    tuples: Iterable[tuple[int, ...]]
    if mode == "homs":
        tuples = itertools.product(range(n), repeat=k)
    else:
        tuples = itertools.permutations(range(n), k)
    c = 0
    for phi in tuples:
        for u, v in edges:
            if not rows[phi[u]] >> phi[v] & 1:
                break
        else:
            c += 1
    return c


def is_impartial_upto(
    d: Digraph, n_max: int = 7, *, budget: Optional[int] = None
) -> tuple[bool, Optional[tuple[Tournament, Tournament]]]:
    """True iff the labeled count is constant over all tournaments at each
    n <= n_max; on False, returns two hosts with differing counts.

    Scans isomorphism-class representatives (the count is an isomorphism
    invariant, so constancy on representatives is constancy everywhere).
    """
    if n_max > 7:
        raise ValueError("impartiality scan is guarded at n_max = 7")
    from .hosts import tournament_representatives

    for n in range(1, n_max + 1):
        reps = tournament_representatives(n)
        first = count_labeled(d, reps[0], budget=budget).value
        for other in reps[1:]:
            val = count_labeled(d, other, budget=budget).value
            if val != first:
                return False, (reps[0], other)
    return True, None
