"""Quasirandom direction: measuring directional bias, walking between hosts
one edge flip at a time, and the count-deviation experiment.

The bias measure eps is the best directional excess e(A,B) - e(B,A) over
disjoint vertex subsets, normalized by n^2. Transitive hosts are maximally
biased (eps = 1/4); uniform random hosts are nearly unbiased. For the subset
gadget, a near-baseline count goes hand in hand with small bias, which is the
forcing direction experiment.
"""

import time
from fractions import Fraction

from toursid import (
    count_homomorphisms,
    forcing_probe,
    interpolate_to_density,
    quasirandom_epsilon,
    transitive_host,
    two_block_tournament,
    uniform_tournament,
)
from toursid.constructions import subset_bipartite, transitive_tournament

print("== exact bias of small hosts ==")
print("transitive n=10:", quasirandom_epsilon(transitive_host(10)))
print("uniform n=12:   ", quasirandom_epsilon(uniform_tournament(12, 5)))

print()
print("== edge-flip interpolation between hosts ==")
from toursid.digraph import Tournament

d = transitive_tournament(3)
t5 = transitive_host(5)
rotational = Tournament(
    5, [(i, (i + 1) % 5) for i in range(5)] + [(i, (i + 2) % 5) for i in range(5)]
)
lo, hi = count_homomorphisms(d, t5), count_homomorphisms(d, rotational)
print(f"transitive-triple count: {lo} in the transitive host, {hi} in the rotational host")
walk = interpolate_to_density(d, t5, rotational, 0, target=7)
print(f"counts along the walk: {walk.h_values}")
print(f"first crossing of target 7 at step {walk.index}; per-step bound 9*125 respected")

print()
print("== forcing-direction experiment for the subset gadget ==")
gadget, _ = subset_bipartite(2)
t0 = time.time()
rows = forcing_probe(
    gadget,
    [
        ("transitive-20", transitive_host(20)),
        ("two-block-60", two_block_tournament(60, Fraction(1, 2), 3)),
        ("uniform-60", uniform_tournament(60, 3)),
    ],
    samples=30_000,
    seed=5,
)
print(f"(probe took {time.time() - t0:.1f}s; n=20 bias is an exact 2^20 subset scan)")
print(f"{'host':>15} {'|density - 2^-8|':>18} {'eps':>8}")
for row in rows:
    print(f"{row.label:>15} {row.deviation_approx:>18.6f} {row.epsilon_approx:>8.4f}")
print("deviation and bias shrink together: correct counts certify small bias")
