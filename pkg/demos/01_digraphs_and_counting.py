"""Data model and exact counting basics.

Build small oriented graphs, count homomorphisms and labeled (injective)
copies in tournament hosts, and compare each count against the random-
orientation baseline 2^(-e(D)) n^(v(D)). Everything is exact: counts are
integers, baselines and ratios are rationals.
"""

from fractions import Fraction

from toursid import (
    Digraph,
    count_homomorphisms,
    count_labeled,
    density,
    fill_to_tournament,
    oracle_count,
    transitive_host,
)
from toursid.constructions import d_family, directed_cycle, directed_path, transitive_tournament

tt4 = transitive_host(4)

print("== single edge in the 3-vertex transitive host ==")
edge = Digraph(2, [(0, 1)])
tt3 = transitive_host(3)
print("homomorphisms:", count_homomorphisms(edge, tt3))
print("density:      ", density(edge, tt3), "(exactly 1/3)")

print()
print("== a cyclic triangle never embeds in a transitive host ==")
c3 = directed_cycle(3)
for n in (3, 4, 5):
    print(f"  n={n}: homomorphisms = {count_homomorphisms(c3, transitive_host(n))}")

print()
print("== labeled copies vs the baseline ==")
for pattern in (directed_path(2), d_family(2), transitive_tournament(3)):
    res = count_labeled(pattern, tt4)
    print(
        f"  {pattern!r}: N_L = {res.value}, baseline = {res.bound}, "
        f"ratio = {res.ratio} (~{float(res.ratio):.3f})"
    )

print()
print("== the optimized kernel agrees with the unpruned oracle ==")
for pattern in (directed_path(2), d_family(2)):
    a = count_homomorphisms(pattern, tt4)
    b = oracle_count(pattern, tt4, "homs")
    print(f"  {pattern!r}: kernel {a} == oracle {b}: {a == b}")

print()
print("== blowup hosts over-represent their own pattern ==")
tt7 = transitive_tournament(7)
host = fill_to_tournament(tt7.blowup(2))
dens = density(tt7, host)
print(f"density of the 7-vertex transitive pattern in its filled 2-blowup: {dens}")
print(f"uniform floor 7^-7 = {Fraction(1, 7**7)}, baseline 2^-21 = {Fraction(1, 2**21)}")
print("floor beats baseline:", Fraction(1, 7**7) > Fraction(1, 2**21))
