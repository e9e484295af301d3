#!/usr/bin/env python3
"""Cycle counts of random permutations: exact probabilities vs. the bound."""

from fractions import Fraction

from circlesort import (
    cycle_prob,
    cycle_prob_bound,
    general_lower_bound,
    stirling_first,
    tail_report,
)

# counts of permutations of 6 elements by cycle number
print("c(6, k):", [stirling_first(6, k) for k in range(7)])
print("sum:", sum(stirling_first(6, k) for k in range(7)), "= 6! =", 720)

n = 12
print("\nP(a random permutation of %d has k+1 cycles), against the bound:" % n)
print("  k   exact                     float      bound")
for k in range(n):
    p = cycle_prob(n, k)
    print(
        "  %2d  %-24s  %.3e  %.3e" % (k, p, float(p), cycle_prob_bound(n, k))
    )

print("\ntail reports (chance of more than the cutoff number of cycles):")
print("  n   cutoff  exact tail    geometric bound   1/n")
for n in (10, 20, 50, 100):
    r = tail_report(n)
    print(
        " %3d %6d   %.3e    %.3e       %.3e"
        % (n, r.cutoff, float(r.exact_tail), r.bound_tail, 1 / n)
    )
    assert r.exact_tail <= Fraction(r.bound_tail)

print("\nthe resulting general lower bound n - ceil(e(ln n + 1)):")
for n in (11, 50, 100, 1000, 10**6):
    print("  n=%-8d t(n) >= %d" % (n, general_lower_bound(n)))
