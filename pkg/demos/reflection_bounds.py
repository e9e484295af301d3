#!/usr/bin/env python3
"""Reflections of an even circle: per-axis lower bounds vs. true distances.

Reflections through the n axes are the hard family: the best axis still
needs the full worst-case number of swaps, even when any two positions
(not just neighbors) may hold the swapped pair -- as long as each swap is
between circle neighbors.  Here the swaps act on arrangements directly
(no rotation quotient), which is what the per-axis bound speaks about.
"""

from circlesort import (
    diameter_bound,
    reflection_affine_distance,
    reflection_gaps,
    reflection_perm,
    reflection_sort_bound,
)

for n in (4, 6, 8):
    print("n =", n)
    for k in range(n):
        d = reflection_affine_distance(n, k)
        b = reflection_sort_bound(n, k)
        gaps = reflection_gaps(n, k)
        print(
            "  axis k=%d: reflection %s  distance %d  bound %d  gaps %s"
            % (k, reflection_perm(n, k), d, b, sorted(gaps))
        )
    best = min(reflection_affine_distance(n, k) for k in range(n))
    print("  best axis: %d   worst-case bound: %d" % (best, diameter_bound(n)))
    print()

# larger even sizes: the bound table alone, its minimum is the diameter
print(" n   min-axis bound   floor((n-1)^2/4)")
for n in range(10, 41, 6):
    m = min(reflection_sort_bound(n, k) for k in range(n))
    print("%2d %10d %16d" % (n, m, diameter_bound(n)))
