#!/usr/bin/env python3
"""Worst sorting times when any two vertices may swap, and who attains them."""

from circlesort import (
    multiplication_unit_report,
    sort_time_lower_bounds,
    worst_sort_time,
)

print(" n  t(n)  n-2  prime  witness            bounds")
for n in range(2, 12):
    w = worst_sort_time(n)
    bounds = " ".join("%s=%d" % (s, v) for s, v in w.lower_bounds)
    print(
        "%2d %4d %4d  %-5s  %-18s %s"
        % (
            n,
            w.sort_time,
            n - 2,
            w.is_prime,
            " ".join(str(x) for x in w.witness),
            bounds,
        )
    )

# the full multiplication-class survey for n = 11
print("\nmultiplication classes mod 11 (and each extended by a fixed vertex):")
report = multiplication_unit_report(11)
for row in report.rows:
    print(
        "  a=%2d  order %2d  cycles %d  time %d  extended %d"
        % (row.a, row.order, row.cycles, row.sort_time, row.extension_sort_time)
    )
print("survey max:", report.max_sort_time, " exhaustive worst:", worst_sort_time(11).sort_time)

# where each lower-bound source is the sharpest one available
print("\nsharpest bound source for a few composite sizes:")
for n in (8, 9, 16, 18, 25, 50, 100):
    bounds = dict(sort_time_lower_bounds(n))
    src = max(bounds, key=bounds.get)
    print("  n=%3d: %s = %d   (all: %s)" % (n, src, bounds[src], bounds))
