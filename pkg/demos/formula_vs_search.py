#!/usr/bin/env python3
"""The coset cycle formula against exhaustive search, class by class."""

import numpy as np

from circlesort import Mode, coset_sort_time, distance_table, sort_time_table, unrank_class

# t(class) = n - max cycles over all rotations of one representative;
# the search-built table must agree on every class
for n in range(3, 9):
    formula = sort_time_table(n)
    search = distance_table(n, Mode.ALLSWAP).dist
    agree = np.array_equal(formula, search)
    print("n=%d: %5d classes, tables agree: %s" % (n, len(formula), agree))

# one class in detail
n, rank = 7, 513
rep = unrank_class(n, rank)
report = coset_sort_time(rep)
print("\nclass rank %d of n=%d, representative %s" % (rank, n, rep))
print("cycle counts by rotation offset:", report.shift_cycle_counts)
print(
    "sorting time: %d - %d = %d"
    % (n, max(report.shift_cycle_counts), report.sort_time)
)
print("search says:", int(distance_table(n, Mode.ALLSWAP).dist[rank]))
