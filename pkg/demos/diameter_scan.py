#!/usr/bin/env python3
"""Exact adjacent-swap diameters against the quarter-square formula."""

from circlesort import Mode, diameter_bound, distance_table

print(" n   states  diameter  formula  histogram")
for n in range(1, 9):
    t = distance_table(n, Mode.ADJACENT)
    hist = t.histogram()
    flat = " ".join("%d:%d" % (d, hist[d]) for d in sorted(hist))
    mark = "" if t.diameter() == diameter_bound(n) else "  <-- MISMATCH"
    print(
        "%2d %8d %9d %8d  %s%s"
        % (n, len(t.dist), t.diameter(), diameter_bound(n), flat, mark)
    )

# the farthest classes from sorted, for one size
from circlesort import unrank_class

t = distance_table(7, Mode.ADJACENT)
far = int(t.dist.argmax())
labels = tuple(x + 1 for x in unrank_class(7, far))
print("\nn=7: %d classes sit at the full distance %d" % (
    int((t.dist == t.diameter()).sum()), t.diameter()))
print("first of them:", " ".join(str(x) for x in labels))
