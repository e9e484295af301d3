#!/usr/bin/env python3
"""Walk through one sort: the split, both plan directions, the winner."""

import sys

import numpy as np

from circlesort import (
    Arrangement,
    competing_plans,
    diameter_bound,
    find_balanced_split,
    replay,
    same_class,
    sort_cyclic,
    trivial,
)

if len(sys.argv) > 1:
    a = Arrangement(tuple(int(x) for x in " ".join(sys.argv[1:]).split()))
else:
    rng = np.random.default_rng(7)
    a = Arrangement(tuple(int(x) for x in rng.permutation(12) + 1))

n = a.n
print("arrangement:", a)
print("bound for n=%d: %d swaps" % (n, diameter_bound(n)))

split = find_balanced_split(a)
s1, l1, s2, l2 = split.counts
print(
    "split: arc 1 starts at vertex %d, lengths %d/%d, threshold %d"
    % (split.a1_start, split.a1_len, split.a2_len, split.small_threshold)
)
print("   arc 1 holds %d smalls + %d larges, arc 2 holds %d + %d" % (s1, l1, s2, l2))

_, top, bottom = competing_plans(a)
for p in (top, bottom):
    print(
        "%s: %d shift + %d residual = %d total"
        % (p.direction.name.lower(), p.shift_cost, p.residual_cost, p.total_cost)
    )

seq = sort_cyclic(a)
end = replay(a, seq)
print("chosen sequence length:", len(seq))
print("first moves:", [int(p) for p in seq.data[:12]])
print("end state:", end, "| sorted class:", same_class(end, trivial(n)))
