"""Compiled inner loops shared by the planner and replay machinery.

Everything here works on plain integer arrays so numba can compile it.
If numba is missing the pure-Python fallbacks still give correct, if
slower, results.
"""

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a hard dep, but stay usable
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


@njit(cache=True)
def apply_adjacent(labels, positions):
    """Apply adjacent swaps (pos, pos+1 mod n) in order, in place."""
    n = labels.shape[0]
    for k in range(positions.shape[0]):
        p = positions[k]
        q = p + 1
        if q == n:
            q = 0
        labels[p], labels[q] = labels[q], labels[p]


@njit(cache=True)
def apply_pairs(labels, pairs):
    """Apply general position swaps (a, b) in order, in place."""
    for k in range(pairs.shape[0]):
        a = pairs[k, 0]
        b = pairs[k, 1]
        labels[a], labels[b] = labels[b], labels[a]


@njit(cache=True)
def insertion_moves(values, out):
    """Sort `values` ascending, recording each adjacent swap as a slot index.

    Writing q to `out` means slots (q, q+1) were exchanged.  The number of
    moves written equals the inversion count of the input and is returned.
    """
    m = values.shape[0]
    cnt = 0
    for i in range(1, m):
        j = i
        while j > 0 and values[j] < values[j - 1]:
            values[j], values[j - 1] = values[j - 1], values[j]
            out[cnt] = j - 1
            cnt += 1
            j -= 1
    return cnt


@njit(cache=True)
def inversion_count(values):
    """Number of out-of-order pairs in `values`."""
    m = values.shape[0]
    total = 0
    for i in range(m):
        vi = values[i]
        for j in range(i + 1, m):
            if values[j] < vi:
                total += 1
    return total


@njit(cache=True)
def shift_cycle_counts(perm):
    """Cycle count of i -> perm[(i+j) mod n] for every shift j."""
    n = perm.shape[0]
    out = np.empty(n, np.int64)
    seen = np.zeros(n, np.int64)
    stamp = 0
    for j in range(n):
        stamp += 1
        cnt = 0
        for i in range(n):
            if seen[i] != stamp:
                cnt += 1
                cur = i
                while seen[cur] != stamp:
                    seen[cur] = stamp
                    k = cur + j
                    if k >= n:
                        k -= n
                    cur = perm[k]
        out[j] = cnt
    return out


@njit(cache=True)
def odd_shifts_two_half_cycles(perm):
    """True if every odd shift of perm splits into exactly two cycles of
    length n/2.  Expects even n."""
    n = perm.shape[0]
    half = n // 2
    seen = np.zeros(n, np.int64)
    stamp = 0
    for j in range(1, n, 2):
        stamp += 1
        cycles = 0
        for i in range(n):
            if seen[i] != stamp:
                cycles += 1
                if cycles > 2:
                    return False
                length = 0
                cur = i
                while seen[cur] != stamp:
                    seen[cur] = stamp
                    k = cur + j
                    if k >= n:
                        k -= n
                    cur = perm[k]
                    length += 1
                if length != half:
                    return False
        if cycles != 2:
            return False
    return True


@njit(cache=True)
def coset_max_cycles(reps, out):
    """For each permutation row p, the largest cycle count among p composed
    with every rotation i -> i+j (mod n).  Rows are permutations of 0..n-1.
    """
    nrows, n = reps.shape
    shifted = np.empty(n, np.int64)
    seen = np.zeros(n, np.int64)
    stamp = 0
    for r in range(nrows):
        best = 0
        for j in range(n):
            for i in range(n):
                k = i + j
                if k >= n:
                    k -= n
                shifted[i] = reps[r, k]
            stamp += 1
            cnt = 0
            for i in range(n):
                if seen[i] != stamp:
                    cnt += 1
                    cur = i
                    while seen[cur] != stamp:
                        seen[cur] = stamp
                        cur = shifted[cur]
            if cnt > best:
                best = cnt
        out[r] = best
