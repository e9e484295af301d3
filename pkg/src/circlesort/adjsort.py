"""Sorting a circle with adjacent swaps, within the proven worst-case bound.

The sorter never needs more than floor((n-1)^2/4) adjacent swaps, which is
also the exact worst case (see the oracle module for the exhaustive check).
It works by cutting the circle into two arcs balanced by a window scan,
then running two competing processes: one gathers the small labels toward
the top junction of the arcs, the other toward the bottom.  Each process
leaves both arcs with their small labels contiguous, after which bubbling
inside the small and large blocks finishes the job.  The cheaper of the
two processes is kept.

Labels 1..S with S = len(small side) are "small"; the rest are "large".
Inside each arc positions are counted top to bottom: arc 1 runs clockwise
from its top vertex, arc 2 runs anticlockwise so that the two arc tops
meet at one junction and the two bottoms at the other.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .core import Arrangement, MoveKind, SwapSequence, canonicalize, same_class, trivial


def diameter_bound(n):
    """Worst-case adjacent swaps needed to sort any circle of n labels."""
    if n < 1:
        raise ValueError("n must be positive")
    return (n - 1) ** 2 // 4


class SplitCase(Enum):
    """Arc-splitting case by n mod 4: A for 4m, B for 4m+2, C for 4m+1, D for 4m+3."""

    A = 0
    B = 2
    C = 1
    D = 3


@dataclass(frozen=True)
class CaseTag:
    case: SplitCase
    m: int


_CASE_BY_RESIDUE = {0: SplitCase.A, 1: SplitCase.C, 2: SplitCase.B, 3: SplitCase.D}


def case_of(n):
    if n < 4:
        raise ValueError("cases are defined for n >= 4")
    r = n % 4
    return CaseTag(_CASE_BY_RESIDUE[r], (n - r) // 4)


@dataclass(frozen=True)
class _Shape:
    small_threshold: int
    a1_len: int
    a2_len: int
    k1: int  # smalls wanted in arc 1
    k2: int  # smalls wanted in arc 2


def _shape_of(tag):
    m = tag.m
    if tag.case is SplitCase.A:
        return _Shape(2 * m, 2 * m, 2 * m, m, m)
    if tag.case is SplitCase.B:
        return _Shape(2 * m + 1, 2 * m + 1, 2 * m + 1, m, m + 1)
    if tag.case is SplitCase.C:
        return _Shape(2 * m, 2 * m, 2 * m + 1, m, m)
    return _Shape(2 * m + 2, 2 * m + 1, 2 * m + 2, m + 1, m + 1)


def planned_shift_total(tag):
    """Exact value of shift_cost(Top) + shift_cost(Bottom) for the case."""
    m = tag.m
    return {
        SplitCase.A: 2 * m * m,
        SplitCase.B: 2 * m * (m + 1),
        SplitCase.C: 2 * m * m + m,
        SplitCase.D: 2 * m * m + 3 * m + 1,
    }[tag.case]


def residual_bound(tag):
    """Upper bound on residual_cost(Top) + residual_cost(Bottom) for the case."""
    m = tag.m
    return {
        SplitCase.A: 6 * m * m - 4 * m,
        SplitCase.B: 6 * m * m + 2 * m,
        SplitCase.C: 6 * m * m - m,
        SplitCase.D: 6 * m * m + 5 * m + 1,
    }[tag.case]


@dataclass(frozen=True)
class ArcSplit:
    """A balanced cut of the circle into two arcs.

    Arc 1 runs clockwise from vertex a1_start; arc 2 is the rest.  counts
    is (smalls in arc 1, larges in arc 1, smalls in arc 2, larges in arc 2).
    """

    a1_start: int
    a1_len: int
    a2_len: int
    small_threshold: int
    counts: tuple

    def __post_init__(self):
        s1, l1, s2, l2 = self.counts
        if s1 + l1 != self.a1_len or s2 + l2 != self.a2_len:
            raise ValueError("arc counts do not add up to the arc lengths")
        if s1 + s2 != self.small_threshold:
            raise ValueError("small counts do not match the threshold")


def find_balanced_split(a):
    """Scan clockwise from vertex 0 for the first arc-1 window with the
    required number of small labels; the existence argument guarantees one.
    """
    n = a.n
    tag = case_of(n)
    shape = _shape_of(tag)
    len1 = shape.a1_len
    thr = shape.small_threshold
    small = [1 if x <= thr else 0 for x in a.labels]
    exclude = a.labels.index(n) if tag.case is SplitCase.D else -1

    count = sum(small[t] for t in range(len1))
    for start in range(n):
        ok = count == shape.k1
        if exclude >= 0 and (exclude - start) % n < len1:
            # this window would bury the largest label inside arc 1
            ok = False
        if ok:
            s2 = thr - shape.k1
            return ArcSplit(
                a1_start=start,
                a1_len=len1,
                a2_len=shape.a2_len,
                small_threshold=thr,
                counts=(shape.k1, len1 - shape.k1, s2, shape.a2_len - s2),
            )
        count += small[(start + len1) % n] - small[start]
    raise RuntimeError("no balanced window found; this should be unreachable")


class Direction(Enum):
    TOP = "top"
    BOTTOM = "bottom"


@dataclass(frozen=True)
class ProcessPlan:
    """One gathering process plus its finishing moves.

    shift_moves collects the small labels toward one junction of the split;
    residual_moves then bubbles each block into ascending clockwise order.
    Replaying both on the input reaches the sorted class.
    """

    direction: Direction
    shift_cost: int
    residual_cost: int
    shift_moves: SwapSequence
    residual_moves: SwapSequence

    @property
    def total_cost(self):
        return self.shift_cost + self.residual_cost

    @property
    def moves(self):
        return self.shift_moves + self.residual_moves


def _runs(starts, lens, step):
    """Concatenation of arange(starts[i], ..., length lens[i], step)."""
    total = int(lens.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64)
    rep = np.repeat(starts, lens)
    offset = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(lens) - lens, lens)
    return rep + step * offset


def _arc_shift_moves(positions, arc_len, k, to_top):
    """Local swap-slot indices that walk each small label to its target.

    positions: top-to-bottom slots of the k smalls inside the arc.  Targets
    are the first k slots (to_top) or the last k (bottom).  Swapping slot q
    means exchanging arc slots q and q+1.  Returns (slots, cost).
    """
    idx = np.arange(k, dtype=np.int64)
    if to_top:
        lens = positions - idx
        starts = positions - 1
        slots = _runs(starts, lens, -1)
    else:
        dest = idx + (arc_len - k)
        lens = dest - positions
        # walk the bottom-most small first so nothing below it moves
        slots = _runs(positions[::-1], lens[::-1], +1)
    return slots, int(lens.sum())


def plan(a, split, direction):
    """Build one full process: gather the smalls, then finish both blocks."""
    n = a.n
    thr = split.small_threshold
    h = split.a1_start
    len1, len2 = split.a1_len, split.a2_len
    k1, _, k2, _ = split.counts
    labels = a.as_array()
    to_top = direction is Direction.TOP

    # top-to-bottom vertex lists: arc 1 clockwise, arc 2 anticlockwise
    arc1 = (h + np.arange(len1, dtype=np.int64)) % n
    arc2 = (h - 1 - np.arange(len2, dtype=np.int64)) % n

    shift_parts = []
    shift_cost = 0
    post = labels.copy()
    for arc, k, pair_origin, pair_step in (
        (arc1, k1, h, +1),
        (arc2, k2, h - 2, -1),
    ):
        vals = labels[arc]
        is_small = vals <= thr
        positions = np.nonzero(is_small)[0].astype(np.int64)
        if len(positions) != k:
            raise ValueError("split does not match this arrangement")
        slots, cost = _arc_shift_moves(positions, len(arc), k, to_top)
        shift_parts.append((pair_origin + pair_step * slots) % n)
        shift_cost += cost
        # the gathered arc directly: smalls keep their order, larges too
        block = np.concatenate([vals[is_small], vals[~is_small]]) if to_top else np.concatenate(
            [vals[~is_small], vals[is_small]]
        )
        post[arc] = block

    shift_moves = SwapSequence(n, MoveKind.ADJACENT, np.concatenate(shift_parts))

    s_total = thr
    if to_top:
        small_start, large_start = (h - k2) % n, (h + k1) % n
    else:
        small_start, large_start = (h + len1 - k1) % n, (h + len1 + k2) % n

    residual_parts = []
    residual_cost = 0
    for start, length in ((small_start, s_total), (large_start, n - s_total)):
        idx = (start + np.arange(length, dtype=np.int64)) % n
        vals = post[idx].copy()
        buf = np.empty(length * (length - 1) // 2, dtype=np.int64)
        cnt = _kernels.insertion_moves(vals, buf)
        residual_parts.append((start + buf[:cnt]) % n)
        residual_cost += int(cnt)

    residual_moves = SwapSequence(n, MoveKind.ADJACENT, np.concatenate(residual_parts))
    return ProcessPlan(direction, shift_cost, residual_cost, shift_moves, residual_moves)


def _sort_tiny(a):
    # at most two rotation classes exist, so one swap always suffices
    if same_class(a, trivial(a.n)):
        return SwapSequence.adjacent(a.n)
    for pos in range(a.n):
        labels = list(a.labels)
        q = (pos + 1) % a.n
        labels[pos], labels[q] = labels[q], labels[pos]
        if same_class(Arrangement(tuple(labels)), trivial(a.n)):
            return SwapSequence.adjacent(a.n, [pos])
    raise RuntimeError("tiny circle not sortable in one swap; unreachable")


def competing_plans(a):
    """The balanced split and both process plans for a (needs n >= 4)."""
    split = find_balanced_split(a)
    return split, plan(a, split, Direction.TOP), plan(a, split, Direction.BOTTOM)


def sort_cyclic(a):
    """Adjacent swaps taking a's rotation class to the sorted class.

    The result never exceeds diameter_bound(a.n) moves.  Ties between the
    two processes go to the top direction.
    """
    if a.n <= 3:
        return _sort_tiny(a)
    _, top, bottom = competing_plans(a)
    best = top if top.total_cost <= bottom.total_cost else bottom
    return best.moves


def circular_distance(n, i, j):
    """Steps between vertices i and j along the shorter way around."""
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError("vertex index out of range")
    d = abs(i - j)
    return min(d, n - d)


def reflection_perm(n, k):
    """Arrangement whose vertex i carries label ((k - i) mod n) + 1.

    As a map on residues it is the reflection i -> k - i, an involution
    whose fixed points are the solutions of 2i = k (mod n).
    """
    if n < 1:
        raise ValueError("n must be positive")
    return Arrangement(tuple((k - i) % n + 1 for i in range(n)))


def reflection_gaps(n, k):
    """Sorted multiset of circular distances i -> (k - i) mod n."""
    return tuple(sorted(circular_distance(n, i, (k - i) % n) for i in range(n)))


def reflection_sort_bound(n, k):
    """Proven lower bound on wraparound-swap sorting of reflection_perm(n, k).

    Defined for even n; counts the swaps forced by the gap structure.
    """
    if n < 2 or n % 2:
        raise ValueError("the bound is defined for even n only")
    if (k - n // 2) % 2:
        return (n * n - 2 * n) // 4
    return (n * n - 2 * n + 4) // 4
