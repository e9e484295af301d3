"""Sorting labeled points on a circle.

Arrangements of the labels 1..n on a circle, considered up to rotation,
are sorted with adjacent swaps in at most floor((n-1)^2/4) moves, and
that bound is exactly the worst case.  The package provides the
constructive sorter, exhaustive distance tables for three swap models,
the worst-case analysis when arbitrary swaps are allowed, and the exact
probability bounds behind the general lower bound.
"""

__version__ = "0.1.0"

from .adjsort import (
    ArcSplit,
    CaseTag,
    Direction,
    ProcessPlan,
    SplitCase,
    case_of,
    circular_distance,
    competing_plans,
    diameter_bound,
    find_balanced_split,
    plan,
    reflection_gaps,
    reflection_perm,
    reflection_sort_bound,
    sort_cyclic,
)
from .allswaps import (
    CosetReport,
    UnitReport,
    WorstCase,
    check_prime_attainment,
    check_two_cycle_classes,
    class_rank,
    coset_sort_time,
    cycle_count,
    multiplication_perm,
    multiplication_unit_report,
    odd_generator,
    prime_power_generator,
    primitive_root,
    shift_cycle_profile,
    shift_fixed_point,
    sort_time_lower_bounds,
    sort_time_table,
    unrank_class,
    worst_sort_time,
)
from .core import (
    AdjSwap,
    Arrangement,
    CyclicPerm,
    GenSwap,
    SwapSequence,
    apply_swap,
    canonicalize,
    format_arrangement,
    inversions,
    parse_arrangement,
    replay,
    rotate,
    same_class,
    trivial,
)
from .oracle import (
    BudgetError,
    DistanceTable,
    Mode,
    SearchConfig,
    diameter,
    distance,
    distance_table,
    reflection_affine_distance,
)
from .probbound import (
    StirlingTable,
    TailReport,
    cycle_prob,
    cycle_prob_bound,
    general_lower_bound,
    stirling_first,
    tail_report,
)
