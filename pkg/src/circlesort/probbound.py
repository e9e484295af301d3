"""Cycle statistics of uniform random permutations, with exact arithmetic.

The probability that a random permutation of n elements has exactly k+1
cycles is c(n, k+1)/n!, where c counts permutations by cycle number
(unsigned Stirling numbers of the first kind).  That probability is at
most (ln(n-1)+1)^k / (n * k!), and summing the geometric decay past the
cutoff ceil(e*(ln n + 1)) bounds the chance of many cycles below 1/n.

Probabilities stay exact rationals; only the analytic bound side is
floating point.
"""

import math
from dataclasses import dataclass
from fractions import Fraction


class StirlingTable:
    """Rows of c(n, k): permutations of n elements with exactly k cycles."""

    def __init__(self, n_max=0):
        self.rows = [[1]]
        self.extend(n_max)

    def extend(self, n_max):
        while len(self.rows) <= n_max:
            n = len(self.rows)
            prev = self.rows[-1]
            row = [0] * (n + 1)
            for k in range(1, n + 1):
                row[k] = prev[k - 1] + (n - 1) * (prev[k] if k < n else 0)
            self.rows.append(row)

    @property
    def n_max(self):
        return len(self.rows) - 1

    def value(self, n, k):
        if n < 0 or k < 0:
            raise ValueError("arguments must be nonnegative")
        self.extend(n)
        return self.rows[n][k] if k <= n else 0


_table = StirlingTable(60)


def stirling_first(n, k):
    """c(n, k), exact."""
    return _table.value(n, k)


def cycle_prob(n, k):
    """Probability that a random permutation of n elements has exactly
    k+1 cycles, as an exact rational."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must lie in 0..{n - 1}")
    return Fraction(stirling_first(n, k + 1), math.factorial(n))


def _power_over_factorial(base, k):
    # base**k / k! without overflowing float for large k
    if k < 150:
        return base**k / math.factorial(k)
    return math.exp(k * math.log(base) - math.lgamma(k + 1))


def cycle_prob_bound(n, k):
    """Analytic bound on cycle_prob(n, k): (ln(n-1)+1)^k / (n * k!)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _power_over_factorial(math.log(n - 1) + 1, k) / n


@dataclass(frozen=True)
class TailReport:
    """Exact and bounded probability of more than `cutoff` cycles."""

    n: int
    cutoff: int
    pk_bound: float
    exact_tail: Fraction
    bound_tail: float


def tail_report(n):
    """Bound the chance of a random permutation having many cycles.

    Past the cutoff k0 = ceil(e*(ln n + 1)) each extra cycle multiplies the
    probability by at most 1/e, so the tail is dominated by a geometric
    series starting at the k0 term.
    """
    if n < 1:
        raise ValueError("n must be positive")
    log_term = math.log(n) + 1
    k0 = math.ceil(math.e * log_term)
    pk_bound = _power_over_factorial(log_term, k0) / n
    bound_tail = pk_bound / (1 - math.exp(-1))
    total = sum(stirling_first(n, j) for j in range(k0 + 1, n + 1))
    return TailReport(
        n=n,
        cutoff=k0,
        pk_bound=pk_bound,
        exact_tail=Fraction(total, math.factorial(n)),
        bound_tail=bound_tail,
    )


def general_lower_bound(n):
    """n minus the cycle cutoff: a worst class needs at least this many swaps."""
    if n < 1:
        raise ValueError("n must be positive")
    return n - math.ceil(math.e * (math.log(n) + 1))
