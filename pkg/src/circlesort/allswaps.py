"""Sorting times when any two labels may be exchanged per move.

A rotation class is sorted by picking its cheapest member: a permutation
with c cycles needs exactly n - c arbitrary swaps, so the class sorting
time is n minus the largest cycle count over all rotations of one member.
The worst class for each n, lower bounds from multiplication maps
i -> a*i (mod n), and the conjecture sweeps all live here.

Permutations are tuples mapping 0..n-1 to 0..n-1; the class of an
arrangement corresponds to the permutation read off its canonical labels.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .oracle import BudgetError, Mode
from .probbound import general_lower_bound

DEFAULT_CLASS_BUDGET = 4_000_000


def _validate_perm(p):
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation of 0..{len(p) - 1}: {p}")
    return p


def cycle_count(p):
    """Number of cycles of a permutation of 0..n-1."""
    p = _validate_perm(p)
    seen = [False] * len(p)
    count = 0
    for i in range(len(p)):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return count


def fixed_points(p):
    return sum(1 for i, v in enumerate(p) if i == v)


@dataclass(frozen=True)
class CosetReport:
    """Cycle counts of one class member composed with every rotation."""

    base: tuple
    shift_cycle_counts: tuple
    sort_time: int


def coset_sort_time(p):
    """Swaps needed to sort the rotation class of p, with the per-shift counts."""
    p = _validate_perm(p)
    counts = _kernels.shift_cycle_counts(np.array(p, dtype=np.int64))
    counts = tuple(int(c) for c in counts)
    return CosetReport(base=p, shift_cycle_counts=counts, sort_time=len(p) - max(counts))


def _lex_perms(k):
    """All permutations of 0..k-1 as rows, in lexicographic order."""
    if k <= 0:
        return np.zeros((1, 0), dtype=np.int8)
    out = np.zeros((1, 1), dtype=np.int8)
    for size in range(2, k + 1):
        prev = out
        cnt = prev.shape[0]
        out = np.empty((cnt * size, size), dtype=np.int8)
        for first in range(size):
            rest = prev + (prev >= first)
            out[first * cnt : (first + 1) * cnt, 0] = first
            out[first * cnt : (first + 1) * cnt, 1:] = rest
    return out


def class_rank(p):
    """Lexicographic rank of a class representative among all with p[0] = 0."""
    p = _validate_perm(p)
    if p[0] != 0:
        raise ValueError("class representatives fix 0")
    rest = [x - 1 for x in p[1:]]
    k = len(rest)
    r = 0
    for i, v in enumerate(rest):
        smaller_later = sum(1 for w in rest[i + 1 :] if w < v)
        r += smaller_later * math.factorial(k - 1 - i)
    return r


def unrank_class(n, r):
    """Inverse of class_rank: the rank-r representative with p[0] = 0."""
    k = n - 1
    if not 0 <= r < math.factorial(k):
        raise ValueError("rank out of range")
    symbols = list(range(1, n))
    rest = []
    for i in range(k):
        f = math.factorial(k - 1 - i)
        rest.append(symbols.pop(r // f))
        r %= f
    return (0, *rest)


@lru_cache(maxsize=None)
def _class_sweep(n):
    """Largest coset cycle count for every class, indexed by class_rank."""
    block = _lex_perms(n - 1)
    reps = np.empty((block.shape[0], n), dtype=np.int8)
    reps[:, 0] = 0
    reps[:, 1:] = block + 1
    out = np.empty(block.shape[0], dtype=np.uint8)
    _kernels.coset_max_cycles(reps, out)
    return out


def _check_class_budget(n, max_classes):
    required = math.factorial(n - 1)
    if required > max_classes:
        raise BudgetError(n, Mode.ALLSWAP, required, max_classes)


def sort_time_table(n, max_classes=DEFAULT_CLASS_BUDGET):
    """Sorting time of every class, indexed by class_rank."""
    if n < 2:
        raise ValueError("n must be at least 2")
    _check_class_budget(n, max_classes)
    return (n - _class_sweep(n).astype(np.int64)).astype(np.uint8)


@dataclass(frozen=True)
class WorstCase:
    n: int
    sort_time: int
    witness: tuple
    lower_bounds: tuple
    is_prime: bool


def worst_sort_time(n, max_classes=DEFAULT_CLASS_BUDGET):
    """The largest class sorting time for n, with its smallest witness class."""
    if n < 2:
        raise ValueError("n must be at least 2")
    _check_class_budget(n, max_classes)
    mx = _class_sweep(n)
    rank = int(np.argmin(mx))
    return WorstCase(
        n=n,
        sort_time=n - int(mx[rank]),
        witness=unrank_class(n, rank),
        lower_bounds=sort_time_lower_bounds(n),
        is_prime=is_prime(n),
    )


# --- number-theoretic helpers -------------------------------------------------


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _factorize(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _totient(n):
    t = n
    for p in _factorize(n):
        t -= t // p
    return t


def multiplicative_order(a, n):
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    if n == 1:
        return 1
    order = _totient(n)
    for q in _factorize(order):
        while order % q == 0 and pow(a, order // q, n) == 1:
            order //= q
    return order


def _prime_power_split(n):
    f = _factorize(n)
    if len(f) == 1:
        ((p, k),) = f.items()
        return p, k
    return None


def multiplication_perm(n, a):
    """The permutation i -> a*i (mod n); a must be a unit mod n."""
    if n < 1:
        raise ValueError("n must be positive")
    if math.gcd(a % n if n > 1 else 1, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    return tuple((a * i) % n for i in range(n))


def shift_fixed_point(n, a, j):
    """Smallest fixed point of i -> a*(i+j) mod n, or None.

    Solves (1 - a) i = a j (mod n); when gcd(a - 1, n) = 1 a solution
    exists for every j.
    """
    if math.gcd(a % n if n > 1 else 1, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    b = (1 - a) % n
    r = (a * j) % n
    d = math.gcd(b, n)
    if r % d:
        return None
    nn = n // d
    return (r // d) * pow(b // d, -1, nn) % nn


def primitive_root(p):
    """Smallest generator of the units mod p, for odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    for g in range(2, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise RuntimeError(f"no primitive root found mod {p}; unreachable")


def prime_power_generator(p):
    """A generator of the units mod every power of the odd prime p.

    A generator mod p that also generates mod p**2 generates mod all
    higher powers; the order check mod p**2 is always performed.
    """
    g = primitive_root(p)
    if pow(g, p - 1, p * p) == 1:
        g += p
    if multiplicative_order(g, p * p) != p * (p - 1):
        raise RuntimeError(f"generator construction failed mod {p}**2; unreachable")
    return g


def odd_generator(p, k):
    """An odd generator of the units mod 2*p**j for every 1 <= j <= k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    g = prime_power_generator(p)
    if g % 2 == 0:
        g += p**k
    for j in range(1, k + 1):
        m = 2 * p**j
        if multiplicative_order(g % m, m) != _totient(p**j):
            raise RuntimeError(f"odd generator check failed mod {m}; unreachable")
    return g


def sort_time_lower_bounds(n):
    """Applicable proven lower bounds on the worst sorting time, as
    (source, value) pairs.  The general bound always applies."""
    if n < 2:
        raise ValueError("n must be at least 2")
    bounds = []
    split = _prime_power_split(n)
    if split:
        p, k = split
        if p != 2:
            bounds.append(("prime_power", n - k - 1))
        elif k <= 2:
            # the units mod 2 and mod 4 are still cyclic
            bounds.append(("prime_power", n - k - 1))
        if p == 2 and k >= 2:
            bounds.append(("two_power", n - 2 * k + 1))
    if n % 2 == 0 and n > 2:
        split = _prime_power_split(n // 2)
        if split and split[0] != 2:
            p, k = split
            bounds.append(("two_pk", n - 2 * k - 2))
    bounds.append(("general", general_lower_bound(n)))
    return tuple(bounds)


def shift_cycle_profile(p, k):
    """(even shift cycles, odd shift cycles) for the odd-generator
    multiplication map on n = 2*p**k points.

    Every even shift has the same cycle count, every odd shift too; a
    nonuniform profile would mean the construction is broken.
    """
    n = 2 * p**k
    g = odd_generator(p, k) % n
    counts = _kernels.shift_cycle_counts(np.array(multiplication_perm(n, g), dtype=np.int64))
    even = {int(c) for c in counts[0::2]}
    odd = {int(c) for c in counts[1::2]}
    if len(even) != 1 or len(odd) != 1:
        raise RuntimeError(f"nonuniform shift profile for n={n}; unreachable")
    return (even.pop(), odd.pop())


def odd_shifts_two_half_cycles(p):
    """True if every odd shift of p has exactly two cycles of length n/2."""
    p = _validate_perm(p)
    if len(p) % 2:
        raise ValueError("defined for even n only")
    return bool(_kernels.odd_shifts_two_half_cycles(np.array(p, dtype=np.int64)))


# --- conjecture sweeps --------------------------------------------------------


@dataclass(frozen=True)
class PrimeAttainmentRow:
    n: int
    sort_time: int
    is_prime: bool
    attains: bool


@dataclass(frozen=True)
class PrimeAttainmentReport:
    rows: tuple

    @property
    def consistent(self):
        return all(r.attains == r.is_prime for r in self.rows)


def check_prime_attainment(max_n, max_classes=DEFAULT_CLASS_BUDGET):
    """Does the worst time reach n - 2 exactly at the primes?  Checks every
    n up to max_n by exhaustive sweep."""
    rows = []
    for n in range(2, max_n + 1):
        w = worst_sort_time(n, max_classes)
        rows.append(
            PrimeAttainmentRow(
                n=n, sort_time=w.sort_time, is_prime=w.is_prime, attains=w.sort_time == n - 2
            )
        )
    return PrimeAttainmentReport(rows=tuple(rows))


@dataclass(frozen=True)
class TwoCycleClassReport:
    """Classes whose best coset member has exactly two cycles."""

    n: int
    flagged: tuple
    all_one_fixed_point: bool
    all_multiplicative: bool

    @property
    def consistent(self):
        if not self.flagged:
            return True
        return self.all_one_fixed_point and self.all_multiplicative and is_prime(self.n)


def check_two_cycle_classes(n, max_classes=DEFAULT_CLASS_BUDGET):
    """Sweep all classes of n for max coset cycle count exactly 2 and test
    the structure claims: every member of such a class has one fixed point,
    and the class is a multiplication class of a unit."""
    if n < 3:
        raise ValueError("n must be at least 3")
    _check_class_budget(n, max_classes)
    mx = _class_sweep(n)
    flagged = [unrank_class(n, int(r)) for r in np.nonzero(mx == 2)[0]]
    one_fixed = True
    for rep in flagged:
        for j in range(n):
            sigma = tuple(rep[(i + j) % n] for i in range(n))
            if cycle_count(sigma) != 2 or fixed_points(sigma) != 1:
                one_fixed = False
    mult_classes = {
        multiplication_perm(n, a) for a in range(1, n) if math.gcd(a, n) == 1
    }
    multiplicative = all(rep in mult_classes for rep in flagged)
    return TwoCycleClassReport(
        n=n,
        flagged=tuple(flagged),
        all_one_fixed_point=one_fixed,
        all_multiplicative=multiplicative,
    )


# --- multiplication class survey ---------------------------------------------


@dataclass(frozen=True)
class UnitRow:
    a: int
    order: int
    cycles: int
    sort_time: int
    extension_sort_time: int


@dataclass(frozen=True)
class UnitReport:
    n: int
    rows: tuple

    @property
    def max_sort_time(self):
        return max(r.sort_time for r in self.rows)

    def row(self, a):
        for r in self.rows:
            if r.a == a:
                return r
        raise KeyError(a)


def multiplication_unit_report(n=11):
    """Sorting time of every multiplication class mod n, and of each class
    extended by one extra fixed point on a circle of n + 1 vertices."""
    rows = []
    for a in range(1, n):
        if math.gcd(a, n) != 1:
            continue
        p = multiplication_perm(n, a)
        extended = (*p, n)
        rows.append(
            UnitRow(
                a=a,
                order=multiplicative_order(a, n),
                cycles=cycle_count(p),
                sort_time=coset_sort_time(p).sort_time,
                extension_sort_time=coset_sort_time(extended).sort_time,
            )
        )
    return UnitReport(n=n, rows=tuple(rows))
