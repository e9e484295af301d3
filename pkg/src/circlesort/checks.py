"""End-to-end verification suites.

Each check here covers one acceptance item for the package: the formula
and the search agree, the sorter stays within its bound, the lower-bound
machinery never overshoots, and the conjecture sweeps stay consistent.
The same functions back `circlesort verify` and the acceptance tests, so
the command line and the test suite cannot drift apart.
"""

import itertools
import math
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import adjsort, allswaps, oracle, probbound
from .adjsort import (
    case_of,
    competing_plans,
    diameter_bound,
    planned_shift_total,
    reflection_perm,
    reflection_sort_bound,
    residual_bound,
    sort_cyclic,
)
from .core import Arrangement, replay, same_class, trivial
from .oracle import Mode


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    lines: tuple
    seconds: float


class _Recorder:
    def __init__(self, name):
        self.name = name
        self.lines = []
        self.failures = 0
        self.t0 = time.monotonic()

    def expect(self, ok, message_if_bad):
        if not ok:
            self.failures += 1
            if self.failures <= 20:
                self.lines.append(f"FAIL {message_if_bad}")
        return ok

    def note(self, line):
        self.lines.append(line)

    def done(self):
        if self.failures > 20:
            self.lines.append(f"... {self.failures - 20} more failures suppressed")
        return CheckResult(
            name=self.name,
            passed=self.failures == 0,
            lines=tuple(self.lines),
            seconds=round(time.monotonic() - self.t0, 3),
        )


def check_diameter_formula(max_n=None, config=None):
    """A1: the exact adjacent-swap diameter equals floor((n-1)^2/4)."""
    max_n = max_n or 10
    rec = _Recorder("diameter equals the quarter-square formula")
    pairs = []
    for n in range(1, max_n + 1):
        d = oracle.diameter(n, Mode.ADJACENT, config)
        f = diameter_bound(n)
        rec.expect(d == f, f"n={n}: diameter {d} != formula {f}")
        pairs.append(f"{n}:{d}")
    rec.note("diameters " + " ".join(pairs))
    return rec.done()


def _class_arrangements(n):
    for rest in itertools.permutations(range(2, n + 1)):
        yield Arrangement((1, *rest))


def _verify_sort(rec, a, seq):
    n = a.n
    ok = len(seq) <= diameter_bound(n)
    ok &= same_class(replay(a, seq), trivial(n))
    return rec.expect(ok, f"bad sort for {a.labels}: length {len(seq)}")


def _verify_plan_identities(rec, a, split, top, bottom):
    tag = case_of(a.n)
    rec.expect(
        top.shift_cost + bottom.shift_cost == planned_shift_total(tag),
        f"shift identity broken for {a.labels}",
    )
    rec.expect(
        top.residual_cost + bottom.residual_cost <= residual_bound(tag),
        f"residual bound broken for {a.labels}",
    )


def check_sorter(max_n=None, random_sizes=(50, 101, 200), samples=10_000, seed=20260822):
    """A2: the sorter reaches the sorted class within the bound, with the
    per-case cost identities, on all small classes and large random inputs."""
    max_n = max_n or 8
    rec = _Recorder("sorter is valid and within the bound")
    total = 0
    for n in range(1, max_n + 1):
        for a in _class_arrangements(n):
            total += 1
            _verify_sort(rec, a, sort_cyclic(a))
            if n >= 4:
                split, top, bottom = competing_plans(a)
                _verify_plan_identities(rec, a, split, top, bottom)
    rec.note(f"exhaustive classes up to n={max_n}: {total}")
    rng = np.random.default_rng(seed)
    for n in random_sizes:
        worst = 0
        for _ in range(samples):
            a = Arrangement(tuple((rng.permutation(n) + 1).tolist()))
            split, top, bottom = competing_plans(a)
            _verify_plan_identities(rec, a, split, top, bottom)
            best = top if top.total_cost <= bottom.total_cost else bottom
            worst = max(worst, best.total_cost)
            _verify_sort(rec, a, best.moves)
        rec.note(f"n={n}: {samples} random sorts, worst length {worst} <= {diameter_bound(n)}")
    return rec.done()


def check_reflection_family(max_n=None, affine_max_n=8, config=None):
    """A3: the reversal class attains the diameter, and the wraparound-swap
    distances of the reflections dominate the proven lower-bound table."""
    max_n = max_n or 10
    rec = _Recorder("reflection family attains the extremes")
    for n in range(1, max_n + 1):
        d = oracle.distance(reflection_perm(n, n - 1), Mode.ADJACENT, config)
        rec.expect(d == diameter_bound(n), f"n={n}: reversal distance {d}")
    rec.note(f"reversal distance checked for n=1..{max_n}")
    for n in range(1, affine_max_n + 1):
        dists = [oracle.reflection_affine_distance(n, k, config) for k in range(n)]
        if n % 2 == 0:
            for k in range(n):
                rec.expect(
                    dists[k] >= reflection_sort_bound(n, k),
                    f"n={n} k={k}: affine distance {dists[k]} below the bound",
                )
        rec.expect(
            min(dists) == diameter_bound(n),
            f"n={n}: min affine distance {min(dists)} != {diameter_bound(n)}",
        )
    rec.note(f"affine reflection distances checked for n=1..{affine_max_n}")
    return rec.done()


def check_allswap_formula(max_n=None, config=None):
    """A4: the coset cycle formula matches the exhaustive search on every class."""
    max_n = max_n or 8
    rec = _Recorder("coset formula agrees with search everywhere")
    for n in range(2, max_n + 1):
        table = oracle.distance_table(n, Mode.ALLSWAP, config)
        formula = allswaps.sort_time_table(n)
        same = np.array_equal(formula, table.dist)
        rec.expect(same, f"n={n}: formula table differs from search")
        if same:
            rec.note(f"n={n}: {len(formula)} classes agree")
    return rec.done()


def check_worst_times(max_n=None):
    """A5: worst sorting times hit n-2 exactly at the primes, and every
    proven lower bound stays below them."""
    max_n = max_n or 11
    rec = _Recorder("worst sorting times and their bounds")
    values = []
    for n in range(2, max_n + 1):
        w = allswaps.worst_sort_time(n)
        values.append(f"{n}:{w.sort_time}")
        attains = w.sort_time == n - 2
        rec.expect(
            attains == w.is_prime,
            f"n={n}: time {w.sort_time}, n-2 attainment does not track primality",
        )
        if n == 4:
            rec.expect(w.sort_time == 1, f"t(4) = {w.sort_time} != 1")
        for source, value in w.lower_bounds:
            rec.expect(
                value <= w.sort_time,
                f"n={n}: {source} bound {value} exceeds the true time {w.sort_time}",
            )
    rec.note("worst times " + " ".join(values))
    return rec.done()


def check_multiplicative_constructions(max_n=None, two_power_range=(3, 12)):
    """A6: multiplication classes have the promised exact cycle structure."""
    limit = max_n or 2000
    rec = _Recorder("multiplication constructions are exact")
    count = 0
    for p in range(3, limit + 1):
        if not allswaps.is_prime(p):
            continue
        g = allswaps.prime_power_generator(p)
        pk, k = p, 1
        while pk <= limit:
            cyc = allswaps.cycle_count(allswaps.multiplication_perm(pk, g % pk))
            rec.expect(cyc == k + 1, f"n={pk}: generator map has {cyc} cycles, wanted {k + 1}")
            count += 1
            pk *= p
            k += 1
    rec.note(f"odd prime powers up to {limit}: {count} checked")
    lo, hi = two_power_range
    for k in range(lo, hi + 1):
        n = 2**k
        perm = allswaps.multiplication_perm(n, 3)
        cyc = allswaps.cycle_count(perm)
        rec.expect(cyc == 2 * k - 1, f"n=2^{k}: map by 3 has {cyc} cycles, wanted {2 * k - 1}")
        rec.expect(
            allswaps.odd_shifts_two_half_cycles(perm),
            f"n=2^{k}: some odd shift is not two half-length cycles",
        )
    rec.note(f"powers of two 2^{lo}..2^{hi} checked")
    count = 0
    for p in range(3, limit // 2 + 1):
        if not allswaps.is_prime(p):
            continue
        k = 1
        while 2 * p**k <= limit:
            profile = allswaps.shift_cycle_profile(p, k)
            rec.expect(
                profile == (2 * k + 2, 2 * k + 1),
                f"n=2*{p}^{k}: shift profile {profile}",
            )
            count += 1
            k += 1
    rec.note(f"doubled odd prime powers up to {limit}: {count} checked")
    return rec.done()


def check_cycle_probabilities(max_n=None):
    """A7: exact cycle-count probabilities never exceed the analytic bound,
    match it at k=0, and the tail past the cutoff stays below 1/n."""
    max_n = max_n or 30
    rec = _Recorder("cycle probabilities within the analytic bound")
    margin = 1 + Fraction(1, 10**9)
    tails = 0
    for n in range(2, max_n + 1):
        for k in range(n):
            prob = probbound.cycle_prob(n, k)
            bound = Fraction(probbound.cycle_prob_bound(n, k))
            rec.expect(
                prob <= bound * margin,
                f"n={n} k={k}: probability {float(prob):.3e} above bound {float(bound):.3e}",
            )
        b0 = Fraction(probbound.cycle_prob_bound(n, 0))
        rec.expect(
            abs(b0 - Fraction(1, n)) <= Fraction(1, n * 10**12),
            f"n={n}: bound at k=0 is not 1/n",
        )
        rep = probbound.tail_report(n)
        rec.expect(
            rep.exact_tail <= Fraction(rep.bound_tail) * margin,
            f"n={n}: exact tail above its own bound",
        )
        if rep.cutoff < n:
            tails += 1
            rec.expect(
                rep.exact_tail < Fraction(1, n) and rep.bound_tail < 1 / n,
                f"n={n}: tail past cutoff {rep.cutoff} not below 1/n",
            )
    rec.note(f"n=2..{max_n} all k checked; {tails} tail cases below 1/n")
    return rec.done()


def check_general_bound(max_n=None):
    """A8: the general lower bound never exceeds the true worst time."""
    max_n = max_n or 11
    rec = _Recorder("general lower bound holds")
    for n in range(2, max_n + 1):
        t = allswaps.worst_sort_time(n).sort_time
        g = probbound.general_lower_bound(n)
        rec.expect(g <= t, f"n={n}: general bound {g} exceeds worst time {t}")
    rec.note(f"checked n=2..{max_n}")
    return rec.done()


def check_conjectures(max_n=None):
    """A9: prime attainment and the two-cycle class structure sweeps."""
    max_n = max_n or 10
    rec = _Recorder("conjecture sweeps consistent")
    pa = allswaps.check_prime_attainment(max_n)
    rec.expect(pa.consistent, "n-2 attainment does not match primality somewhere")
    flagged_total = 0
    for n in range(3, max_n + 1):
        rep = allswaps.check_two_cycle_classes(n)
        flagged_total += len(rep.flagged)
        rec.expect(
            rep.consistent,
            f"n={n}: {len(rep.flagged)} flagged classes break the structure claims",
        )
    rec.note(f"swept n=3..{max_n}; {flagged_total} two-cycle classes, all multiplicative")
    return rec.done()


def _naive_coset_time(p):
    # independent of the compiled kernel on purpose
    n = len(p)
    best = 0
    for j in range(n):
        sigma = [p[(i + j) % n] for i in range(n)]
        seen = [False] * n
        cyc = 0
        for i in range(n):
            if not seen[i]:
                cyc += 1
                cur = i
                while not seen[cur]:
                    seen[cur] = True
                    cur = sigma[cur]
        best = max(best, cyc)
    return n - best


def check_unit_report(max_n=None):
    """A10: the multiplication-class survey at n=11 is internally consistent
    across three routes: the coset formula, a direct recount, and the
    order arithmetic; its maximum matches the exhaustive worst time."""
    n = max_n or 11
    rec = _Recorder("multiplication class survey is consistent")
    report = allswaps.multiplication_unit_report(n)
    worst = allswaps.worst_sort_time(n).sort_time
    for row in report.rows:
        p = allswaps.multiplication_perm(n, row.a)
        rec.expect(
            _naive_coset_time(p) == row.sort_time,
            f"a={row.a}: recount disagrees with the reported time {row.sort_time}",
        )
        rec.expect(
            _naive_coset_time((*p, n)) == row.extension_sort_time,
            f"a={row.a}: extension recount disagrees",
        )
        if row.a == 1:
            rec.expect(row.sort_time == 0, "the identity class should cost 0")
        elif math.gcd(row.a - 1, n) == 1:
            predicted = n - 1 - (n - 1) // row.order
            rec.expect(
                row.sort_time == predicted,
                f"a={row.a}: order arithmetic predicts {predicted}, got {row.sort_time}",
            )
        rec.expect(
            row.sort_time <= worst,
            f"a={row.a}: reported time exceeds the exhaustive worst {worst}",
        )
    rec.expect(
        report.max_sort_time == worst,
        f"survey max {report.max_sort_time} != exhaustive worst {worst}",
    )
    for row in report.rows:
        rec.note(
            f"a={row.a}: order {row.order}, cycles {row.cycles}, "
            f"time {row.sort_time}, extended {row.extension_sort_time}"
        )
    return rec.done()


SUITES = {
    "upper": (check_diameter_formula, check_sorter),
    "lower": (check_reflection_family,),
    "allswap": (
        check_allswap_formula,
        check_worst_times,
        check_multiplicative_constructions,
        check_unit_report,
    ),
    "conjectures": (check_conjectures,),
    "p31": (check_cycle_probabilities, check_general_bound),
}


def run_suite(suite, max_n=None, config=None):
    """Run one named suite; max_n narrows or widens each check's main range."""
    results = []
    for fn in SUITES[suite]:
        kwargs = {}
        if max_n is not None:
            kwargs["max_n"] = max_n
        if config is not None and "config" in fn.__code__.co_varnames:
            kwargs["config"] = config
        results.append(fn(**kwargs))
    return results
