"""All-swaps sorting times, coset cycle structure, unit constructions."""

import math

import numpy as np
import pytest

from circlesort.allswaps import (
    check_prime_attainment,
    check_two_cycle_classes,
    class_rank,
    coset_sort_time,
    cycle_count,
    fixed_points,
    is_prime,
    multiplication_perm,
    multiplication_unit_report,
    multiplicative_order,
    odd_generator,
    odd_shifts_two_half_cycles,
    prime_power_generator,
    primitive_root,
    shift_cycle_profile,
    shift_fixed_point,
    sort_time_lower_bounds,
    sort_time_table,
    unrank_class,
    worst_sort_time,
)
from circlesort.oracle import BudgetError, Mode, distance_table


def _naive_shift_cycles(p, j):
    n = len(p)
    seen = [False] * n
    count = 0
    for s in range(n):
        if not seen[s]:
            count += 1
            i = s
            while not seen[i]:
                seen[i] = True
                i = p[(i + j) % n]
    return count


def test_cycle_count_basics():
    assert cycle_count((0, 1, 2, 3)) == 4
    assert cycle_count((1, 2, 3, 0)) == 1
    assert cycle_count((1, 0, 3, 2)) == 2
    assert fixed_points((0, 2, 1)) == 1
    with pytest.raises(ValueError):
        cycle_count((0, 0, 1))


@pytest.mark.parametrize("n", [3, 5, 8, 11])
def test_shift_cycle_kernel_against_naive_recount(n):
    rng = np.random.default_rng(n)
    for _ in range(15):
        p = tuple(int(x) for x in rng.permutation(n))
        report = coset_sort_time(p)
        naive = [_naive_shift_cycles(p, j) for j in range(n)]
        assert list(report.shift_cycle_counts) == naive
        assert report.sort_time == n - max(naive)


def test_coset_sort_time_examples():
    assert coset_sort_time((0, 1, 2, 3, 4)).sort_time == 0
    assert coset_sort_time((0, 2, 1)).sort_time == 1
    # a rotation of the identity also sorts for free
    assert coset_sort_time((1, 2, 3, 4, 0)).sort_time == 0


@pytest.mark.parametrize("n", [2, 3, 6, 13, 30])
def test_sort_time_never_exceeds_n_minus_2(n):
    # some rotation of any permutation has a fixed point, so at least
    # two cycles appear somewhere in the coset
    rng = np.random.default_rng(n)
    for _ in range(20):
        p = tuple(int(x) for x in rng.permutation(n))
        report = coset_sort_time(p)
        assert report.sort_time <= n - 2
        assert max(report.shift_cycle_counts) >= 2


@pytest.mark.parametrize("n", [4, 7, 12])
def test_sort_time_is_rotation_invariant(n):
    rng = np.random.default_rng(50 + n)
    for _ in range(10):
        p = tuple(int(x) for x in rng.permutation(n))
        t = coset_sort_time(p).sort_time
        for j in range(n):
            shifted = tuple(p[(i + j) % n] for i in range(n))
            assert coset_sort_time(shifted).sort_time == t


def test_doubly_coprime_units_have_uniform_shift_counts():
    # when both a and a-1 are units, every rotation of the multiplication
    # map is conjugate to the map itself, so the cycle counts agree
    for n in range(2, 51):
        for a in range(2, n):
            if math.gcd(a, n) != 1 or math.gcd(a - 1, n) != 1:
                continue
            counts = set(coset_sort_time(multiplication_perm(n, a)).shift_cycle_counts)
            assert len(counts) == 1, (n, a)


@pytest.mark.parametrize("n", range(2, 7))
def test_class_rank_unrank_bijection(n):
    reps = [unrank_class(n, r) for r in range(math.factorial(n - 1))]
    assert reps == sorted(reps)  # lexicographic enumeration
    for r, rep in enumerate(reps):
        assert rep[0] == 0
        assert class_rank(rep) == r
    with pytest.raises(ValueError):
        unrank_class(n, math.factorial(n - 1))
    with pytest.raises(ValueError):
        class_rank(tuple(range(1, n)) + (0,))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_sort_time_table_matches_per_class_evaluation(n):
    table = sort_time_table(n)
    for r in range(math.factorial(n - 1)):
        assert table[r] == coset_sort_time(unrank_class(n, r)).sort_time


@pytest.mark.parametrize("n", range(2, 8))
def test_sort_time_table_matches_search_distances(n):
    assert np.array_equal(
        sort_time_table(n), distance_table(n, Mode.ALLSWAP).dist
    )


def test_worst_sort_times_frozen():
    assert [worst_sort_time(n).sort_time for n in range(2, 9)] == [0, 1, 1, 3, 3, 5, 5]


def test_worst_case_witness_is_consistent():
    for n in (4, 5, 7, 8):
        w = worst_sort_time(n)
        assert w.witness[0] == 0
        assert coset_sort_time(w.witness).sort_time == w.sort_time
        assert w.is_prime == is_prime(n)
        for _, value in w.lower_bounds:
            assert value <= w.sort_time


def test_class_budget_refusal():
    with pytest.raises(BudgetError) as err:
        sort_time_table(13)
    assert err.value.required == math.factorial(12)
    with pytest.raises(BudgetError):
        worst_sort_time(12)
    assert worst_sort_time(12, max_classes=math.factorial(11)).n == 12


def test_multiplication_perm_examples():
    assert cycle_count(multiplication_perm(9, 2)) == 3
    assert cycle_count(multiplication_perm(8, 3)) == 5
    assert multiplication_perm(5, 2) == (0, 2, 4, 1, 3)
    with pytest.raises(ValueError):
        multiplication_perm(6, 2)
    with pytest.raises(ValueError):
        multiplication_perm(6, 3)


def test_shift_fixed_point_examples():
    assert shift_fixed_point(7, 3, 1) == 2
    assert shift_fixed_point(6, 5, 1) is None
    with pytest.raises(ValueError):
        shift_fixed_point(6, 2, 0)


@pytest.mark.parametrize("n", [5, 7, 9, 12])
def test_shift_fixed_point_solves_the_congruence(n):
    for a in range(1, n):
        if math.gcd(a, n) != 1:
            continue
        for j in range(n):
            i = shift_fixed_point(n, a, j)
            if i is None:
                assert math.gcd(a - 1, n) > 1
                assert all(
                    (a * (x + j)) % n != x for x in range(n)
                )
            else:
                assert (a * (i + j)) % n == i
        if math.gcd(a - 1, n) == 1:
            # then every shifted map has a fixed point
            assert all(shift_fixed_point(n, a, j) is not None for j in range(n))


def test_primitive_roots():
    assert primitive_root(3) == 2
    assert primitive_root(5) == 2
    assert primitive_root(7) == 3
    assert primitive_root(23) == 5
    with pytest.raises(ValueError):
        primitive_root(2)
    with pytest.raises(ValueError):
        primitive_root(9)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_prime_power_generator_orders(p):
    g = prime_power_generator(p)
    assert multiplicative_order(g % (p * p), p * p) == p * (p - 1)
    assert multiplicative_order(g % p, p) == p - 1
    cube = p**3
    assert multiplicative_order(g % cube, cube) == p * p * (p - 1)


@pytest.mark.parametrize("p,k", [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (11, 1)])
def test_odd_generator_orders(p, k):
    g = odd_generator(p, k)
    assert g % 2 == 1
    for j in range(1, k + 1):
        m = 2 * p**j
        assert multiplicative_order(g % m, m) == (p - 1) * p ** (j - 1)


def test_generator_examples():
    assert prime_power_generator(3) == 2
    assert prime_power_generator(5) == 2
    assert prime_power_generator(7) == 3
    assert odd_generator(3, 1) == 5
    assert odd_generator(5, 1) == 7
    assert odd_generator(3, 2) == 11


def test_lower_bound_sources():
    assert dict(sort_time_lower_bounds(9))["prime_power"] == 6
    assert dict(sort_time_lower_bounds(8))["two_power"] == 3
    assert dict(sort_time_lower_bounds(18))["two_pk"] == 12
    assert dict(sort_time_lower_bounds(100))["general"] == 84
    assert dict(sort_time_lower_bounds(4))["prime_power"] == 1
    srcs = [s for s, _ in sort_time_lower_bounds(15)]
    assert srcs == ["general"]  # 15 is neither a prime power nor twice one


def test_shift_cycle_profiles():
    assert shift_cycle_profile(3, 1) == (4, 3)
    assert shift_cycle_profile(3, 2) == (6, 5)
    assert shift_cycle_profile(5, 1) == (4, 3)
    for p, k in [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1)]:
        # one cycle per divisor class on even shifts, one fewer on odd ones,
        # which pins the class sorting time to n - 2k - 2 on the nose
        assert shift_cycle_profile(p, k) == (2 * k + 2, 2 * k + 1)
        n = 2 * p**k
        g = odd_generator(p, k) % n
        t = coset_sort_time(multiplication_perm(n, g)).sort_time
        assert t == n - 2 * k - 2 == dict(sort_time_lower_bounds(n))["two_pk"]


def test_odd_shift_half_cycles():
    for k in (3, 4, 5):
        n = 2**k
        p = multiplication_perm(n, 3)
        assert cycle_count(p) == 2 * k - 1
        assert odd_shifts_two_half_cycles(p)
        report = coset_sort_time(p)
        for j in range(1, n, 2):
            assert report.shift_cycle_counts[j] == 2
    assert not odd_shifts_two_half_cycles(tuple(range(10)))
    with pytest.raises(ValueError):
        odd_shifts_two_half_cycles((0, 2, 1))


def test_prime_attainment_sweep():
    report = check_prime_attainment(9)
    assert report.consistent
    assert [row.attains for row in report.rows] == [
        row.is_prime for row in report.rows
    ]


def test_two_cycle_class_sweep():
    r3 = check_two_cycle_classes(3)
    assert r3.flagged == ((0, 2, 1),)
    assert r3.consistent
    r4 = check_two_cycle_classes(4)
    assert r4.flagged == ()
    r5 = check_two_cycle_classes(5)
    assert len(r5.flagged) == 2 and r5.consistent


def test_unit_report_consistency():
    report = multiplication_unit_report(11)
    assert {row.a for row in report.rows} == set(range(1, 11))
    for row in report.rows:
        assert row.order == multiplicative_order(row.a, 11)
        assert row.cycles == cycle_count(multiplication_perm(11, row.a))
        if row.a == 1:
            assert row.sort_time == 0
        else:
            # multiplication classes sort in n - 1 - (n-1)/order swaps
            # whenever a - 1 is a unit, which holds for every a here but 1
            assert row.sort_time == 10 - 10 // row.order
    assert report.row(2).sort_time == 9
    assert report.row(3).sort_time == 8
    assert report.max_sort_time == worst_sort_time(11).sort_time
