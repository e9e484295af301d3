"""Acceptance gate: every verification suite, at its full default scope.

Each criterion is one parametrized case, so `pytest -v` shows one
pass/fail line per criterion; the recorder detail prints with the result.
"""

import pytest

from circlesort import checks

CRITERIA = [
    ("A1", checks.check_diameter_formula),
    ("A2", checks.check_sorter),
    ("A3", checks.check_reflection_family),
    ("A4", checks.check_allswap_formula),
    ("A5", checks.check_worst_times),
    ("A6", checks.check_multiplicative_constructions),
    ("A7", checks.check_cycle_probabilities),
    ("A8", checks.check_general_bound),
    ("A9", checks.check_conjectures),
    ("A10", checks.check_unit_report),
]

IDS = [f"{code}-{fn.__name__.removeprefix('check_')}" for code, fn in CRITERIA]


@pytest.mark.parametrize("code,fn", CRITERIA, ids=IDS)
def test_criterion(code, fn):
    result = fn()
    status = "PASS" if result.passed else "FAIL"
    print(f"{status} {code} {result.name} ({result.seconds}s)")
    for line in result.lines:
        print(f"  {line}")
    assert result.passed, f"{code} failed: {result.name}\n" + "\n".join(result.lines)


def test_every_suite_is_covered():
    covered = {fn for _, fn in CRITERIA}
    for suite, fns in checks.SUITES.items():
        for fn in fns:
            assert fn in covered, f"suite {suite} contains an unchecked criterion"
