"""Shared fixtures and the acceptance verdict reporter."""

import re
from fractions import Fraction

import pytest

from krallhahn.hahn import HahnParams

_CRITERION = re.compile(r"::test_criterion_(\d+)\b")


def pytest_runtest_logreport(report):
    # one printed verdict line per acceptance criterion
    if report.when != "call":
        return
    matched = _CRITERION.search(report.nodeid)
    if matched is None:
        return
    verdict = "PASS" if report.passed else "FAIL"
    print(f"\nACCEPTANCE criterion-{matched.group(1)}: {verdict}", flush=True)


@pytest.fixture
def desk_params():
    """The small parameter triple used throughout: a=1/2, b=1/3, N=8."""
    return HahnParams(Fraction(1, 2), Fraction(1, 3), 8)
