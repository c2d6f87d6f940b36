from math import gcd
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"


def trial_division_is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def order_by_successive_powers(b, q):
    e, v = 1, b % q
    while v != 1:
        v = v * b % q
        e += 1
    return e


def gcd_scan_units(n):
    return [a for a in range(1, n) if gcd(a, n) == 1]


SMALL_PRIMES = [n for n in range(3, 201) if trial_division_is_prime(n)]
SWEEP_BASES = (2, 3, 5, 6, 7, 10, 11)
SWEEP = [(b, q) for q in SMALL_PRIMES for b in SWEEP_BASES if b % q]


@pytest.fixture
def golden():
    return GOLDEN


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[marker.args[0]] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        outcome, duration = _ACCEPTANCE[label]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}  ({duration:.2f} s)")
