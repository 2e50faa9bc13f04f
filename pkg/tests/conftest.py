import random
from fractions import Fraction

import pytest


def random_rational(rng: random.Random, height: int = 50, nonzero: bool = True) -> Fraction:
    while True:
        q = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if q or not nonzero:
            return q


@pytest.fixture
def rng():
    return random.Random(20261016)


ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        ACCEPTANCE_RESULTS[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for name, outcome in ACCEPTANCE_RESULTS.items():
            terminalreporter.write_line(f"{outcome}  {name}")
