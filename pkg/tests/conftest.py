import random

import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(20261015)


ACCEPTANCE_LINES: list[str] = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    label = report.nodeid.split("::", 1)[1]
    status = "PASS" if report.passed else "FAIL"
    ACCEPTANCE_LINES.append(f"{status}  {label}  ({report.duration:.2f}s)")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
