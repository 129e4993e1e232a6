import time

import pytest
from hypothesis import settings

from qcgen.field import build_field

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")

_criteria: list[tuple[str, str, float]] = []


@pytest.fixture(params=[(2, 1), (3, 1), (2, 2), (5, 1)], ids=["GF2", "GF3", "GF4", "GF5"])
def small_field(request):
    return build_field(*request.param)


@pytest.fixture
def gf2():
    return build_field(2)


@pytest.fixture
def gf3():
    return build_field(3)


@pytest.fixture
def gf4():
    return build_field(2, 2)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    start = time.perf_counter()
    yield
    item._elapsed = time.perf_counter() - start


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        name = report.nodeid.split("::")[-1].removeprefix("test_")
        _criteria.append((name, "PASS" if report.passed else "FAIL", report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict, duration in _criteria:
        terminalreporter.write_line(f"{verdict}  {name}  ({duration:.2f}s)")
