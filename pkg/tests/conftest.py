import re

import pytest

from _cache import graph_for

_criteria = {}


@pytest.fixture(scope="session")
def g32():
    return graph_for(2, 3)


@pytest.fixture(scope="session")
def g22():
    return graph_for(2, 2)


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        _criteria[key] = (status, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), (status, dur) in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {num:>2} {name:<28} {status}  ({dur:.1f} s)")
