"""Collects acceptance-criterion outcomes and prints one PASS/FAIL line per criterion."""

from __future__ import annotations

import pytest

CRITERIA = {
    1: "recognize accepts exactly the census sequences, n = 3..9",
    2: "realize round trip with ear witness, every census sequence and ell >= 3",
    3: "10,000 seeded random 2-trees are all accepted",
    4: "boundary rejections via (d) and (e), <2,2,2,4,4> accepted",
    5: "flat-family realize at n ~ 1e5 and 1e6 under 5 s, ratio <= 15x",
    6: "realize_tree exhaustive for n <= 8 against brute-force trees",
    7: "every intermediate reduced sequence stays in the class",
    8: "k-tree screening: k=2 and lifted k=3 pass, project(lift(D)) == D",
}

_outcomes: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion exercised by the test")
    config.addinivalue_line("markers", "benchmark: wall-clock measurement")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or report.outcome != "passed":
        for n in marker.args:
            _outcomes.setdefault(n, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, text in CRITERIA.items():
        results = _outcomes.get(n)
        if not results:
            status = "NOT RUN"
        elif all(r == "passed" for r in results):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status:7s} {text}")
