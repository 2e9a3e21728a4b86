from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_RESULTS: dict = {}
_TITLES: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    crit = mark.args[0]
    _TITLES[crit] = mark.args[1] if len(mark.args) > 1 else ""
    if rep.when == "call" or rep.failed:
        ok = rep.passed and _RESULTS.get(crit, "PASS") == "PASS"
        _RESULTS[crit] = "PASS" if ok else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_RESULTS):
        terminalreporter.write_line(f"criterion {crit} ({_TITLES[crit]}): {_RESULTS[crit]}")
