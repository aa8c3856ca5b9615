import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import REPORTS  # noqa: E402

_criteria: dict[int, dict] = {}


def pytest_collection_modifyitems(config, items):
    if os.environ.get("POLYFACE_LONG"):
        return
    skip = pytest.mark.skip(reason="set POLYFACE_LONG=1 for the long-running modes")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "ran": False})
    if call.when == "call" or call.excinfo is not None:
        entry["ran"] = entry["ran"] or call.when == "call"
        if call.excinfo is not None and not call.excinfo.errisinstance(pytest.skip.Exception):
            entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["ok"] and entry["ran"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {entry['title']}")
    for line in REPORTS:
        terminalreporter.write_line(line)
