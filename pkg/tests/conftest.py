from __future__ import annotations

from collections import defaultdict

import pytest

from sumdex.extremal import enumerate_graphs

CRITERIA = {
    1: "catalog exactness",
    2: "construction validation",
    3: "extremal table n<=6",
    4: "group verification",
    5: "property suites",
}

_outcomes: dict[int, list[tuple[str, str]]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): test belongs to acceptance criterion k")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes[crit].append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k, name in CRITERIA.items():
        runs = _outcomes.get(k)
        if not runs:
            tr.write_line(f"criterion {k} ({name}): NOT RUN")
            continue
        failed = [nid for nid, outcome in runs if outcome != "passed"]
        status = "PASS" if not failed else "FAIL"
        tr.write_line(f"criterion {k} ({name}): {status} ({len(runs) - len(failed)}/{len(runs)} tests)")
        for nid in failed:
            tr.write_line(f"    failed: {nid}")
    tr.write_line(
        "criterion 6 (asymptotic claims): out of scope at desk scale; covered only by the "
        "property suites and small tables above"
    )


@pytest.fixture(scope="session")
def graphs_upto6():
    return [g for n in range(1, 7) for g in enumerate_graphs(n)]
