"""Shared fixtures and the acceptance-criterion summary hook.

Tests marked with @pytest.mark.acceptance(n, description) are aggregated
at the end of the run into one PASS/FAIL line per criterion number.  A
criterion passes only if every test carrying its number passed.
"""

import os
import time

import pytest

from pgqcheck import load_case, run_case

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "..", "fixtures")

_ACCEPTANCE = {}

# wall-clock seconds of each full case run, keyed by group slug
RUN_TIMES = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(num, description): part of a numbered acceptance criterion",
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    num = marker.args[0]
    desc = marker.args[1] if len(marker.args) > 1 else ""
    entry = _ACCEPTANCE.setdefault(num, {"desc": desc, "passed": True})
    if desc and not entry["desc"]:
        entry["desc"] = desc
    if report.failed or (report.when == "call" and report.skipped):
        entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        entry = _ACCEPTANCE[num]
        status = "PASS" if entry["passed"] else "FAIL"
        terminalreporter.write_line(
            "ACCEPTANCE criterion %d: %s - %s" % (num, status, entry["desc"])
        )


def fixture_path(name):
    return os.path.join(FIXTURE_DIR, name)


@pytest.fixture(scope="session")
def co3_case():
    return load_case(fixture_path("co3.case"))


@pytest.fixture(scope="session")
def co2_case():
    return load_case(fixture_path("co2.case"))


@pytest.fixture(scope="session")
def co1_case():
    return load_case(fixture_path("co1.case"))


def _timed_run(slug, case):
    start = time.perf_counter()
    report = run_case(case)
    RUN_TIMES[slug] = time.perf_counter() - start
    return report


@pytest.fixture(scope="session")
def co3_report(co3_case):
    return _timed_run("co3", co3_case)


@pytest.fixture(scope="session")
def co2_report(co2_case):
    return _timed_run("co2", co2_case)


@pytest.fixture(scope="session")
def co1_report(co1_case):
    return _timed_run("co1", co1_case)
