import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", max_examples=30, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): part of an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when != "call" and not (rep.when == "setup" and not rep.passed):
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "parts": []})
    if hasattr(rep, "wasxfail"):
        status = "xfail"
    else:
        status = rep.outcome
    notes = [str(v) for k, v in item.user_properties if k == "summary"]
    entry["parts"].append((item.name, status, notes, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        parts = entry["parts"]
        ok = all(status == "passed" for _, status, _, _ in parts)
        secs = sum(d for *_, d in parts)
        tr.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {entry['title']}  ({secs:.1f}s)")
        for name, status, notes, _ in parts:
            if status != "passed" or notes:
                detail = "; ".join(notes)
                tr.write_line(f"    {name}: {status}{'  ' + detail if detail else ''}")
