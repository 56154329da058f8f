import pytest
from hypothesis import settings

settings.register_profile("repo", derandomize=True, deadline=None)
settings.load_profile("repo")

_acceptance = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    failed = report.failed
    if report.when == "call" or failed:
        _acceptance.append((marker.args[0], marker.args[1], "FAIL" if failed else "PASS", report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, duration in sorted(_acceptance):
        terminalreporter.write_line(f"criterion {number:>2} {status}  {title} ({duration:.1f}s)")
