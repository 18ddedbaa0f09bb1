import re

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("default")

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_outcomes: dict = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.outcome != "passed":
        if _outcomes.get(key) != "FAIL":
            _outcomes[key] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for (n, name), outcome in sorted(_outcomes.items()):
        terminalreporter.write_line(f"criterion {n:2d} {name:32} {outcome}")
