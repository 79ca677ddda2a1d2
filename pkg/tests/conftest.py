import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_ac" in report.nodeid:
        name = report.nodeid.rsplit("::", 1)[1]
        _acceptance.append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        label = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{label}  {name}")
