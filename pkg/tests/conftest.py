import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rpartition("::")[2]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.failed:
        _criteria.setdefault(name, report.outcome)
        if report.failed:
            _criteria[name] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        num, _, label = name.removeprefix("test_criterion_").partition("_")
        status = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {int(num):2d} {label.replace('_', ' ')}: {status}")
