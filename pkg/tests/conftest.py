import pytest

from cablefloer.cables import classify
from cablefloer.knots import TREFOIL, UNKNOT

_ACCEPTANCE = {}


def make_links():
    return {
        "T22": classify(UNKNOT, 2, 1, 1),
        "T33": classify(UNKNOT, 3, 1, 1),
        "T46": classify(UNKNOT, 2, 2, 3),
        "C46": classify(TREFOIL, 2, 2, 3),
        "T69": classify(UNKNOT, 3, 2, 3),
        "B22": classify(TREFOIL, 2, 1, 1),
    }


@pytest.fixture(scope="session")
def links():
    return make_links()


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _ACCEPTANCE[name] = report.outcome
    elif report.when == "setup" and report.outcome != "passed" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        status = "PASS" if _ACCEPTANCE[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
