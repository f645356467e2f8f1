import re

_OUTCOMES = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: one test per acceptance criterion")


def pytest_runtest_logreport(report):
    m = re.search(r"test_criterion_(\d+)_", report.nodeid)
    if m and (report.when == "call" or report.outcome != "passed"):
        _OUTCOMES[int(m.group(1))] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    from . import test_acceptance as acc

    terminalreporter.section("acceptance criteria")
    for n in sorted(_OUTCOMES):
        ok, detail = acc.RESULTS.get(n, (False, "did not complete"))
        status = "PASS" if ok and _OUTCOMES[n] == "passed" else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {n:2d} {status}  {detail}")
