import pytest

CRITERIA = {
    1: "Table 1 reproduction",
    2: "Table 2 reproduction",
    3: "Table 3 reproduction",
    4: "Table 4 reproduction",
    5: "strict bracketing sweep",
    6: "identity residuals",
    7: "interlacing suite",
    8: "bound/identity coherence",
    9: "Markov monotonicity",
}

_outcomes = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    crit = marker.args[0]
    if report.when == "call" or report.failed:
        _outcomes[crit] = _outcomes.get(crit, True) and report.passed


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for crit, title in CRITERIA.items():
        if crit in _outcomes:
            status = "PASS" if _outcomes[crit] else "FAIL"
            terminalreporter.write_line(f"criterion {crit} ({title}): {status}")
