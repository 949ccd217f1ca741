import pytest

_results: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    name = item.name
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        doc = (item.function.__doc__ or "").strip().splitlines()
        _results[name] = ("PASS" if report.passed else "FAIL", doc[0] if doc else "")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_results):
        status, doc = _results[name]
        terminalreporter.write_line(f"criterion {name.split('_')[2]}: {status}  {doc}")
