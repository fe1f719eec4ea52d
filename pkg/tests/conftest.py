import pytest

_RESULTS = {}


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    rep = yield
    if rep.when == "call":
        item.call_passed = rep.passed
    return rep


@pytest.fixture
def criterion(request):
    """Record a one-line verdict for an acceptance criterion.

    Call ``criterion(number, summary)`` at the start of the test; the line
    reads PASS only if the test body passed.
    """
    started = []

    def record(number, summary):
        started.append(number)
        _RESULTS[number] = summary

    yield record
    ok = getattr(request.node, "call_passed", False)
    for n in started:
        _RESULTS[n] = ("PASS" if ok else "FAIL", _RESULTS[n])


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        status, summary = _RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {status} - {summary}")
