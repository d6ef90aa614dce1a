import pytest

_outcomes: dict[str, str] = {}
_notes: dict[str, list[str]] = {}


def criterion(label: str):
    """Mark an acceptance test; its outcome is listed in the terminal summary."""
    def mark(fn):
        fn.criterion = label
        return fn
    return mark


@pytest.fixture
def note(request):
    label = request.function.criterion
    return lambda text: _notes.setdefault(label, []).append(text)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    label = getattr(getattr(item, "function", None), "criterion", None)
    if label is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes[label] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_outcomes, key=lambda s: int(s.split(".")[0])):
        line = f"{_outcomes[label]}  {label}"
        if label in _notes:
            line += "  [" + "; ".join(_notes[label]) + "]"
        terminalreporter.write_line(line)
