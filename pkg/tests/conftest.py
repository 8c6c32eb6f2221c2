import pytest

_ACCEPTANCE: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if item.get_closest_marker("acceptance") is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        doc = (item.function.__doc__ or "").strip().splitlines()[0] if item.function.__doc__ else ""
        _ACCEPTANCE[item.name] = ("PASS" if rep.passed else "FAIL", doc)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda n: int(n.rsplit("_", 1)[-1])):
        verdict, doc = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{verdict}  criterion {name.rsplit('_', 1)[-1]}: {doc}")
