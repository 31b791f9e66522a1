import pytest

_ACCEPTANCE: dict[str, list[tuple[str, bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _ACCEPTANCE.setdefault(marker.args[0], []).append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, runs in sorted(_ACCEPTANCE.items(), key=lambda kv: int(kv[0].split()[0])):
        ok = all(passed for _, passed in runs)
        failed = [name for name, passed in runs if not passed]
        extra = f"  (failed: {', '.join(failed)})" if failed else ""
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {label}{extra}")
