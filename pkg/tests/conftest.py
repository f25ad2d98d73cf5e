import pytest

from siegeldim import contributions

_criteria: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(id, text): acceptance criterion covered by the test"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    cid, text = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        prev = _criteria.get(cid, (text, "PASS"))[1]
        status = "PASS" if rep.outcome == "passed" and prev == "PASS" else "FAIL"
        _criteria[cid] = (text, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_criteria, key=lambda c: int(c.split(".")[0])):
        text, status = _criteria[cid]
        terminalreporter.write_line(f"[{status}] criterion {cid}: {text}")


@pytest.fixture
def patched(monkeypatch):
    """monkeypatch for contributions helpers, with the level cache reset."""
    contributions.clear_cache()
    yield monkeypatch
    monkeypatch.undo()
    contributions.clear_cache()
