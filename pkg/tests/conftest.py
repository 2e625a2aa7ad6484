import pytest
from hypothesis import settings

from reflectica.alphabet import CORE, PLUS

settings.register_profile("default", deadline=None)
settings.load_profile("default")

PLUS_TABLE = CORE.extended(PLUS)

_criteria: dict[int, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (rep.when != "call" and not rep.failed):
        return
    n, title = marker.args
    if _criteria.get(n, ("PASS",))[0] == "PASS":
        _criteria[n] = ("PASS" if rep.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        status, title = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {title}")


@pytest.fixture(scope="session")
def plus_table():
    return PLUS_TABLE
