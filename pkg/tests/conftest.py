import pytest

from pregroup import (
    amalgam_pregroup,
    group_cyclic,
    group_s3,
    monomorphism,
    new_table,
)


@pytest.fixture(scope="session")
def z4():
    return group_cyclic(4)


@pytest.fixture(scope="session")
def z6():
    return group_cyclic(6)


@pytest.fixture(scope="session")
def z2():
    return group_cyclic(2)


@pytest.fixture(scope="session")
def s3():
    return group_s3()


@pytest.fixture(scope="session")
def span(z4, z6, z2):
    """A=Z4, B=Z6 glued along Z2 via 1 -> 2 and 1 -> 3."""
    return z4, z6, monomorphism(z2, z4, {"1": "2"}), monomorphism(z2, z6, {"1": "3"})


@pytest.fixture(scope="session")
def p8(span):
    return amalgam_pregroup(*span)


@pytest.fixture(scope="session")
def trivial():
    return new_table(["e"], "e", {"e": "e"}, [("e", "e", "e")])


# -- acceptance summary: one line per criterion ---------------------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number and summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n, text = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _CRITERIA[n] = ("PASS" if rep.passed else "FAIL", text)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        status, text = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {text}")
