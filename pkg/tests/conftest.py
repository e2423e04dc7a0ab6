from __future__ import annotations

import pytest

from semiring_lab import catalog, enumeration

# criterion number -> [description, passed so far]
_CRITERIA: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion exercised by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or not (rep.when == "call" or rep.failed):
        return
    n, text = marker.args
    entry = _CRITERIA.setdefault(n, [text, True])
    if rep.failed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for n in sorted(_CRITERIA):
        text, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}")


@pytest.fixture(scope="session")
def enumerated():
    return enumeration.corpus(4)


@pytest.fixture(scope="session")
def cat():
    return {S.name: S for S in catalog.load_catalog()}


@pytest.fixture(scope="session")
def corpus(enumerated, cat):
    return list(enumerated) + list(cat.values())


@pytest.fixture(scope="session")
def semidomains(corpus):
    from semiring_lab.core import is_semidomain

    return [S for S in corpus if is_semidomain(S).holds]
