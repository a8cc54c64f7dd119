import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from sympow.corpus import bad_hypergraph, complete_multipartite, cycle_graph, triangle  # noqa: E402

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture
def B():
    return bad_hypergraph()


@pytest.fixture
def tri():
    return triangle()


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def k222():
    return complete_multipartite([2, 2, 2])


@pytest.fixture
def fixtures_dir():
    return FIXTURES


_criteria: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    label = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        _criteria[label] = "PASS" if rep.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(f"{_criteria[label]}  criterion {label}")
