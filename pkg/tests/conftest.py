from itertools import combinations

import pytest
from hypothesis import strategies as st

from graphcores.graph import Graph


def complete(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def k4_pendant():
    """K4 on 0..3 with vertex 4 hanging off vertex 3."""
    return Graph.from_edges(5, list(combinations(range(4), 2)) + [(3, 4)])


def diamond():
    """Two triangles {0,1,2} and {0,1,3} sharing edge (0, 1)."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    slots = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    return Graph.from_edges(n, [e for e, keep in zip(slots, mask) if keep])


@pytest.fixture
def k5():
    return complete(5)


@pytest.fixture
def c6():
    return cycle(6)


# -- acceptance summary ----------------------------------------------------

_criteria: list[tuple[int, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[rep.outcome]
        _criteria.append((marker.args[0], marker.args[1], status))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status in sorted(_criteria):
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
