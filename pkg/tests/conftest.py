import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from skewspec.graph import OrientedGraph, UndirectedGraph

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=80,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or not (rep.when == "call" or rep.failed):
        return
    number, title = mark.args
    _, ok = CRITERIA.get(number, (title, True))
    CRITERIA[number] = (title, ok and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, ok = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")


@st.composite
def undirected_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return UndirectedGraph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def oriented_graphs(draw, min_n=1, max_n=8):
    G = draw(undirected_graphs(min_n, max_n))
    flips = draw(st.lists(st.booleans(), min_size=G.m, max_size=G.m))
    return OrientedGraph(G.n, [(v, u) if f else (u, v) for (u, v), f in zip(G.edges, flips)])


@st.composite
def vertex_subsets(draw, n, nonempty=False):
    return frozenset(draw(st.sets(st.integers(0, n - 1), min_size=1 if nonempty else 0)))
