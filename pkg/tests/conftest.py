import random
import sys

import pytest
from hypothesis import strategies as st

from riskgraph import kernels
from riskgraph.graph import Graph, build_graph


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    previous = kernels.BACKEND
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


def named(labels, edges):
    return build_graph(list(labels), [tuple(e) for e in edges])


@pytest.fixture
def triangle():
    return named("abc", ["ab", "bc", "ac"])


@pytest.fixture
def path3():
    return named("abc", ["ab", "bc"])


@pytest.fixture
def cycle4():
    return named("abcd", ["ab", "bc", "cd", "da"])


@pytest.fixture
def k4():
    return named("abcd", ["ab", "ac", "ad", "bc", "bd", "cd"])


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph([f"v{i}" for i in range(n)], chosen)


def rng(seed):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        name, passed, detail = results[num]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {num}. {name}: {detail}")
