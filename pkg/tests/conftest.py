import random

import pytest
from hypothesis import strategies as st

from hamrel.graph import make_graph


def random_multigraph(rng: random.Random, n_max: int = 7, m_max: int = 16, connected=True):
    n = rng.randint(2, n_max)
    m = rng.randint(n - 1 if connected else 0, max(m_max, n - 1))
    edges = [(rng.randrange(i), i) for i in range(1, n)] if connected else []
    while len(edges) < m:
        edges.append(tuple(rng.sample(range(n), 2)))
    return make_graph(n, edges)


def random_simple(rng: random.Random, n: int, p: float):
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def multigraphs(draw, n_max=7, m_max=14):
    n = draw(st.integers(2, n_max))
    tree = [(draw(st.integers(0, i - 1)), i) for i in range(1, n)]
    extra = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
            max_size=max(0, m_max - len(tree)),
        )
    )
    return make_graph(n, tree + extra)


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
