import random

import pytest
from hypothesis import strategies as st

from _oracles import random_connected_edges
from omdim.graph import build_graph


@pytest.fixture
def rng():
    return random.Random(20240611)


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.sampled_from([0.1, 0.3, 0.5, 0.8]))
    edges = random_connected_edges(random.Random(seed), n, p)
    return build_graph(n, edges)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
