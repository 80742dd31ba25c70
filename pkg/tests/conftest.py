import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from strongcolor.generators import random_cubic_girth
from strongcolor.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


@st.composite
def small_graphs(draw, max_n=8, max_degree=None):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if max_degree is not None:
        deg = [0] * n
        kept = []
        for u, v in chosen:
            if deg[u] < max_degree and deg[v] < max_degree:
                kept.append((u, v))
                deg[u] += 1
                deg[v] += 1
        chosen = kept
    return Graph.from_edges(n, chosen)


def girth6_cubic_hosts(count, seed=0, sizes=(14, 16, 18, 20, 22, 24)):
    """Random connected cubic graphs of girth >= 6."""
    rng = random.Random(seed)
    return [random_cubic_girth(rng.choice(sizes), 6, seed=rng.getrandbits(63)) for _ in range(count)]


@pytest.fixture(scope="session")
def girth6_hosts():
    return girth6_cubic_hosts(4, seed=11)


# lines printed by the acceptance module, repeated in the terminal summary
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
