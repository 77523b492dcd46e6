import pytest

from interlacepy.core.delta.set_system import SetSystem, adjacency_delta_matroid
from interlacepy.core.eulerian.hosts import TwoInTwoOutDigraph
from interlacepy.core.graphs.graph import Graph
from interlacepy.core.tools.config_file_parser import DEFAULT_CONFIG

EXAMPLE_SETS = ["abc", "ab", "ac", "bc", "b", "c", ""]


@pytest.fixture(scope="module")
def k2():
    return Graph.complete(2)


@pytest.fixture(scope="module")
def p3():
    return Graph.path(3)


@pytest.fixture(scope="module")
def k3():
    return Graph.complete(3)


@pytest.fixture(scope="module")
def two_loops():
    """One vertex with two directed loops."""
    return TwoInTwoOutDigraph.from_edges("a", [("a", "a"), ("a", "a")])


@pytest.fixture(scope="module")
def interlaced_host():
    """The digraph traced by the word ``a b a b``."""
    return TwoInTwoOutDigraph.from_edges("ab", [("a", "b"), ("b", "a"), ("a", "b"), ("b", "a")])


@pytest.fixture(scope="module")
def example_system():
    return SetSystem.from_sets("abc", EXAMPLE_SETS)


@pytest.fixture(scope="module")
def m_k2():
    return adjacency_delta_matroid(Graph.complete(2))


@pytest.fixture()
def caps():
    return dict(DEFAULT_CONFIG["caps"])
