import pytest
from hypothesis import given, settings

from interlacepy.core.graphs.graph import Graph
from interlacepy.core.interlace.oracles import counting_oracles, even_subgraphs, odd_matching_subgraphs
from interlacepy.errors import ResourceLimitError

from .strategies import graphs


def test_k2_counts(k2):
    report = counting_oracles(k2, "K2")
    assert report.odd_matchings == 2
    assert report.q_values[1] == 2
    assert report.Q_values[3] == 9
    assert report.passed


def test_even_subgraphs_of_triangle(k3):
    assert even_subgraphs(k3) == 5
    assert odd_matching_subgraphs(k3) == 4


def test_looped_graph_skips_simple_identities():
    graph = Graph.from_edges("ab", [("a", "b"), ("a", "a")])
    report = counting_oracles(graph, "looped")
    assert "q(0) = 0" not in report.checks
    assert "Q(3) = 3^n" not in report.checks
    assert report.checks["q(2) = 2^n"]


def test_global_values_skipped_beyond_cap(p3):
    report = counting_oracles(p3, global_max_n=2)
    assert report.Q_values == {}
    assert report.passed


def test_oracle_cap():
    with pytest.raises(ResourceLimitError) as excinfo:
        counting_oracles(Graph.empty(4), max_n=3)
    assert excinfo.value.cap_name == "oracle_max_n"


@settings(max_examples=30)
@given(graphs(max_n=5))
def test_evaluations_hold_on_simple_graphs(graph):
    report = counting_oracles(graph)
    assert report.passed, report.checks
