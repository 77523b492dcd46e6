import pytest

from interlacepy.core.algebra.polynomial import IntPoly1
from interlacepy.core.delta.set_system import SetSystem
from interlacepy.core.eulerian.hosts import FourRegularGraph, TwoInTwoOutDigraph
from interlacepy.core.graphs.graph import Graph
from interlacepy.core.plane.tutte import tutte_diagonal
from interlacepy.core.tools.formats import parse_file, parse_text
from interlacepy.errors import FormatParseError, HostValidationError

TRIANGLE = """
# a triangle drawn in the plane
plane 3
e 0 0 1
e 1 1 2
e 2 2 0
rot 0 0:0 2:1
rot 1 1:0 0:1
rot 2 2:0 1:1
"""


def test_graph():
    kind, graph = parse_text("# K2\ngraph 2\ne 0 1\n")
    assert kind == "graph"
    assert graph == Graph.complete(2)


def test_graph_with_loop_and_comment():
    _kind, graph = parse_text("graph 2   # header\ne 0 1\ne 1 1  # loop\n")
    assert graph.looped_vertices() == ("1",)


def test_hosts():
    kind, host = parse_text("digraph4 1\na 0 0\na 0 0\n")
    assert kind == "digraph4"
    assert host == TwoInTwoOutDigraph.from_edges("0", [("0", "0"), ("0", "0")])
    kind, host = parse_text("graph4 1\ne 0 0\ne 0 0\n")
    assert kind == "graph4"
    assert type(host) is FourRegularGraph
    assert not host.directed


def test_plane():
    kind, plane = parse_text(TRIANGLE)
    assert kind == "plane"
    assert plane.face_count == 2
    assert tutte_diagonal(plane) == IntPoly1.from_dense([0, 2, 1])


def test_setsystem():
    kind, system = parse_text("setsystem 3\nf 0 1 2\nf\n")
    assert kind == "setsystem"
    assert system == SetSystem.from_sets("012", [["0", "1", "2"], []])


@pytest.mark.parametrize(
    "text, line_number",
    [
        ("graff 2\n", 1),
        ("# comment\n\ngraph 2\ne 0 5\n", 4),
        ("graph 2\na 0 1\n", 2),
        ("graph 2\ne 0 1\ne 0\n", 3),
        ("setsystem 2\nf 0 0\n", 2),
        ("setsystem 2\nf 0 2\n", 2),
        ("plane 2\ne 0 0 1\nrot 0 1:0\n", 3),
        ("plane 2\ne 0 0 1\ne 0 0 1\n", 3),
        ("plane 2\ne 0 0 1\nrot 0 0:0\nrot 0 0:0\n", 4),
        ("digraph4 1\ne 0 0\ne 0 0\n", 2),
    ],
)
def test_parse_errors_name_the_line(text, line_number):
    with pytest.raises(FormatParseError) as excinfo:
        parse_text(text)
    assert excinfo.value.line_number == line_number
    assert str(excinfo.value).startswith(f"line {line_number}:")


def test_empty_input():
    with pytest.raises(FormatParseError):
        parse_text("# nothing here\n\n")


def test_expected_kind():
    with pytest.raises(FormatParseError) as excinfo:
        parse_text("graph 2\ne 0 1\n", ("digraph4", "graph4"))
    assert "expected digraph4 or graph4 input" in str(excinfo.value)
    assert parse_text("graph 2\n", "graph")[0] == "graph"


def test_invalid_objects_are_not_parse_errors():
    with pytest.raises(HostValidationError):
        parse_text("graph4 1\ne 0 0\n")


def test_parse_file(tmp_path):
    path = tmp_path / "k3.txt"
    path.write_text("graph 3\ne 0 1\ne 1 2\ne 0 2\n", encoding="utf-8")
    assert parse_file(str(path)) == ("graph", Graph.complete(3))
