import pytest

from interlacepy.checks.plane_suite import plane_corpus
from interlacepy.core.algebra.polynomial import IntPoly1, IntPoly2
from interlacepy.core.eulerian.martin import martin
from interlacepy.core.graphs.graph import Graph
from interlacepy.core.plane.medial import face_coloring, oriented_medial
from interlacepy.core.plane.plane_graph import PlaneGraph, cycle_plane, k4_plane, path_plane, theta_plane
from interlacepy.core.plane.tutte import tutte, tutte_diagonal
from interlacepy.errors import HostValidationError, InvalidIndexError, UnsupportedInputError

K4_TUTTE = IntPoly2({(3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4, (0, 1): 2, (0, 2): 3, (0, 3): 1})


def test_tutte_of_small_graphs():
    assert tutte(Graph.complete(3).edges()) == IntPoly2({(2, 0): 1, (1, 0): 1, (0, 1): 1})
    assert tutte([("u", "u")]) == IntPoly2.monomial(0, 1)
    assert tutte([("u", "v"), ("u", "v")]) == IntPoly2({(1, 0): 1, (0, 1): 1})
    assert tutte([]) == IntPoly2.constant(1)
    assert tutte(Graph.complete(4).edges()) == K4_TUTTE


@pytest.mark.parametrize(
    "plane, dense",
    [
        (cycle_plane(1), [0, 1]),
        (cycle_plane(2), [0, 2]),
        (cycle_plane(3), [0, 2, 1]),
        (path_plane(2), [0, 0, 1]),
        (k4_plane(), [0, 4, 10, 2]),
    ],
)
def test_tutte_diagonal(plane, dense):
    assert tutte_diagonal(plane) == IntPoly1.from_dense(dense)


def test_face_counts():
    assert cycle_plane(3).face_count == 2
    assert k4_plane().face_count == 4
    assert theta_plane().face_count == 3
    assert path_plane(0).face_count == 1


def test_non_planar_rotation_is_rejected():
    edges = {0: ("u", "u"), 1: ("u", "u")}
    with pytest.raises(HostValidationError):
        PlaneGraph.from_rotations("u", edges, {"u": [(0, 0), (1, 0), (0, 1), (1, 1)]})


def test_rotation_errors():
    edges = {0: ("u", "v")}
    with pytest.raises(InvalidIndexError):
        PlaneGraph.from_rotations("uv", edges, {"w": [(0, 0)]})
    with pytest.raises(HostValidationError):
        PlaneGraph.from_rotations("uv", edges, {"u": [(0, 1)], "v": [(0, 0)]})
    with pytest.raises(HostValidationError):
        PlaneGraph.from_rotations("uv", edges, {"u": [(0, 0)], "v": []})


def test_face_coloring_of_triangle():
    coloring = face_coloring(cycle_plane(3))
    assert {node: color for node, color in coloring.items() if node[0] == "vertex"} == {
        ("vertex", 0): 0,
        ("vertex", 1): 0,
        ("vertex", 2): 0,
    }
    assert sorted(color for (kind, _f), color in coloring.items() if kind == "face") == [1, 1]


def test_face_coloring_separates_every_corner():
    plane = k4_plane()
    coloring = face_coloring(plane)
    assert sorted(coloring.values()) == [0, 0, 0, 0, 1, 1, 1, 1]
    face_of = {dart: f for f, boundary in enumerate(plane.faces()) for dart in boundary}
    for v, darts in enumerate(plane.rotation):
        for dart in darts:
            assert coloring[("vertex", v)] != coloring[("face", face_of[plane.successor[dart]])]



def test_medial_of_edgeless_plane():
    with pytest.raises(UnsupportedInputError):
        oriented_medial(path_plane(0))


def test_medial_of_single_loop():
    medial = oriented_medial(cycle_plane(1))
    assert medial.n == 1
    assert martin(medial) == IntPoly1.monomial(1)


@pytest.mark.parametrize("name, plane", sorted(plane_corpus(7).items()))
def test_medial_martin_is_tutte_diagonal(name, plane):
    medial = oriented_medial(plane)
    assert medial.n == len(plane.edges)
    assert medial.is_connected()
    assert martin(medial) == tutte_diagonal(plane)
