"""Oriented medial graph of a plane graph."""

from __future__ import annotations

from ...errors import UnsupportedInputError
from ..eulerian.hosts import TwoInTwoOutDigraph
from .plane_graph import PlaneGraph


def face_coloring(plane: PlaneGraph) -> dict:
    """Two-color the faces of the medial graph.

    The medial faces are the vertices of ``plane`` and the faces of ``plane``;
    each medial edge, one per corner, separates the vertex at the corner from
    the face containing it, so vertices are black (0) and faces white (1).

    :return: ``{("vertex", v) | ("face", f): color}``
    """
    coloring = {("vertex", v): 0 for v in range(len(plane.rotation))}
    coloring.update({("face", f): 1 for f in range(len(plane.faces()))})
    return coloring


def oriented_medial(plane: PlaneGraph) -> TwoInTwoOutDigraph:
    """One medial vertex per edge; the corner between consecutive edge-ends
    ``d`` and ``next(d)`` at a vertex becomes the arc
    ``edge(d) -> edge(next(d))``, counterclockwise around the black faces
    of :func:`face_coloring`.
    """
    if not plane.edges:
        raise UnsupportedInputError("the medial graph needs at least one edge")
    arcs = []
    for darts in plane.rotation:
        for dart in darts:
            arcs.append((dart >> 1, plane.successor[dart] >> 1))
    labels = tuple(str(edge_id) for edge_id in plane.edge_ids)
    return TwoInTwoOutDigraph(labels, arcs)
