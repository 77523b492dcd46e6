"""Plane graphs as rotation systems.

The rotation at a vertex lists its edge-ends in counterclockwise order.
Edge ``e`` of the stored edge list owns darts ``2e`` (at its first endpoint)
and ``2e + 1`` (at its second), as in the 4-regular hosts.
"""

from __future__ import annotations

import networkx as nx
from attrs import field, frozen

from ...errors import HostValidationError, InvalidIndexError


def _tuple_of_tuples(values) -> tuple:
    return tuple(tuple(v) for v in values)


@frozen
class PlaneGraph:
    """Connected or disconnected plane multigraph.

    :param labels: vertex labels
    :param edges: ``(i, j)`` vertex index pairs
    :param rotation: per vertex, its darts in counterclockwise order
    :param edge_ids: external identifier of each edge, ``0..m-1`` by default
    """

    labels: tuple = field(converter=tuple)
    edges: tuple = field(converter=_tuple_of_tuples)
    rotation: tuple = field(converter=_tuple_of_tuples)
    edge_ids: tuple = field(default=None, converter=lambda ids: None if ids is None else tuple(ids))
    successor: tuple = field(init=False, repr=False, eq=False)

    def __attrs_post_init__(self):
        if self.edge_ids is None:
            object.__setattr__(self, "edge_ids", tuple(range(len(self.edges))))
        if len(self.rotation) != len(self.labels):
            raise HostValidationError("one rotation per vertex is required")
        successor = [None] * (2 * len(self.edges))
        for v, darts in enumerate(self.rotation):
            for position, dart in enumerate(darts):
                if not 0 <= dart < len(successor):
                    raise HostValidationError(f"rotation at {self.labels[v]} names an unknown edge-end")
                if self.edges[dart >> 1][dart & 1] != v:
                    raise HostValidationError(
                        f"edge-end {self.edge_ids[dart >> 1]}:{dart & 1} is not at vertex {self.labels[v]}"
                    )
                if successor[dart] is not None:
                    raise HostValidationError(f"edge-end {self.edge_ids[dart >> 1]}:{dart & 1} listed twice")
                successor[dart] = darts[(position + 1) % len(darts)]
        if any(s is None for s in successor):
            raise HostValidationError("every edge-end must appear in a rotation")
        object.__setattr__(self, "successor", tuple(successor))
        k = self.components
        v, e, f = len(self.labels), len(self.edges), self.face_count
        if v - e + f != 2 * k:
            raise HostValidationError(
                f"rotation system is not planar: v - e + f = {v - e + f}, expected {2 * k}"
            )

    @classmethod
    def from_rotations(cls, labels, edges: dict, rotations: dict) -> "PlaneGraph":
        """Build from ``{edge_id: (u, v)}`` and ``{vertex: [(edge_id, end), ...]}``
        with ``end`` 0 for ``u`` and 1 for ``v``.

        example::

            PlaneGraph.from_rotations(
                "uv", {0: ("u", "v")}, {"u": [(0, 0)], "v": [(0, 1)]}
            )
        """
        labels = tuple(labels)
        positions = {label: i for i, label in enumerate(labels)}
        edge_ids = sorted(edges)
        slot = {edge_id: k for k, edge_id in enumerate(edge_ids)}
        indexed = []
        for edge_id in edge_ids:
            u, v = edges[edge_id]
            for w in (u, v):
                if w not in positions:
                    raise InvalidIndexError(w, "vertex set")
            indexed.append((positions[u], positions[v]))
        rotation = [[] for _ in labels]
        for vertex, ends in rotations.items():
            if vertex not in positions:
                raise InvalidIndexError(vertex, "vertex set")
            for edge_id, end in ends:
                if edge_id not in slot:
                    raise InvalidIndexError(edge_id, "edge set")
                rotation[positions[vertex]].append(2 * slot[edge_id] + end)
        return cls(labels, indexed, rotation, edge_ids)

    @property
    def n(self) -> int:
        return len(self.labels)

    def dart_vertex(self, dart: int) -> int:
        return self.edges[dart >> 1][dart & 1]

    def face_successor(self, dart: int) -> int:
        """Next dart along a face boundary: cross the edge, then turn to the
        next edge-end counterclockwise."""
        return self.successor[dart ^ 1]

    def faces(self) -> list:
        """Face boundaries as lists of darts; an isolated vertex has one face
        with an empty boundary."""
        seen = set()
        found = []
        for start in range(2 * len(self.edges)):
            if start in seen:
                continue
            boundary = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                boundary.append(dart)
                dart = self.face_successor(dart)
            found.append(boundary)
        found.extend([] for darts in self.rotation if not darts)
        return found

    @property
    def face_count(self) -> int:
        return len(self.faces())

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    @property
    def components(self) -> int:
        if self.n == 0:
            return 0
        return nx.number_connected_components(self.to_networkx())

    def is_connected(self) -> bool:
        return self.components == 1


def cycle_plane(n: int) -> PlaneGraph:
    """The cycle ``C_n`` drawn in the plane; ``n = 1`` is a single loop and
    ``n = 2`` a digon."""
    labels = [str(i) for i in range(n)]
    edges = {i: (labels[i], labels[(i + 1) % n]) for i in range(n)}
    rotations = {labels[i]: [(i, 0), ((i - 1) % n, 1)] for i in range(n)}
    return PlaneGraph.from_rotations(labels, edges, rotations)


def path_plane(m: int) -> PlaneGraph:
    """A path with ``m`` edges, a tree."""
    labels = [str(i) for i in range(m + 1)]
    edges = {i: (labels[i], labels[i + 1]) for i in range(m)}
    rotations = {labels[i]: [] for i in range(m + 1)}
    for i in range(m):
        rotations[labels[i]].append((i, 0))
        rotations[labels[i + 1]].append((i, 1))
    return PlaneGraph.from_rotations(labels, edges, rotations)


def theta_plane() -> PlaneGraph:
    """Two vertices joined by three internally disjoint paths of lengths 1, 2, 2."""
    edges = {0: ("u", "v"), 1: ("u", "a"), 2: ("a", "v"), 3: ("u", "b"), 4: ("b", "v")}
    rotations = {
        "u": [(3, 0), (0, 0), (1, 0)],
        "v": [(2, 1), (0, 1), (4, 1)],
        "a": [(1, 1), (2, 0)],
        "b": [(3, 1), (4, 0)],
    }
    return PlaneGraph.from_rotations("uvab", edges, rotations)


def k4_plane() -> PlaneGraph:
    """``K_4`` drawn as a triangle ``1 2 3`` around a center ``0``."""
    edges = {0: ("0", "1"), 1: ("0", "2"), 2: ("0", "3"), 3: ("1", "2"), 4: ("2", "3"), 5: ("3", "1")}
    rotations = {
        "0": [(0, 0), (1, 0), (2, 0)],
        "1": [(3, 0), (0, 1), (5, 1)],
        "2": [(4, 0), (1, 1), (3, 1)],
        "3": [(5, 0), (2, 1), (4, 1)],
    }
    return PlaneGraph.from_rotations("0123", edges, rotations)
