"""4-regular multigraphs and two-in two-out digraphs in the dart model.

Edge ``e = (u, v)`` owns two darts: ``2e`` at ``u`` and ``2e + 1`` at ``v``,
so the dart involution is ``d ^ 1``. For a digraph ``u`` is the tail, which
makes even darts out-darts and odd darts in-darts. Loops and parallel edges
need no special case.
"""

from __future__ import annotations

from typing import ClassVar

import networkx as nx
from attrs import field, frozen

from ...errors import HostValidationError, InvalidIndexError

# pairings of the sorted darts d0 < d1 < d2 < d3 at a vertex
PAIRING_PATTERNS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def mate(dart: int) -> int:
    return dart ^ 1


@frozen
class FourRegularGraph:
    """Undirected 4-regular multigraph.

    :param labels: vertex labels
    :param edges: ``(i, j)`` vertex index pairs; repetition is a multi-edge
        and ``(i, i)`` a loop
    """

    labels: tuple = field(converter=tuple)
    edges: tuple = field(converter=lambda es: tuple(tuple(e) for e in es))
    vertex_darts: tuple = field(init=False, repr=False, eq=False)

    directed: ClassVar[bool] = False

    def __attrs_post_init__(self):
        n = len(self.labels)
        darts = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise HostValidationError(f"edge {e} has an endpoint outside the vertex set")
            darts[u].append(2 * e)
            darts[v].append(2 * e + 1)
        object.__setattr__(self, "vertex_darts", tuple(tuple(sorted(d)) for d in darts))
        self._validate()

    def _validate(self):
        """Every vertex carries four darts; a loop gives two of them."""
        for v, at_v in enumerate(self.vertex_darts):
            if len(at_v) != 4:
                raise HostValidationError(
                    f"vertex {self.labels[v]} has degree {len(at_v)}, expected 4"
                )

    @classmethod
    def from_edges(cls, labels, edges):
        """Build from label pairs, e.g. ``[("a", "a"), ("a", "a")]`` for one
        vertex with two loops."""
        labels = tuple(labels)
        positions = {label: i for i, label in enumerate(labels)}
        indexed = []
        for u, v in edges:
            for w in (u, v):
                if w not in positions:
                    raise InvalidIndexError(w, "vertex set")
            indexed.append((positions[u], positions[v]))
        return cls(labels, indexed)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def dart_count(self) -> int:
        return 2 * len(self.edges)

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidIndexError(label, "vertex set") from None

    def dart_vertex(self, dart: int) -> int:
        return self.edges[dart >> 1][dart & 1]

    def pairing(self, v: int, choice: int) -> tuple:
        """The ``choice``-th pairing of the darts at vertex index ``v``."""
        darts = self.vertex_darts[v]
        return tuple((darts[i], darts[j]) for i, j in PAIRING_PATTERNS[choice])

    def is_consistent(self, pair) -> bool:
        """Whether a transition pairs an in-dart with an out-dart."""
        d, e = pair
        return (d & 1) != (e & 1)

    def allowed_pairings(self, v: int) -> tuple:
        """Pairing indices admissible at ``v``: all three for undirected hosts,
        the two orientation-consistent ones for digraphs."""
        return (0, 1, 2)

    def to_networkx(self):
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    @property
    def components(self) -> int:
        """``k(G)``."""
        if self.n == 0:
            return 0
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return nx.number_connected_components(graph)

    def is_connected(self) -> bool:
        return self.components == 1

    def as_undirected(self) -> "FourRegularGraph":
        return FourRegularGraph(self.labels, self.edges)


@frozen
class TwoInTwoOutDigraph(FourRegularGraph):
    """4-regular host whose arcs ``(tail, head)`` give every vertex indegree
    two and outdegree two."""

    directed: ClassVar[bool] = True

    def _validate(self):
        super()._validate()
        out_degree = [0] * self.n
        for u, _v in self.edges:
            out_degree[u] += 1
        for v, degree in enumerate(out_degree):
            if degree != 2:
                raise HostValidationError(
                    f"vertex {self.labels[v]} has outdegree {degree}, expected 2"
                )

    def allowed_pairings(self, v: int) -> tuple:
        return tuple(
            choice
            for choice in range(3)
            if all(self.is_consistent(pair) for pair in self.pairing(v, choice))
        )

    def to_networkx(self):
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph
