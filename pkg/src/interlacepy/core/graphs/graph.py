"""Looped simple graphs and the operations of the interlace recursions.

Vertices are opaque string labels kept in a fixed order; internally vertex
``i`` is bit ``i`` and the neighborhood of each vertex is a bit mask, so
local complementation and pivoting are a handful of XORs.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

import networkx as nx
from attrs import field, frozen

from ...errors import (
    InvalidIndexError,
    PivotNotDefinedError,
    UnsupportedInputError,
    UnsupportedPivotError,
)
from ..algebra.gf2 import Gf2Matrix, bits, popcount


def _default_labels(n: int) -> tuple:
    return tuple(str(i) for i in range(n))


@frozen
class Graph:
    """Looped simple graph.

    :param labels: vertex labels, in a fixed order
    :param adjacency: neighborhood bit mask per vertex, never containing the
        vertex itself
    :param loops: bit mask of looped vertices
    """

    labels: tuple = field(converter=tuple)
    adjacency: tuple = field(converter=tuple)
    loops: int = field(default=0)
    _positions: dict = field(init=False, repr=False, eq=False)

    def __attrs_post_init__(self):
        n = len(self.labels)
        if len(self.adjacency) != n:
            raise UnsupportedInputError("one neighborhood per vertex is required")
        if len(set(self.labels)) != n:
            raise UnsupportedInputError("duplicate vertex labels")
        for i, nbrs in enumerate(self.adjacency):
            if nbrs >> i & 1:
                raise UnsupportedInputError("a vertex is never its own neighbor")
            for j in bits(nbrs):
                if j >= n or not self.adjacency[j] >> i & 1:
                    raise UnsupportedInputError("adjacency is not symmetric")
        if self.loops >> n:
            raise UnsupportedInputError("loop on an unknown vertex")
        object.__setattr__(
            self, "_positions", {label: i for i, label in enumerate(self.labels)}
        )

    # constructors

    @classmethod
    def from_edges(cls, labels, edges: Iterable = (), loops: Iterable = ()) -> "Graph":
        """Build from label pairs; a pair ``(v, v)`` puts a loop on ``v``.

        example::

            Graph.from_edges("abc", [("a", "b"), ("b", "c")])   # P3
        """
        labels = tuple(labels)
        positions = {label: i for i, label in enumerate(labels)}
        adjacency = [0] * len(labels)
        loop_mask = 0
        for u, v in edges:
            if u not in positions:
                raise InvalidIndexError(u, "vertex set")
            if v not in positions:
                raise InvalidIndexError(v, "vertex set")
            i, j = positions[u], positions[v]
            if i == j:
                loop_mask |= 1 << i
            else:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
        for v in loops:
            if v not in positions:
                raise InvalidIndexError(v, "vertex set")
            loop_mask |= 1 << positions[v]
        return cls(labels, adjacency, loop_mask)

    @classmethod
    def empty(cls, n: int, labels=None) -> "Graph":
        """The edgeless graph ``E_n``."""
        labels = tuple(labels) if labels is not None else _default_labels(n)
        return cls(labels, [0] * len(labels))

    @classmethod
    def complete(cls, n: int, labels=None) -> "Graph":
        labels = tuple(labels) if labels is not None else _default_labels(n)
        full = (1 << len(labels)) - 1
        return cls(labels, [full & ~(1 << i) for i in range(len(labels))])

    @classmethod
    def path(cls, n: int, labels=None) -> "Graph":
        labels = tuple(labels) if labels is not None else _default_labels(n)
        return cls.from_edges(labels, zip(labels, labels[1:]))

    @classmethod
    def cycle(cls, n: int, labels=None) -> "Graph":
        labels = tuple(labels) if labels is not None else _default_labels(n)
        return cls.from_edges(labels, zip(labels, labels[1:] + labels[:1]))

    @classmethod
    def from_matrix(cls, matrix: Gf2Matrix) -> "Graph":
        """Graph whose adjacency matrix is ``matrix``; diagonal ones become loops."""
        loops = 0
        adjacency = []
        for i, row in enumerate(matrix.rows):
            loops |= row & (1 << i)
            adjacency.append(row & ~(1 << i))
        return cls(matrix.labels, adjacency, loops)

    # queries

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self._positions[label]
        except KeyError:
            raise InvalidIndexError(label, "vertex set") from None

    def mask(self, vertices=None) -> int:
        if vertices is None:
            return (1 << self.n) - 1
        mask = 0
        for v in vertices:
            mask |= 1 << self.index(v)
        return mask

    def labels_of(self, mask: int) -> tuple:
        return tuple(self.labels[i] for i in bits(mask))

    def neighbors(self, v) -> tuple:
        """Open neighborhood ``N(v)``; a loop does not put ``v`` in it."""
        return self.labels_of(self.adjacency[self.index(v)])

    def has_edge(self, u, v) -> bool:
        return bool(self.adjacency[self.index(u)] >> self.index(v) & 1)

    def is_looped(self, v) -> bool:
        return bool(self.loops >> self.index(v) & 1)

    def looped_vertices(self) -> tuple:
        return self.labels_of(self.loops)

    @property
    def is_simple(self) -> bool:
        return self.loops == 0

    @property
    def edge_count(self) -> int:
        return sum(popcount(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> list:
        """Non-loop edges as label pairs ``(u, v)`` with ``u < v``, sorted."""
        pairs = []
        for i, nbrs in enumerate(self.adjacency):
            for j in bits(nbrs):
                if i < j:
                    u, v = sorted((self.labels[i], self.labels[j]))
                    pairs.append((u, v))
        return sorted(pairs)

    def first_edge(self, unlooped=True):
        """Lexicographically smallest edge, ``None`` if there is none.

        :param unlooped: only consider edges whose endpoints carry no loop
        """
        for u, v in self.edges():
            if unlooped and (self.is_looped(u) or self.is_looped(v)):
                continue
            return u, v
        return None

    def adjacency_matrix(self) -> Gf2Matrix:
        """Adjacency matrix over GF(2) with a 1 on the diagonal at each loop."""
        return Gf2Matrix(
            self.labels,
            [nbrs | (self.loops & (1 << i)) for i, nbrs in enumerate(self.adjacency)],
        )

    # operations

    def local_complement(self, v, toggle_loops: bool = False) -> "Graph":
        """``G * v``: toggle every pair of distinct neighbors of ``v``.

        :param toggle_loops: also toggle the loop status of each neighbor;
            this is the local complement of the looped two-variable recursion
        """
        i = self.index(v)
        nbrs = self.adjacency[i]
        adjacency = list(self.adjacency)
        for j in bits(nbrs):
            adjacency[j] ^= nbrs & ~(1 << j)
        loops = self.loops ^ nbrs if toggle_loops else self.loops
        return Graph(self.labels, adjacency, loops)

    def local_complement_sequence(self, vertices, toggle_loops: bool = False) -> "Graph":
        """``G * v1 * v2 ...`` read left to right."""
        graph = self
        for v in vertices:
            graph = graph.local_complement(v, toggle_loops=toggle_loops)
        return graph

    def pivot(self, a, b) -> "Graph":
        """``G^{ab}`` for an edge ``ab`` with unlooped endpoints.

        The other vertices split into those adjacent to ``a`` only, to ``b``
        only and to both; every pair taken from two different classes is
        toggled. Labels are not swapped.
        """
        i, j = self.index(a), self.index(b)
        if not self.adjacency[i] >> j & 1:
            raise PivotNotDefinedError((a, b), f"{a}{b} is not an edge")
        if self.loops >> i & 1 or self.loops >> j & 1:
            raise UnsupportedPivotError(f"pivot on {a}{b} with a looped endpoint")
        ends = (1 << i) | (1 << j)
        na = self.adjacency[i] & ~ends
        nb = self.adjacency[j] & ~ends
        only_a, only_b, both = na & ~nb, nb & ~na, na & nb
        adjacency = list(self.adjacency)
        for cls_mask, others in (
            (only_a, only_b | both),
            (only_b, only_a | both),
            (both, only_a | only_b),
        ):
            for k in bits(cls_mask):
                adjacency[k] ^= others
        return Graph(self.labels, adjacency, self.loops)

    def loop_complement(self, vertices) -> "Graph":
        """``G + S``: toggle the loop status on ``S``."""
        return Graph(self.labels, self.adjacency, self.loops ^ self.mask(vertices))

    def swap_labels(self, a, b) -> "Graph":
        """``G_{ab}``: the graph with the names of ``a`` and ``b`` exchanged.

        Label order is kept, so the neighborhoods of ``a`` and ``b`` trade
        places instead.
        """
        i, j = self.index(a), self.index(b)
        perm = list(range(self.n))
        perm[i], perm[j] = j, i

        def move(mask):
            return sum(1 << perm[k] for k in bits(mask))

        adjacency = [0] * self.n
        for k, nbrs in enumerate(self.adjacency):
            adjacency[perm[k]] = move(nbrs)
        return Graph(self.labels, adjacency, move(self.loops))

    def induced(self, vertices) -> "Graph":
        """``G[T]`` in the original label order."""
        keep = self.mask(vertices)
        old = list(bits(keep))
        new_position = {j: k for k, j in enumerate(old)}
        adjacency = [
            sum(1 << new_position[j] for j in bits(self.adjacency[i] & keep))
            for i in old
        ]
        loops = sum(1 << k for k, i in enumerate(old) if self.loops >> i & 1)
        return Graph([self.labels[i] for i in old], adjacency, loops)

    def delete(self, *vertices) -> "Graph":
        """``G \\ v``."""
        return self.induced(self.labels_of(self.mask() & ~self.mask(vertices)))

    def principal_pivot(self, vertices) -> "Graph":
        """Graph of ``A(G) * X``; raises if ``A(G)[X]`` is singular."""
        return Graph.from_matrix(
            self.adjacency_matrix().principal_pivot_transform(vertices)
        )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.labels)
        graph.add_edges_from(self.edges())
        graph.add_edges_from((v, v) for v in self.looped_vertices())
        return graph

    def __str__(self):
        parts = [f"{u}-{v}" for u, v in self.edges()]
        parts += [f"{v}@" for v in self.looped_vertices()]
        return f"Graph({', '.join(self.labels)}; {' '.join(parts)})"


def local_complement(graph: Graph, v) -> Graph:
    return graph.local_complement(v)


def pivot(graph: Graph, a, b) -> Graph:
    return graph.pivot(a, b)


def loop_complement(graph: Graph, vertices) -> Graph:
    return graph.loop_complement(vertices)


def all_graphs(n: int, labels=None):
    """Every labeled simple graph on ``n`` vertices."""
    labels = tuple(labels) if labels is not None else _default_labels(n)
    pairs = list(combinations(labels, 2))
    for choice in range(1 << len(pairs)):
        yield Graph.from_edges(labels, (p for k, p in enumerate(pairs) if choice >> k & 1))
