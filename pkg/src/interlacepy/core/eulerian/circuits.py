"""Eulerian circuits (and Eulerian systems of disconnected hosts), their
interlace graphs and transpositions."""

from __future__ import annotations

import logging
from collections import deque

from attrs import field, frozen

from ...errors import HostValidationError, NotInterlacedError, ResourceLimitError
from ..graphs.graph import Graph
from .hosts import FourRegularGraph, mate
from .transitions import TransitionSystem

DEFAULT_CIRCUIT_CAP = 200_000


def _rotate_min(walk) -> tuple:
    start = walk.index(min(walk))
    return tuple(walk[start:]) + tuple(walk[:start])


def _canonical(circuits) -> tuple:
    return tuple(sorted(_rotate_min(list(c)) for c in circuits))


@frozen
class EulerianCircuit:
    """One closed trail per component of the host, each through every edge of
    its component once.

    :param host: the 4-regular host
    :param circuits: per component, the cyclic sequence of departure darts;
        stored rotated so the smallest dart is first
    """

    host: FourRegularGraph
    circuits: tuple = field(converter=_canonical)

    def __attrs_post_init__(self):
        darts = [d for c in self.circuits for d in c]
        if len({d >> 1 for d in darts}) != len(self.host.edges) or len(darts) != len(
            self.host.edges
        ):
            raise HostValidationError("circuit does not use every edge exactly once")
        for circuit in self.circuits:
            for position, dart in enumerate(circuit):
                following = circuit[(position + 1) % len(circuit)]
                if self.host.dart_vertex(mate(dart)) != self.host.dart_vertex(following):
                    raise HostValidationError("consecutive darts do not share a vertex")
        if len(self.circuits) != self.host.components:
            raise HostValidationError("an Eulerian system has one circuit per component")

    @classmethod
    def from_transition_system(cls, system: TransitionSystem) -> "EulerianCircuit":
        """The Eulerian system of a transition system with ``|T| = k(G)``."""
        circuits = system.circuits()
        if len(circuits) != system.host.components:
            raise HostValidationError(
                f"transition system has {len(circuits)} circuits, "
                f"the host has {system.host.components} components"
            )
        return cls(system.host, circuits)

    def words(self) -> tuple:
        """Double occurrence word of each circuit."""
        return tuple(
            tuple(self.host.labels[self.host.dart_vertex(d)] for d in c)
            for c in self.circuits
        )

    def transition_system(self) -> TransitionSystem:
        pairs = []
        for circuit in self.circuits:
            for position, dart in enumerate(circuit):
                pairs.append((mate(dart), circuit[(position + 1) % len(circuit)]))
        return TransitionSystem.from_pairs(self.host, pairs)

    def arrival_darts(self) -> frozenset:
        """Darts through which the circuit enters a vertex."""
        return frozenset(mate(d) for c in self.circuits for d in c)

    def __str__(self):
        return " | ".join(" ".join(word) for word in self.words())


def interlace_graph(circuit: EulerianCircuit) -> Graph:
    """``H(C)``: ``ab`` is an edge when ``a`` and ``b`` alternate in a word."""
    host = circuit.host
    adjacency = [0] * host.n
    for word in circuit.circuits:
        positions: dict = {}
        for position, dart in enumerate(word):
            positions.setdefault(host.dart_vertex(dart), []).append(position)
        for a, (a1, a2) in positions.items():
            for b, (b1, b2) in positions.items():
                if a < b and (a1 < b1 < a2) != (a1 < b2 < a2):
                    adjacency[a] |= 1 << b
                    adjacency[b] |= 1 << a
    return Graph(host.labels, adjacency)


def transpose(circuit: EulerianCircuit, a, b) -> EulerianCircuit:
    """``C^{ab}``: exchange the two segments between the visits of ``a`` and
    ``b``. The word ``a X b Y a Z b W`` becomes ``a Z b Y a X b W``.

    :raise NotInterlacedError: ``a`` and ``b`` do not alternate in ``C``
    """
    host = circuit.host
    va, vb = host.index(a), host.index(b)
    circuits = [list(c) for c in circuit.circuits]
    for k, walk in enumerate(circuits):
        visits = [host.dart_vertex(d) for d in walk]
        if va not in visits or vb not in visits:
            continue
        start = visits.index(va)
        walk = walk[start:] + walk[:start]
        visits = visits[start:] + visits[:start]
        i2 = visits.index(va, 1)
        j1 = visits.index(vb)
        j2 = visits.index(vb, j1 + 1)
        if not j1 < i2 < j2:
            break
        circuits[k] = walk[i2:j2] + walk[j1:i2] + walk[:j1] + walk[j2:]
        return EulerianCircuit(host, circuits)
    raise NotInterlacedError(f"{a} and {b} are not interlaced")


def transposition_orbit(circuit: EulerianCircuit, cap: int = DEFAULT_CIRCUIT_CAP) -> set:
    """Closure of ``{C}`` under transpositions of interlaced pairs."""
    seen = {circuit}
    queue = deque([circuit])
    while queue:
        current = queue.popleft()
        for a, b in interlace_graph(current).edges():
            reached = transpose(current, a, b)
            if reached in seen:
                continue
            if len(seen) >= cap:
                raise ResourceLimitError("circuit_cap", cap, partial=seen)
            seen.add(reached)
            queue.append(reached)
    return seen


def euler_circuits(digraph: FourRegularGraph, cap: int = DEFAULT_CIRCUIT_CAP) -> list:
    """Every Eulerian circuit of a connected two-in two-out digraph, up to
    rotation, by backtracking over the out-arcs at each visited vertex.

    Every circuit traverses arc 0, so each is generated exactly once by
    starting from dart 0.
    """
    if not digraph.directed:
        raise HostValidationError("euler_circuits expects a two-in two-out digraph")
    if not digraph.is_connected():
        raise HostValidationError("Eulerian circuits need a connected digraph")
    out_darts = [[d for d in darts if d % 2 == 0] for darts in digraph.vertex_darts]
    arcs = len(digraph.edges)
    used = [False] * arcs
    walk = [0]
    used[0] = True
    found = []

    def extend():
        if len(walk) == arcs:
            found.append(EulerianCircuit(digraph, [list(walk)]))
            if len(found) > cap:
                raise ResourceLimitError("circuit_cap", cap, partial=found)
            return
        here = digraph.dart_vertex(mate(walk[-1]))
        for dart in out_darts[here]:
            if not used[dart >> 1]:
                used[dart >> 1] = True
                walk.append(dart)
                extend()
                walk.pop()
                used[dart >> 1] = False

    extend()
    logging.debug("found %d Eulerian circuits", len(found))
    return found
