"""Transition systems of 4-regular hosts and the circuit partitions they induce."""

from __future__ import annotations

import logging
from itertools import product

from attrs import field, frozen

from ...errors import HostValidationError, ResourceLimitError
from .hosts import FourRegularGraph, mate

DEFAULT_TRANSITION_CAP = 3**10


@frozen
class TransitionSystem:
    """One pairing of the four darts at every vertex.

    :param host: the 4-regular graph or two-in two-out digraph
    :param choices: pairing index per vertex, see
        :data:`~interlacepy.core.eulerian.hosts.PAIRING_PATTERNS`
    """

    host: FourRegularGraph
    choices: tuple = field(converter=tuple)
    partner: tuple = field(init=False, repr=False, eq=False)

    def __attrs_post_init__(self):
        if len(self.choices) != self.host.n:
            raise HostValidationError("one pairing per vertex is required")
        partner = [0] * self.host.dart_count
        for v, choice in enumerate(self.choices):
            for d, e in self.host.pairing(v, choice):
                partner[d] = e
                partner[e] = d
        object.__setattr__(self, "partner", tuple(partner))

    @classmethod
    def from_pairs(cls, host: FourRegularGraph, pairs) -> "TransitionSystem":
        """Build from transitions given as dart pairs, two per vertex."""
        wanted = {frozenset(pair) for pair in pairs}
        choices = []
        for v in range(host.n):
            for choice in range(3):
                if all(frozenset(p) in wanted for p in host.pairing(v, choice)):
                    choices.append(choice)
                    break
            else:
                raise HostValidationError(
                    f"no pairing at vertex {host.labels[v]} matches the transitions"
                )
        return cls(host, choices)

    def transit(self, dart: int) -> int:
        return self.partner[dart]

    def is_consistent(self) -> bool:
        """Every transition pairs an in-dart with an out-dart."""
        return all(
            self.host.is_consistent(pair)
            for v, choice in enumerate(self.choices)
            for pair in self.host.pairing(v, choice)
        )

    def circuits(self) -> list:
        """The circuit partition, each circuit a list of departure darts.

        A circuit and its reversal are the same closed trail; the orientation
        kept is the one starting from the smallest free dart, which for a
        digraph follows the arcs.
        """
        seen = [False] * self.host.dart_count
        found = []
        for start in range(self.host.dart_count):
            if seen[start]:
                continue
            walk = []
            dart = start
            while not seen[dart]:
                seen[dart] = True
                seen[mate(dart)] = True
                walk.append(dart)
                dart = self.partner[mate(dart)]
            found.append(walk)
        return found

    def circuit_count(self) -> int:
        """``|T|``."""
        return len(self.circuits())


def enumerate_transitions(host: FourRegularGraph, cap: int = DEFAULT_TRANSITION_CAP):
    """Yield ``(system, circuit_count)`` for every transition system.

    Digraphs only get orientation-consistent systems (``2^n`` of them),
    undirected hosts all ``3^n``.
    """
    options = [host.allowed_pairings(v) for v in range(host.n)]
    total = 1
    for choices in options:
        total *= len(choices)
    if total > cap:
        raise ResourceLimitError("transition_cap", cap)
    logging.debug("enumerating %d transition systems", total)
    for choices in product(*options):
        system = TransitionSystem(host, choices)
        yield system, system.circuit_count()


def inconsistent_system(host: FourRegularGraph) -> TransitionSystem:
    """The system pairing in-darts together and out-darts together at every
    vertex of a digraph."""
    choices = []
    for v in range(host.n):
        for choice in range(3):
            if not any(host.is_consistent(pair) for pair in host.pairing(v, choice)):
                choices.append(choice)
                break
    return TransitionSystem(host, choices)
