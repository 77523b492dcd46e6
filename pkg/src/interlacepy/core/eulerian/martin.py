"""Martin polynomials and the circuit-partition nullity identity."""

from __future__ import annotations

from collections import Counter

from ...errors import HostValidationError
from ..algebra.polynomial import IntPoly1
from .circuits import EulerianCircuit, interlace_graph
from .hosts import FourRegularGraph
from .transitions import DEFAULT_TRANSITION_CAP, TransitionSystem, enumerate_transitions


def martin(host: FourRegularGraph, cap: int = DEFAULT_TRANSITION_CAP) -> IntPoly1:
    """``m(D; x) = sum_T (x-1)^{|T| - k}`` for a two-in two-out digraph,
    ``M(G; x) = sum_T (x-2)^{|T| - k}`` for an undirected 4-regular graph."""
    k = host.components
    counts: Counter = Counter()
    for _system, circuits in enumerate_transitions(host, cap):
        counts[circuits - k] += 1
    return IntPoly1.from_exponent_counts(counts, -1 if host.directed else -2)


def eulerian_systems(host: FourRegularGraph, cap: int = DEFAULT_TRANSITION_CAP):
    """Yield the Eulerian system of every transition system with one circuit
    per component."""
    k = host.components
    for system, circuits in enumerate_transitions(host, cap):
        if circuits == k:
            yield EulerianCircuit.from_transition_system(system)


def eulerian_system_count(host: FourRegularGraph, cap: int = DEFAULT_TRANSITION_CAP) -> int:
    """Number of transition systems with one circuit per component."""
    return sum(1 for _circuit in eulerian_systems(host, cap))


def classify_vertices(circuit: EulerianCircuit, system: TransitionSystem) -> dict:
    """Split the vertices into ``W`` (``P`` follows ``C``), ``Y`` (``P`` differs
    but joins an entering dart to a leaving one, orienting by ``C``) and ``Z``
    (``P`` joins two entering darts)."""
    host = circuit.host
    if system.host != host:
        raise HostValidationError("transition system and circuit live on different hosts")
    own = circuit.transition_system()
    entering = circuit.arrival_darts()
    classes: dict = {"W": [], "Y": [], "Z": []}
    for v in range(host.n):
        label = host.labels[v]
        if system.choices[v] == own.choices[v]:
            classes["W"].append(label)
            continue
        d, e = host.pairing(v, system.choices[v])[0]
        if (d in entering) != (e in entering):
            classes["Y"].append(label)
        else:
            classes["Z"].append(label)
    return classes


def cohn_lempel_check(circuit: EulerianCircuit, system: TransitionSystem) -> tuple:
    """Both sides of ``|P| - k(G) = n((H(C) + Z)[Y u Z])``.

    :return: ``(lhs, rhs)``
    """
    classes = classify_vertices(circuit, system)
    lhs = system.circuit_count() - circuit.host.components
    graph = interlace_graph(circuit).loop_complement(classes["Z"])
    _rank, nullity = graph.adjacency_matrix().rank_nullity(classes["Y"] + classes["Z"])
    return lhs, nullity

