"""Martin polynomials against interlace polynomials of circle graphs."""

from __future__ import annotations

import logging

from ..core.algebra.polynomial import IntPoly1
from ..core.eulerian.circuits import euler_circuits, interlace_graph, transpose, transposition_orbit
from ..core.eulerian.hosts import TwoInTwoOutDigraph
from ..core.eulerian.martin import cohn_lempel_check, eulerian_system_count, eulerian_systems, martin
from ..core.eulerian.transitions import enumerate_transitions
from ..core.interlace.statesum import Q_statesum, q_nullity_statesum
from .generators import random_digraph_host, random_host, random_order
from .results import SuiteRecorder


def _fixed_hosts(rec: SuiteRecorder):
    loops = TwoInTwoOutDigraph.from_edges("a", [("a", "a"), ("a", "a")])
    counts = sorted(count for _system, count in enumerate_transitions(loops.as_undirected()))
    rec.check("circuit counts of two loops", "undirected", counts, [1, 1, 2])
    counts = sorted(count for _system, count in enumerate_transitions(loops))
    rec.check("circuit counts of two loops", "directed", counts, [1, 2])
    rec.check("m of two directed loops = x", "loops", martin(loops), IntPoly1.monomial(1))
    rec.check("M of two undirected loops = x", "loops", martin(loops.as_undirected()), IntPoly1.monomial(1))
    rec.check("Eulerian circuits of two directed loops", "loops", len(euler_circuits(loops)), 1)


def _directed_host(rec: SuiteRecorder, host, name: str, caps: dict):
    m = martin(host, caps["transition_cap"])
    circuits = euler_circuits(host, caps["circuit_cap"])
    rec.check("m(D; 1) = Eulerian systems", name, m.evaluate(1), eulerian_system_count(host, caps["transition_cap"]))
    rec.check("Eulerian circuits = transition systems with one circuit", name,
              len(circuits), m.evaluate(1))
    for k, circuit in enumerate(circuits):
        h = interlace_graph(circuit)
        q = q_nullity_statesum(h)
        rec.check("m(D; x) = q_N(H(C); x)", f"{name}/C{k}", q, m)
        rec.check("Eulerian circuits = q_N(H(C); 1)", f"{name}/C{k}", q.evaluate(1), len(circuits))
    first = circuits[0]
    rec.check("transpositions reach every Eulerian circuit", name,
              transposition_orbit(first, caps["circuit_cap"]), set(circuits))
    h = interlace_graph(first)
    for a, b in h.edges():
        moved = transpose(first, a, b)
        rec.check("H(C)^{ab} = H(C^{ab})_{ab}", f"{name}/{a}{b}", h.pivot(a, b),
                  interlace_graph(moved).swap_labels(a, b))


def _undirected_host(rec: SuiteRecorder, host, name: str, caps: dict):
    big_m = martin(host, caps["transition_cap"])
    systems = list(eulerian_systems(host, caps["transition_cap"]))
    for k, circuit in enumerate(systems):
        rec.check("M(G; x) = Q(H(C); x)", f"{name}/C{k}", Q_statesum(interlace_graph(circuit)), big_m)
    circuit = systems[0]
    for system, _count in enumerate_transitions(host, caps["transition_cap"]):
        lhs, rhs = cohn_lempel_check(circuit, system)
        rec.check("|P| - k(G) = n((H(C) + Z)[Y u Z])", f"{name}/{system.choices}", lhs, rhs)


def run_suite(rng, settings: dict, caps: dict) -> list:
    """Run the Eulerian battery.

    :param settings: ``trials`` and ``max_n``
    """
    rec = SuiteRecorder("euler")
    _fixed_hosts(rec)
    for trial in range(settings["trials"]):
        n = random_order(rng, 1, settings["max_n"])
        _directed_host(rec, random_digraph_host(rng, n), f"D#{trial}(n={n})", caps)
        n = random_order(rng, 1, settings["max_n"])
        _undirected_host(rec, random_host(rng, n), f"G#{trial}(n={n})", caps)
        logging.debug("euler: trial %d done", trial)
    return rec.results
