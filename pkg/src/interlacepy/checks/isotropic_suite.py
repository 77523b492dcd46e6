"""Tutte-Martin polynomials of isotropic systems against graph and Martin
polynomials."""

from __future__ import annotations

from ..core.eulerian.hosts import FourRegularGraph
from ..core.eulerian.martin import martin
from ..core.eulerian.transitions import enumerate_transitions, inconsistent_system
from ..core.interlace.statesum import Q_statesum, q_nullity_statesum
from ..core.isotropic.klein import X, Y, Z
from ..core.isotropic.system import (
    from_four_regular,
    from_graphic_presentation,
    graphic_presentation_check,
    presentation_meet_a,
    transition_vector,
)
from ..core.isotropic.tutte_martin import global_tm, restricted_tm
from .generators import (
    random_digraph_host,
    random_graph,
    random_labelling,
    random_order,
    random_presentation,
)
from .results import SuiteRecorder


def two_loop_digon() -> FourRegularGraph:
    """Two vertices with a loop each, joined by a double edge."""
    return FourRegularGraph.from_edges("ab", [("a", "a"), ("b", "b"), ("a", "b"), ("a", "b")])


def _fixed_systems(rec: SuiteRecorder):
    system = from_four_regular(two_loop_digon(), (Y, X, Z))
    members = sorted(str(v) for v in system.elements())
    rec.check("two-loop digon gives {00, 0y, y0, yy}", "digon", members, ["00", "0y", "y0", "yy"])


def run_suite(rng, settings: dict, caps: dict) -> list:
    """Run the isotropic battery.

    :param settings: ``trials``, ``max_n`` and ``host_max_n``
    """
    rec = SuiteRecorder("isotropic")
    max_n = caps["isotropic_max_n"]
    _fixed_systems(rec)
    for trial in range(settings["trials"]):
        n = random_order(rng, 1, settings["max_n"])
        graph = random_graph(rng, n)
        a, b = random_presentation(rng, graph)
        name = f"G#{trial}(n={n}, A={a}, B={b})"
        system = from_graphic_presentation(graph, a, b)
        rec.check("dim(L n B^) = 0", name, graphic_presentation_check(system, b))
        meet, nullity = presentation_meet_a(system, a, graph)
        rec.check("dim(L n A^) = nullity of A(G)", name, meet, nullity)
        rec.check("tm(S, A + B; x) = q_N(G; x)", name, restricted_tm(system, a + b, max_n),
                  q_nullity_statesum(graph))
        rec.check("TM(S; x) = Q(G; x)", name, global_tm(system, max_n), Q_statesum(graph))

        n = random_order(rng, 1, settings["host_max_n"])
        host = random_digraph_host(rng, n)
        name = f"D#{trial}(n={n})"
        labelling = random_labelling(rng, n)
        system = from_four_regular(host, labelling)
        inconsistent = inconsistent_system(host)
        rec.check("tm(S, Lambda(T); x) = m(D; x)", name,
                  restricted_tm(system, transition_vector(inconsistent, labelling), max_n),
                  martin(host, caps["transition_cap"]))
        undirected = host.as_undirected()
        for transitions, count in enumerate_transitions(undirected, caps["transition_cap"]):
            rec.check("|T| - k(G) = dim(L n Lambda(T)^)", f"{name}/{transitions.choices}",
                      count - undirected.components,
                      system.dim_meet_hat(transition_vector(transitions, labelling)))
    return rec.results
