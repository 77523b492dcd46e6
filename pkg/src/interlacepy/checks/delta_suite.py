"""Delta-matroid polynomials against the graph polynomials, their
recursions and evaluations, and the matroid Tutte diagonal."""

from __future__ import annotations

from ..core.algebra.gf2 import popcount
from ..core.delta.matroid import cycle_matroid, tutte_matroid, tutte_rank_sum, uniform_matroid
from ..core.delta.polynomials import (
    delta_evaluations,
    q_bar,
    q_bar_recursive,
    q_bar_relation_sides,
    q_delta,
    q_delta_global,
    q_delta_global_recursive,
    q_delta_recursive,
    q_delta_twist_sides,
)
from ..core.delta.set_system import SetSystem, adjacency_delta_matroid, is_vf_safe
from ..core.graphs.graph import Graph
from ..core.interlace.statesum import Q_statesum, q_nullity_statesum, q_twovar_statesum
from ..core.plane.tutte import tutte
from .generators import random_binary_delta_matroid, random_graph, random_order, random_set_system, random_subset
from .results import SuiteRecorder

EXAMPLE_GROUND = "abc"
EXAMPLE_SETS = ["abc", "ab", "ac", "bc", "b", "c", ""]


def _example_system(rec: SuiteRecorder):
    system = SetSystem.from_sets(EXAMPLE_GROUND, EXAMPLE_SETS)
    rec.check("example system is a delta-matroid", "M", system.is_delta_matroid())
    complemented = system.loop_complement(["a"])
    expected = SetSystem.from_sets(EXAMPLE_GROUND, ["a", "b", "c", "bc", ""])
    rec.check("M + a = {a, b, c, bc, {}}", "M", complemented, expected)
    rec.check("M + a is not a delta-matroid", "M", complemented.is_delta_matroid(), False)
    rec.check("example system is vf-unsafe", "M", is_vf_safe(system), False)


def _graph_relations(rec: SuiteRecorder, graph: Graph, name: str):
    system = adjacency_delta_matroid(graph)
    matrix = graph.adjacency_matrix()
    distances = system.distances()
    nullities = [popcount(mask) - matrix.rank_of_mask(mask) for mask in range(1 << graph.n)]
    rec.check("d_{M_G}(X) = n(G[X])", name, distances, nullities)
    rec.check("M_G is a delta-matroid", name, system.symmetric_exchange_check())
    rec.check("q_delta(M_G; x - 1) = q_N(G; x)", name,
              q_delta(system).substitute_shift(-1), q_nullity_statesum(graph))
    left, right = q_bar_relation_sides(system, q_twovar_statesum(graph))
    rec.check("q_bar(M_G; x - 1, (y - 1)/(x - 1)) = q(G; x, y)", name, left, right)
    simple = Graph(graph.labels, graph.adjacency)
    rec.check("Q_delta(M_G; x - 2) = Q(G; x)", name,
              q_delta_global(adjacency_delta_matroid(simple)).substitute_shift(-2), Q_statesum(simple))
    return system


def _minor_relations(rec: SuiteRecorder, rng, graph: Graph, system: SetSystem, name: str):
    subset = random_subset(rng, graph.labels)
    rec.check("M_{G+X} = M_G + X", name,
              adjacency_delta_matroid(graph.loop_complement(subset)), system.loop_complement(subset))
    if graph.adjacency_matrix().is_invertible(subset):
        rec.check("M_{G*X} = M_G * X", name,
                  adjacency_delta_matroid(graph.principal_pivot(subset)), system.twist(subset))


def _binary_recursions(rec: SuiteRecorder, rng, system: SetSystem, name: str, global_n: int):
    q = q_delta(system)
    rec.check("q_delta recursion = subset sum", name, q_delta_recursive(system), q)
    rec.check("q_bar recursion = subset sum", name, q_bar_recursive(system), q_bar(system))
    if 0 in system.feasible:
        nonempty = sorted(f for f in system.feasible if f)
        if nonempty:
            chosen = nonempty[int(rng.integers(len(nonempty)))]
            subset = system.labels_of(chosen)
            left, right = q_delta_twist_sides(system, subset, subset[0])
            rec.check("q_delta(D) = q_delta(D \\ e) + q_delta(D*X \\ e)", name, left, right)
    if system.n <= global_n:
        rec.check("Q_delta recursion = subset sum", name,
                  q_delta_global_recursive(system), q_delta_global(system))
    for evaluation in delta_evaluations(system, binary=True):
        rec.check(evaluation.name, name, evaluation.holds, True,
                  detail=f"{evaluation.left} vs {evaluation.right}")


def _dual_pivot_relation(rec: SuiteRecorder, rng, n: int, name: str):
    system = random_set_system(rng, n)
    for e in system.ground:
        left = system.twist([e]).loop_complement([e]).twist([e])
        right = system.loop_complement([e]).twist([e]).loop_complement([e])
        rec.check("*e +e *e = +e *e +e", f"{name}/{e}", left, right)


def _matroids(rec: SuiteRecorder, max_m: int):
    for m in range(max_m + 1):
        for k in range(m + 1):
            matroid = uniform_matroid(k, m)
            rec.check("Tutte recursion = rank sum", f"U_{k},{m}", tutte_matroid(matroid), tutte_rank_sum(matroid))
            rec.check("t(M; x, x) = q_delta(M; x - 1)", f"U_{k},{m}",
                      tutte_matroid(matroid).diagonal(), q_delta(matroid).substitute_shift(-1))
    graphs = {
        "K3": Graph.complete(3),
        "K4": Graph.complete(4),
        "C4": Graph.cycle(4),
        "P4": Graph.path(4),
        "K4-e": Graph.from_edges("0123", [("0", "1"), ("0", "2"), ("0", "3"), ("1", "2"), ("2", "3")]),
    }
    for name, graph in graphs.items():
        matroid = cycle_matroid(graph)
        polynomial = tutte_matroid(matroid)
        rec.check("t(M; x, x) = q_delta(M; x - 1)", f"M({name})",
                  polynomial.diagonal(), q_delta(matroid).substitute_shift(-1))
        rec.check("Tutte of M(G) = Tutte of G", f"M({name})", polynomial, tutte(graph.edges()))


def run_suite(rng, settings: dict, caps: dict) -> list:
    """Run the delta-matroid battery.

    :param settings: ``trials``, ``max_n``, ``vf_search_n``, ``matroid_max_m``
    """
    rec = SuiteRecorder("delta")
    _example_system(rec)
    _matroids(rec, settings["matroid_max_m"])
    for trial in range(settings["trials"]):
        n = random_order(rng, 1, settings["max_n"])
        graph = random_graph(rng, n, loops=True)
        name = f"G#{trial}(n={n})"
        system = _graph_relations(rec, graph, name)
        _minor_relations(rec, rng, graph, system, name)

        n = random_order(rng, 1, settings["max_n"])
        binary = random_binary_delta_matroid(rng, n)
        _binary_recursions(rec, rng, binary, f"D#{trial}(n={n})", min(6, settings["max_n"]))

        n = random_order(rng, 1, min(6, settings["max_n"]))
        _dual_pivot_relation(rec, rng, n, f"S#{trial}(n={n})")
        if n <= settings["vf_search_n"]:
            small = random_binary_delta_matroid(rng, n)
            rec.check("binary delta-matroids are vf-safe", f"B#{trial}(n={n})",
                      is_vf_safe(small, settings["vf_search_n"]), True)
    return rec.results
