"""Pipeline equivalence, evaluations and structure of the graph polynomials."""

from __future__ import annotations

import logging

from ..core.algebra.polynomial import IntPoly1
from ..core.graphs.graph import Graph, all_graphs
from ..core.graphs.stats import component_count, graph_stats
from ..core.interlace.oracles import counting_oracles
from ..core.interlace.recursive import (
    Q_recursive,
    q_matrix_recursion_sides,
    q_matrix_recursive,
    q_nullity_local,
    q_nullity_recursive,
    q_twovar_recursive,
)
from ..core.interlace.statesum import (
    Q_statesum,
    q_matrix,
    q_nullity_statesum,
    q_twovar_statesum,
    vertex_rank_polynomial,
)
from .generators import random_graph, random_order, random_subset, random_symmetric_matrix
from .results import SuiteRecorder


def _closed_forms(rec: SuiteRecorder):
    for n in range(9):
        rec.check("q_N(E_n) = x^n", f"E_{n}", q_nullity_statesum(Graph.empty(n)), IntPoly1.monomial(n))
    named = {
        "K2": (Graph.complete(2), [0, 2]),
        "P3": (Graph.path(3), [0, 2, 1]),
        "K3": (Graph.complete(3), [0, 4]),
    }
    for name, (graph, coefficients) in named.items():
        rec.check("q_N closed forms", name, q_nullity_statesum(graph), IntPoly1.from_dense(coefficients))
    k2 = Graph.complete(2)
    rec.check("Q closed forms", "K2", Q_statesum(k2), IntPoly1.from_dense([0, 3]))
    q2 = q_twovar_statesum(k2)
    rec.check("q(K2; x, y) = x^2 - 2x + 2y", "K2", str(q2), "x^2 - 2x + 2y")


def _two_variable_structure(rec: SuiteRecorder, graph: Graph, name: str):
    q2 = q_twovar_statesum(graph)
    q = q_nullity_statesum(graph)
    rec.check("q(G; 2, y) = q_N(G; y)", name, q2.specialize_x(2), q)
    rec.check("q(G; x, 2) = vertex-rank polynomial", name, q2.specialize_y(2), vertex_rank_polynomial(graph))
    # the coefficient identities need a simple graph on at least two vertices
    if not graph.is_simple or graph.n < 2:
        return
    a1 = q.coefficient(1)
    rec.check("a_1 = a_01 = -a_10", name, (a1, a1), (q2.coefficient(0, 1), -q2.coefficient(1, 0)))
    column = {i: c for (i, j), c in q2.terms if j == 1}
    rec.check("a_1 = sum a_i1 2^i", name, a1, sum(c * 2**i for i, c in column.items()))
    rec.check("sum_{i>=1} a_i1 2^i = 0", name, sum(c * 2**i for i, c in column.items() if i >= 1), 0)


def _structure(rec: SuiteRecorder, graph: Graph, name: str, orbit_n: int, orbit_cap: int):
    q = q_nullity_statesum(graph)
    if graph.n == 0:
        return
    rec.check("lowest exponent of q_N = components", name, q.low_degree, component_count(graph))
    rec.check("q_N has no constant term", name, q.coefficient(0), 0)
    if graph.n <= orbit_n:
        stats = graph_stats(graph, orbit_cap)
        rec.check("deg q_N = max independence over the pivot orbit", name, q.degree,
                  stats.pivot_orbit_max_independence)


def _matrix_recursion(rec: SuiteRecorder, rng, n: int, trial: int):
    matrix = random_symmetric_matrix(rng, n)
    name = f"A#{trial}"
    expected = q_matrix(matrix)
    rec.check("q_m recursion = q_m state sum", name, q_matrix_recursive(matrix), expected)
    subset = random_subset(rng, matrix.labels)
    if subset and matrix.is_invertible(subset):
        left, right = q_matrix_recursion_sides(matrix, subset, subset[0], q_matrix)
        rec.check("q_m(A) = q_m(A \\ v) + q_m(A*T \\ v)", name, left, right)


def run_suite(rng, settings: dict, caps: dict) -> list:
    """Run the interlace battery.

    :param settings: ``trials``, ``max_n``, ``exhaustive_n``, ``global_exhaustive_n``, ``orbit_n``,
        ``oracle_n``
    :param caps: size caps of the suite configuration
    """
    rec = SuiteRecorder("interlace")
    orbit_cap = caps["orbit_cap"]
    _closed_forms(rec)

    for n in range(settings["exhaustive_n"] + 1):
        for k, graph in enumerate(all_graphs(n)):
            name = f"n={n}#{k}"
            statesum = q_nullity_statesum(graph)
            rec.check("q_N recursion = state sum (all graphs)", name, q_nullity_recursive(graph), statesum)
            if n <= settings["global_exhaustive_n"]:
                rec.check("Q recursion = state sum (all graphs)", name, Q_recursive(graph), Q_statesum(graph))
                for loops in range(1 << n):
                    looped = Graph(graph.labels, graph.adjacency, loops)
                    rec.check(
                        "two-variable recursion = state sum (all looped graphs)",
                        f"{name}+{loops}", q_twovar_recursive(looped), q_twovar_statesum(looped),
                    )
    logging.info("interlace: exhaustive part done")

    for trial in range(settings["trials"]):
        n = random_order(rng, 1, settings["max_n"])
        graph = random_graph(rng, n)
        name = f"G#{trial}(n={n})"
        statesum = q_nullity_statesum(graph)
        rec.check("q_N recursion = state sum", name, q_nullity_recursive(graph), statesum)
        rec.check("q_N local complement recursion = state sum", name, q_nullity_local(graph), statesum)
        if n <= 6:
            rec.check("Q recursion = state sum", name, Q_recursive(graph), Q_statesum(graph))
        if n <= settings["oracle_n"]:
            report = counting_oracles(graph, name, caps["oracle_max_n"], caps["global_max_n"])
            for identity, passed in report.checks.items():
                rec.check(identity, name, passed)
        _structure(rec, graph, name, settings["orbit_n"], orbit_cap)
        _two_variable_structure(rec, graph, name)

        looped = random_graph(rng, min(n, 6), loops=True)
        looped_name = f"L#{trial}(n={looped.n})"
        rec.check("two-variable recursion = state sum", looped_name,
                  q_twovar_recursive(looped), q_twovar_statesum(looped))
        report = counting_oracles(looped, looped_name, caps["oracle_max_n"], caps["global_max_n"])
        for identity, passed in report.checks.items():
            rec.check(identity, looped_name, passed)
        _two_variable_structure(rec, looped, looped_name)
        _matrix_recursion(rec, rng, min(n, 6), trial)
        if trial % 50 == 49:
            logging.info("interlace: %d random trials done", trial + 1)
    return rec.results
