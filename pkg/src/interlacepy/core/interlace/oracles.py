"""Brute-force counting oracles behind the evaluations of ``q_N`` and ``Q``."""

from __future__ import annotations

from attrs import define, field

from ...errors import ResourceLimitError
from ..algebra.gf2 import bits, popcount
from ..graphs.graph import Graph
from .statesum import DEFAULT_GLOBAL_MAX_N, Q_statesum, q_nullity_statesum

DEFAULT_ORACLE_MAX_N = 16

Q_N_POINTS = (-1, 0, 1, 2, 3)
Q_POINTS = (0, 2, 3, 4)


def _matching_counter(adjacency, loops):
    """Count general perfect matchings of induced subgraphs: every vertex is
    covered by an edge or, when looped, by its own loop."""
    memo = {0: 1}

    def count(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        total = count(rest) if loops >> v & 1 else 0
        for u in bits(adjacency[v] & rest):
            total += count(rest ^ (1 << u))
        memo[mask] = total
        return total

    return count


def odd_matching_subgraphs(graph: Graph) -> int:
    """Induced subgraphs (empty one included) with an odd number of perfect
    matchings; a loop may cover its own vertex."""
    count = _matching_counter(graph.adjacency, graph.loops)
    return sum(count(mask) & 1 for mask in range(1 << graph.n))


def even_subgraphs(graph: Graph) -> int:
    """Induced subgraphs, the empty one included, whose degrees are all even."""
    total = 0
    for mask in range(1 << graph.n):
        if all(popcount(graph.adjacency[i] & mask) % 2 == 0 for i in bits(mask)):
            total += 1
    return total


def odd_general_matching_subgraphs(graph: Graph) -> int:
    """Pairs ``(T, S)`` with ``S <= T`` such that ``G[T]`` with loops toggled
    on ``S`` has an odd number of general perfect matchings."""
    total = 0
    full = (1 << graph.n) - 1
    for mask in range(full + 1):
        sub = mask
        while True:
            count = _matching_counter(graph.adjacency, graph.loops ^ sub)
            total += count(mask) & 1
            if sub == 0:
                break
            sub = (sub - 1) & mask
    return total


@define
class EvaluationReport:
    """Values of ``q_N`` and ``Q`` at the classical points, the oracle counts
    and one pass flag per applicable identity."""

    graph_id: str
    n: int
    q_values: dict = field(factory=dict)
    Q_values: dict = field(factory=dict)
    odd_matchings: int = 0
    even_subgraphs: int = 0
    odd_general_matchings: int = 0
    checks: dict = field(factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _odd_quotient(numerator: int, denominator: int) -> bool:
    return denominator != 0 and numerator % denominator == 0 and (numerator // denominator) % 2 == 1


def counting_oracles(
    graph: Graph,
    graph_id: str = "G",
    max_n: int = DEFAULT_ORACLE_MAX_N,
    global_max_n: int = DEFAULT_GLOBAL_MAX_N,
) -> EvaluationReport:
    """Evaluate ``q_N`` and ``Q`` and compare them with brute-force counts.

    Identities that need a simple graph are only checked on simple graphs;
    ``Q`` values are skipped beyond ``global_max_n`` vertices.
    """
    n = graph.n
    if n > max_n:
        raise ResourceLimitError("oracle_max_n", max_n)
    q = q_nullity_statesum(graph)
    report = EvaluationReport(graph_id, n)
    report.q_values = {point: q.evaluate(point) for point in Q_N_POINTS}
    report.odd_matchings = odd_matching_subgraphs(graph)

    _rank, nullity_looped = graph.loop_complement(graph.labels).adjacency_matrix().rank_nullity()
    values = report.q_values
    checks = report.checks
    checks["q(2) = 2^n"] = values[2] == 2**n
    checks["q(1) = odd matching subgraphs"] = values[1] == report.odd_matchings
    checks["q(-1) = (-1)^n (-2)^n(G+V)"] = values[-1] == (-1) ** n * (-2) ** nullity_looped
    checks["q(3) / q(-1) odd"] = _odd_quotient(values[3], values[-1])
    if graph.is_simple and n >= 1:
        checks["q(0) = 0"] = values[0] == 0

    if n <= global_max_n:
        big_q = Q_statesum(graph, global_max_n)
        report.Q_values = {point: big_q.evaluate(point) for point in Q_POINTS}
        if graph.is_simple:
            report.even_subgraphs = even_subgraphs(graph)
            report.odd_general_matchings = odd_general_matching_subgraphs(graph)
            Q_values = report.Q_values
            checks["Q(3) = 3^n"] = Q_values[3] == 3**n
            checks["Q(4) = 2^n even subgraphs"] = Q_values[4] == 2**n * report.even_subgraphs
            checks["Q(2) = odd general matching subgraphs"] = (
                Q_values[2] == report.odd_general_matchings
            )
            if n >= 1:
                checks["Q(0) = 0"] = Q_values[0] == 0
    return report
