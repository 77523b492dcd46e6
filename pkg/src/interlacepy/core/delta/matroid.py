"""Matroids given by their bases, as set systems, and their Tutte polynomial."""

from __future__ import annotations

import logging
from collections import Counter
from itertools import combinations

import networkx as nx

from ...errors import NotAMatroidError, UnsupportedInputError
from ..algebra.gf2 import popcount
from ..algebra.polynomial import IntPoly2
from ..graphs.graph import Graph
from .set_system import SetSystem


def require_matroid(system: SetSystem):
    """:raise NotAMatroidError: the feasible sets are not the bases of a matroid"""
    if not system.feasible:
        raise NotAMatroidError("a matroid has at least one basis")
    if len({popcount(f) for f in system.feasible}) != 1:
        raise NotAMatroidError("feasible sets are not equicardinal")
    if not system.symmetric_exchange_check():
        raise NotAMatroidError("feasible sets fail the basis exchange axiom")


def tutte_matroid(system: SetSystem) -> IntPoly2:
    """Tutte polynomial by ``t(M) = t(M/e) + t(M \\ e)``; a coloop contributes
    a factor ``x``, a loop a factor ``y``."""
    require_matroid(system)
    x = IntPoly2.monomial(1, 0)
    y = IntPoly2.monomial(0, 1)
    memo: dict = {}

    def rec(m: SetSystem) -> IntPoly2:
        if m in memo:
            return memo[m]
        if not m.n:
            result = IntPoly2.constant(1)
        else:
            e = m.ground[0]
            if m.is_coloop(e):
                result = x * rec(m.contract(e))
            elif m.is_loop(e):
                result = y * rec(m.delete(e))
            else:
                result = rec(m.contract(e)) + rec(m.delete(e))
        memo[m] = result
        return result

    result = rec(system)
    logging.debug("matroid Tutte recursion visited %d minors", len(memo))
    return result


def tutte_rank_sum(system: SetSystem) -> IntPoly2:
    """Tutte polynomial as the rank-generating sum
    ``sum_A (x-1)^{r(E) - r(A)} (y-1)^{|A| - r(A)}``, with ``r(A)`` the largest
    intersection of ``A`` with a basis."""
    require_matroid(system)
    bases = sorted(system.feasible)
    full = popcount(bases[0])
    counts: Counter = Counter()
    for subset in range(1 << system.n):
        rank = max(popcount(subset & basis) for basis in bases)
        counts[(full - rank, popcount(subset) - rank)] += 1
    return IntPoly2.from_exponent_counts(counts, -1, -1)


def uniform_matroid(rank: int, size: int) -> SetSystem:
    """``U_{k,m}`` on the elements ``"0" .. "m-1"``: every ``k``-subset is a basis."""
    if not 0 <= rank <= size:
        raise UnsupportedInputError(f"U_{{{rank},{size}}} needs 0 <= k <= m")
    ground = [str(i) for i in range(size)]
    return SetSystem.from_sets(ground, combinations(ground, rank))


def edge_label(u, v) -> str:
    return f"{u}-{v}"


def cycle_matroid(graph: Graph) -> SetSystem:
    """Cycle matroid of a connected simple graph: the ground set is the edge
    set, labelled ``"u-v"``, and the bases are the spanning trees."""
    if not graph.is_simple:
        raise UnsupportedInputError("cycle matroids are built from simple graphs")
    nx_graph = graph.to_networkx()
    if not graph.n or not nx.is_connected(nx_graph):
        raise UnsupportedInputError("cycle matroids are built from connected graphs")
    ground = [edge_label(u, v) for u, v in graph.edges()]
    bases = []
    for tree in nx.SpanningTreeIterator(nx_graph):
        bases.append([edge_label(*sorted(edge)) for edge in tree.edges()])
    return SetSystem.from_sets(ground, bases)
