"""Tutte polynomial of a multigraph by deletion and contraction."""

from __future__ import annotations

import logging

import networkx as nx

from ..algebra.polynomial import IntPoly1, IntPoly2
from .plane_graph import PlaneGraph

_X = IntPoly2.monomial(1, 0)
_Y = IntPoly2.monomial(0, 1)


def _is_bridge(u, v, rest) -> bool:
    graph = nx.MultiGraph()
    graph.add_nodes_from((u, v))
    graph.add_edges_from(rest)
    return not nx.has_path(graph, u, v)


def _contract(u, v, edges) -> tuple:
    return tuple(
        tuple(sorted((u if a == v else a, u if b == v else b))) for a, b in edges
    )


def tutte(edges) -> IntPoly2:
    """``t(G; x, y)`` of the multigraph with the given edge list.

    The first remaining edge is processed at each step: a loop contributes a
    factor ``y``, a bridge a factor ``x``, any other edge splits into
    deletion plus contraction. Isolated vertices do not matter.
    """
    memo: dict = {}

    def rec(remaining: tuple) -> IntPoly2:
        if not remaining:
            return IntPoly2.constant(1)
        if remaining in memo:
            return memo[remaining]
        (u, v), rest = remaining[0], remaining[1:]
        if u == v:
            result = _Y * rec(rest)
        elif _is_bridge(u, v, rest):
            result = _X * rec(_contract(u, v, rest))
        else:
            result = rec(rest) + rec(_contract(u, v, rest))
        memo[remaining] = result
        return result

    start = tuple(tuple(sorted(edge)) for edge in edges)
    result = rec(start)
    logging.debug("Tutte recursion memoized %d edge lists", len(memo))
    return result


def tutte_diagonal(plane: PlaneGraph) -> IntPoly1:
    """``t(G; x, x)``."""
    return tutte(plane.edges).diagonal()
