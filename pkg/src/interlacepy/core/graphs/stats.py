"""Structural statistics of graphs used by the evaluation theorems."""

from __future__ import annotations

import logging
from collections import deque

import networkx as nx
from attrs import frozen

from ...errors import ResourceLimitError, UnsupportedInputError
from .graph import Graph

DEFAULT_ORBIT_CAP = 50_000


@frozen
class GraphStats:
    components: int
    independence_number: int
    pivot_orbit_max_independence: int
    orbit_size: int
    orbit_complete: bool = True


def component_count(graph: Graph) -> int:
    if graph.n == 0:
        return 0
    return nx.number_connected_components(graph.to_networkx())


def independence_number(graph: Graph) -> int:
    """Size of a largest independent set; loops are ignored."""
    if graph.n == 0:
        return 0
    simple = nx.Graph(graph.to_networkx())
    simple.remove_edges_from(nx.selfloop_edges(simple))
    _clique, size = nx.max_weight_clique(nx.complement(simple), weight=None)
    return size


def pivot_orbit(graph: Graph, cap: int = DEFAULT_ORBIT_CAP) -> list:
    """Every graph reachable from ``graph`` by pivots on edges, in BFS order.

    :raise ResourceLimitError: more than ``cap`` graphs were found; the
        partial orbit is attached
    """
    if not graph.is_simple:
        raise UnsupportedInputError("pivot orbits are defined for simple graphs")
    seen = {graph}
    order = [graph]
    queue = deque([graph])
    while queue:
        current = queue.popleft()
        for a, b in current.edges():
            reached = current.pivot(a, b)
            if reached in seen:
                continue
            if len(seen) >= cap:
                raise ResourceLimitError("orbit_cap", cap, partial=order)
            seen.add(reached)
            order.append(reached)
            queue.append(reached)
    logging.debug("pivot orbit of %s has %d graphs", graph, len(order))
    return order


def graph_stats(graph: Graph, orbit_cap: int = DEFAULT_ORBIT_CAP) -> GraphStats:
    """Component count, independence number and the largest independence
    number over the pivot orbit ``[G]``.

    :raise ResourceLimitError: orbit cap exceeded; ``partial`` holds the stats
        over the graphs found so far with ``orbit_complete=False``
    """
    components = component_count(graph)
    alpha = independence_number(graph)
    try:
        orbit = pivot_orbit(graph, orbit_cap)
    except ResourceLimitError as exc:
        found = exc.partial
        partial = GraphStats(
            components,
            alpha,
            max(independence_number(h) for h in found),
            len(found),
            orbit_complete=False,
        )
        raise ResourceLimitError("orbit_cap", orbit_cap, partial=partial) from exc
    return GraphStats(
        components, alpha, max(independence_number(h) for h in orbit), len(orbit)
    )
