"""Seeded random instances for the check suites.

Every generator draws from a ``numpy.random.Generator`` (PCG64) created by
:func:`make_rng`, so a seed fixes every instance of a suite run.
"""

from __future__ import annotations

import numpy as np

from ..core.algebra.gf2 import Gf2Matrix
from ..core.delta.set_system import SetSystem, adjacency_delta_matroid
from ..core.eulerian.hosts import FourRegularGraph, TwoInTwoOutDigraph
from ..core.eulerian.transitions import TransitionSystem
from ..core.graphs.graph import Graph
from ..core.isotropic.klein import NONZERO, KVector


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_order(rng: np.random.Generator, low: int, high: int) -> int:
    """Uniform integer in ``low .. high``, both included."""
    return int(rng.integers(low, high + 1))


def random_subset(rng: np.random.Generator, labels) -> list:
    labels = list(labels)
    chosen = rng.random(len(labels)) < 0.5
    return [label for label, keep in zip(labels, chosen) if keep]


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5, loops: bool = False) -> Graph:
    """Erdos-Renyi ``G(n, p)`` on ``"0" .. "n-1"``; with ``loops`` every vertex
    is also looped with probability one half."""
    adjacency = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adjacency[i] |= 1 << j
                adjacency[j] |= 1 << i
    loop_mask = 0
    if loops:
        for i in range(n):
            if rng.random() < 0.5:
                loop_mask |= 1 << i
    return Graph([str(i) for i in range(n)], adjacency, loop_mask)


def random_symmetric_matrix(rng: np.random.Generator, n: int) -> Gf2Matrix:
    upper = np.triu(rng.integers(0, 2, size=(n, n)))
    return Gf2Matrix.from_array(upper + np.triu(upper, 1).T)


def _host_edges(rng: np.random.Generator, n: int) -> list:
    # a shuffled double occurrence word read as a closed walk
    word = rng.permutation(np.repeat(np.arange(n), 2)).tolist()
    return [(word[i], word[(i + 1) % len(word)]) for i in range(len(word))]


def random_digraph_host(rng: np.random.Generator, n: int) -> TwoInTwoOutDigraph:
    """Connected two-in two-out digraph traced by a random Eulerian circuit."""
    return TwoInTwoOutDigraph([str(i) for i in range(n)], _host_edges(rng, n))


def random_host(rng: np.random.Generator, n: int) -> FourRegularGraph:
    """Connected 4-regular multigraph, the underlying graph of
    :func:`random_digraph_host`."""
    return FourRegularGraph([str(i) for i in range(n)], _host_edges(rng, n))


def random_transition_system(rng: np.random.Generator, host: FourRegularGraph) -> TransitionSystem:
    choices = []
    for v in range(host.n):
        allowed = host.allowed_pairings(v)
        choices.append(allowed[int(rng.integers(len(allowed)))])
    return TransitionSystem(host, choices)


def random_labelling(rng: np.random.Generator, n: int) -> list:
    """A random bijection ``{0, 1, 2} -> {x, y, z}`` per vertex."""
    return [tuple(int(k) for k in rng.permutation(NONZERO)) for _ in range(n)]


def random_presentation(rng: np.random.Generator, graph: Graph) -> tuple:
    """Random ``(A, B)`` with nonzero entries and ``A_v != B_v``."""
    a_values, b_values = [], []
    for _ in range(graph.n):
        a, b = rng.choice(NONZERO, size=2, replace=False)
        a_values.append(int(a))
        b_values.append(int(b))
    return KVector(graph.labels, a_values), KVector(graph.labels, b_values)


def random_binary_delta_matroid(rng: np.random.Generator, n: int) -> SetSystem:
    """Twist of the adjacency delta-matroid of a random looped graph, hence
    representable over GF(2)."""
    graph = random_graph(rng, n, loops=True)
    system = adjacency_delta_matroid(graph)
    return system.twist(random_subset(rng, system.ground))


def random_set_system(rng: np.random.Generator, n: int) -> SetSystem:
    """Arbitrary set system with at least one feasible set."""
    masks = [m for m in range(1 << n) if rng.random() < 0.4]
    if not masks:
        masks = [int(rng.integers(1 << n))]
    return SetSystem([str(i) for i in range(n)], masks)
