"""State-sum (closed form) pipelines of the interlace polynomials.

Each sum runs over vertex subsets ``T`` encoded as bit masks and only records
how often each rank/nullity occurs; the shifted powers are expanded once at
the end.
"""

from __future__ import annotations

import logging
from collections import Counter

from ...errors import ResourceLimitError
from ..algebra.gf2 import Gf2Matrix, gf2_rank, popcount
from ..algebra.polynomial import IntPoly1, IntPoly2
from ..graphs.graph import Graph

DEFAULT_STATESUM_MAX_N = 20
DEFAULT_GLOBAL_MAX_N = 13


def _check_size(n: int, cap: int, cap_name: str):
    if n > cap:
        raise ResourceLimitError(cap_name, cap)


def rank_counts(matrix: Gf2Matrix) -> Counter:
    """``{(rank, nullity): number of principal submatrices}`` over all
    subsets of the index set."""
    counts: Counter = Counter()
    for mask in range(1 << matrix.dimension):
        rank = matrix.rank_of_mask(mask)
        counts[(rank, popcount(mask) - rank)] += 1
    logging.debug("rank counts over %d subsets: %s", 1 << matrix.dimension, counts)
    return counts


def q_matrix(matrix: Gf2Matrix, max_n: int = DEFAULT_STATESUM_MAX_N) -> IntPoly1:
    """Interlace polynomial of a symmetric GF(2) matrix,
    ``sum_T (x-1)^{n(A[T])}``."""
    _check_size(matrix.dimension, max_n, "statesum_max_n")
    nullities: Counter = Counter()
    for (_rank, nullity), count in rank_counts(matrix).items():
        nullities[nullity] += count
    return IntPoly1.from_exponent_counts(nullities, -1)


def q_nullity_statesum(graph: Graph, max_n: int = DEFAULT_STATESUM_MAX_N) -> IntPoly1:
    """Vertex-nullity form of ``q_N``; loops enter as diagonal ones."""
    return q_matrix(graph.adjacency_matrix(), max_n)


def q_twovar_statesum(graph: Graph, max_n: int = DEFAULT_STATESUM_MAX_N) -> IntPoly2:
    """``q(G; x, y) = sum_T (x-1)^{r(G[T])} (y-1)^{n(G[T])}``."""
    _check_size(graph.n, max_n, "statesum_max_n")
    counts = rank_counts(graph.adjacency_matrix())
    return IntPoly2.from_exponent_counts(counts, -1, -1)


def vertex_rank_polynomial(graph: Graph, max_n: int = DEFAULT_STATESUM_MAX_N) -> IntPoly1:
    """``sum_T (x-1)^{r(G[T])}``, the two-variable polynomial at ``y = 2``."""
    _check_size(graph.n, max_n, "statesum_max_n")
    ranks: Counter = Counter()
    for (rank, _nullity), count in rank_counts(graph.adjacency_matrix()).items():
        ranks[rank] += count
    return IntPoly1.from_exponent_counts(ranks, -1)


def global_nullity_counts(graph: Graph) -> Counter:
    """``{nullity: count}`` over pairs ``S <= T`` of ``(G+S)[T]``."""
    rows = graph.adjacency_matrix().rows
    counts: Counter = Counter()
    for mask in range(1 << graph.n):
        size = popcount(mask)
        sub = mask
        while True:
            # S = sub toggles the diagonal on its vertices
            rank = gf2_rank(
                (rows[i] ^ (sub & (1 << i))) & mask
                for i in range(graph.n)
                if mask >> i & 1
            )
            counts[size - rank] += 1
            if sub == 0:
                break
            sub = (sub - 1) & mask
    return counts


def Q_statesum(graph: Graph, max_n: int = DEFAULT_GLOBAL_MAX_N) -> IntPoly1:
    """Global interlace polynomial ``Q(G; x) = sum_{S <= T} (x-2)^{n((G+S)[T])}``."""
    _check_size(graph.n, max_n, "global_max_n")
    return IntPoly1.from_exponent_counts(global_nullity_counts(graph), -2)
