"""Recursive pipelines of the interlace polynomials.

Every recursion branches on the lexicographically smallest admissible edge
(or looped vertex) and memoizes on the labeled graph; no isomorphism
reduction is attempted.
"""

from __future__ import annotations

import logging

from ...errors import InvalidIndexError, PivotNotDefinedError, UnsupportedInputError
from ..algebra.gf2 import Gf2Matrix, bits
from ..algebra.polynomial import IntPoly1, IntPoly2
from ..graphs.graph import Graph


def _require_simple(graph: Graph, name: str):
    if not graph.is_simple:
        raise UnsupportedInputError(
            f"{name} is defined for simple graphs; use the two-variable "
            "polynomial at x = 2 for looped graphs"
        )


def q_nullity_recursive(graph: Graph) -> IntPoly1:
    """``q_N(G) = q_N(G \\ a) + q_N(G^{ab} \\ b)``, ``q_N(E_n) = x^n``."""
    _require_simple(graph, "q_nullity_recursive")
    memo: dict = {}

    def rec(g: Graph) -> IntPoly1:
        if g in memo:
            return memo[g]
        edge = g.first_edge()
        if edge is None:
            result = IntPoly1.monomial(g.n)
        else:
            a, b = edge
            result = rec(g.delete(a)) + rec(g.pivot(a, b).delete(b))
        memo[g] = result
        return result

    result = rec(graph)
    logging.debug("q_N recursion visited %d graphs", len(memo))
    return result


def q_nullity_local(graph: Graph) -> IntPoly1:
    """Local complementation form ``q_N(G) = q_N(G \\ a) + q_N(G*a*b*a \\ a)``."""
    _require_simple(graph, "q_nullity_local")
    memo: dict = {}

    def rec(g: Graph) -> IntPoly1:
        if g in memo:
            return memo[g]
        edge = g.first_edge()
        if edge is None:
            result = IntPoly1.monomial(g.n)
        else:
            a, b = edge
            result = rec(g.delete(a)) + rec(
                g.local_complement_sequence((a, b, a)).delete(a)
            )
        memo[g] = result
        return result

    return rec(graph)


def Q_recursive(graph: Graph) -> IntPoly1:
    """``Q(G) = Q(G \\ a) + Q(G*a \\ a) + Q(G^{ab} \\ b)``, ``Q(E_n) = x^n``.

    Looped graphs are served by the state sum only.
    """
    if not graph.is_simple:
        raise UnsupportedInputError(
            "Q_recursive is defined for simple graphs; use Q_statesum for looped graphs"
        )
    memo: dict = {}

    def rec(g: Graph) -> IntPoly1:
        if g in memo:
            return memo[g]
        edge = g.first_edge()
        if edge is None:
            result = IntPoly1.monomial(g.n)
        else:
            a, b = edge
            result = (
                rec(g.delete(a))
                + rec(g.local_complement(a).delete(a))
                + rec(g.pivot(a, b).delete(b))
            )
        memo[g] = result
        return result

    result = rec(graph)
    logging.debug("Q recursion visited %d graphs", len(memo))
    return result


# (x-1)^2 - 1
_PIVOT_FACTOR = IntPoly2({(2, 0): 1, (1, 0): -2})
_X_MINUS_ONE = IntPoly2({(1, 0): 1, (0, 0): -1})


def q_twovar_recursive(graph: Graph) -> IntPoly2:
    """Two-variable interlace polynomial by recursion.

    A looped vertex ``a`` gives ``q(G \\ a) + (x-1) q(G*a \\ a)``, where the
    local complement also toggles the loops on ``N(a)``. Otherwise an edge
    ``ab`` gives ``q(G \\ a) + q(G^{ab} \\ b) + ((x-1)^2 - 1) q(G^{ab} \\ a \\ b)``.
    The base case is ``q(E_n) = y^n``.
    """
    memo: dict = {}

    def rec(g: Graph) -> IntPoly2:
        if g in memo:
            return memo[g]
        if g.loops:
            a = min(g.looped_vertices())
            result = rec(g.delete(a)) + _X_MINUS_ONE * rec(
                g.local_complement(a, toggle_loops=True).delete(a)
            )
        else:
            edge = g.first_edge()
            if edge is None:
                result = IntPoly2.monomial(0, g.n)
            else:
                a, b = edge
                pivoted = g.pivot(a, b)
                result = (
                    rec(g.delete(a))
                    + rec(pivoted.delete(b))
                    + _PIVOT_FACTOR * rec(pivoted.delete(a, b))
                )
        memo[g] = result
        return result

    result = rec(graph)
    logging.debug("two-variable recursion visited %d graphs", len(memo))
    return result


def _pivot_set(matrix: Gf2Matrix):
    """An invertible principal index set: a diagonal one, else an
    off-diagonal one. ``None`` for the zero matrix."""
    for i, row in enumerate(matrix.rows):
        if row >> i & 1:
            return (matrix.labels[i],)
    for i, row in enumerate(matrix.rows):
        for j in bits(row):
            return matrix.labels[i], matrix.labels[j]
    return None


def q_matrix_recursive(matrix: Gf2Matrix) -> IntPoly1:
    """``q_m(A) = q_m(A \\ v) + q_m((A*T) \\ v)`` for an invertible ``A[T]``
    and ``v`` in ``T``; the zero matrix gives ``x^n``."""
    memo: dict = {}

    def rec(a: Gf2Matrix) -> IntPoly1:
        if a in memo:
            return memo[a]
        subset = _pivot_set(a)
        if subset is None:
            result = IntPoly1.monomial(a.dimension)
        else:
            v = subset[0]
            result = rec(a.delete(v)) + rec(a.principal_pivot_transform(subset).delete(v))
        memo[a] = result
        return result

    return rec(matrix)


def q_matrix_recursion_sides(matrix: Gf2Matrix, subset, v, q_m) -> tuple:
    """Both sides of the matrix recursion for a given ``(T, v)``.

    :param q_m: the pipeline used to evaluate each side
    :return: ``(q_m(A), q_m(A \\ v) + q_m((A*T) \\ v))``
    """
    subset = tuple(subset)
    if v not in subset:
        raise InvalidIndexError(v, "pivot set")
    if not matrix.is_invertible(subset):
        raise PivotNotDefinedError(subset)
    rhs = q_m(matrix.delete(v)) + q_m(matrix.principal_pivot_transform(subset).delete(v))
    return q_m(matrix), rhs
