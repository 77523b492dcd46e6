"""Interlace polynomials of set systems.

``q_delta`` and ``q_delta_global`` generalize ``q_N`` and ``Q`` from
adjacency matrices to arbitrary set systems, ``q_bar`` generalizes the
two-variable polynomial. Each has a subset sum and a recursive pipeline.
"""

from __future__ import annotations

import logging
from collections import Counter

from attrs import frozen

from ...errors import InvalidIndexError, UndefinedDistanceError, UnsupportedInputError
from ..algebra.gf2 import popcount
from ..algebra.polynomial import IntPoly1, IntPoly2, shift_ratio_substitute
from .set_system import SetSystem, is_vf_safe


def _require_feasible(system: SetSystem):
    if not system.feasible:
        raise UndefinedDistanceError("set system has no feasible set")


def q_delta(system: SetSystem) -> IntPoly1:
    """``q_delta(M; x) = sum over X of x^{d_M(X)}``."""
    _require_feasible(system)
    return IntPoly1(Counter(system.distances()))


def q_delta_recursive(system: SetSystem) -> IntPoly1:
    """``q_delta(D) = q_delta(D \\ e) + q_delta(D*e \\ e)`` for ``e`` neither
    a loop nor a coloop; ``(x + 1)^|E|`` once every element is one of them.
    """
    _require_feasible(system)
    memo: dict = {}
    base = IntPoly1({0: 1, 1: 1})

    def rec(d: SetSystem) -> IntPoly1:
        if d in memo:
            return memo[d]
        e = next((e for e in d.ground if not d.is_loop(e) and not d.is_coloop(e)), None)
        if e is None:
            result = base ** d.n
        else:
            result = rec(d.delete(e)) + rec(d.twist([e]).delete(e))
        memo[d] = result
        return result

    result = rec(system)
    logging.debug("q_delta recursion visited %d set systems", len(memo))
    return result


def q_delta_twist_sides(system: SetSystem, subset, e) -> tuple:
    """Both sides of ``q_delta(D) = q_delta(D \\ e) + q_delta(D*X \\ e)``.

    The identity needs the empty set and ``X`` feasible and ``e`` in ``X``.

    :return: ``(left, right)``
    """
    x = system.mask(subset)
    if 0 not in system.feasible:
        raise UnsupportedInputError("the twist recurrence needs the empty set feasible")
    if x not in system.feasible:
        raise UnsupportedInputError(f"{system.labels_of(x)} is not feasible")
    if not x >> system.index(e) & 1:
        raise InvalidIndexError(e, "twisted subset")
    left = q_delta(system)
    right = q_delta(system.delete(e)) + q_delta(system.twist(subset).delete(e))
    return left, right


def _superset_sums(dist: list, z: int, n: int) -> Counter:
    counts: Counter = Counter()
    free = ((1 << n) - 1) & ~z
    sub = free
    while True:
        counts[dist[z | sub]] += 1
        if not sub:
            break
        sub = (sub - 1) & free
    return counts


def q_delta_global(system: SetSystem) -> IntPoly1:
    """``Q_delta(M; x) = sum over Z within X of x^{d_{M+Z}(X)}``.

    :raise UndefinedDistanceError: some ``M + Z`` has no feasible set; the
        error carries ``Z``
    """
    counts: Counter = Counter()
    for z in range(1 << system.n):
        labels = system.labels_of(z)
        complemented = system.loop_complement(labels)
        if not complemented.feasible:
            raise UndefinedDistanceError(
                f"M + {list(labels)} has no feasible set", loop_complemented=labels
            )
        counts.update(_superset_sums(complemented.distances(), z, system.n))
    return IntPoly1(counts)


def _global_branch(d: SetSystem):
    for e in d.ground:
        if d.is_loop(e) or d.is_coloop(e):
            continue
        if not d.dual_pivot([e]).is_coloop(e):
            return e
    return None


def q_delta_global_recursive(system: SetSystem) -> IntPoly1:
    """Three-branch recursion on vf-safe delta-matroids:
    ``Q_delta(D) = Q_delta(D \\ e) + Q_delta(D*e \\ e) + Q_delta(D *bar e \\ e)``
    for ``e`` neither a loop nor a coloop of ``D`` and no coloop of
    ``D *bar e``. Systems of loops and coloops give ``(x + 2)^|E|``; a system
    with no admissible element falls back to the subset sum.
    """
    _require_feasible(system)
    memo: dict = {}
    base = IntPoly1({0: 2, 1: 1})
    fallbacks = 0

    def rec(d: SetSystem) -> IntPoly1:
        nonlocal fallbacks
        if d in memo:
            return memo[d]
        if all(d.is_loop(e) or d.is_coloop(e) for e in d.ground):
            result = base ** d.n
        else:
            e = _global_branch(d)
            if e is None:
                fallbacks += 1
                result = q_delta_global(d)
            else:
                result = (
                    rec(d.delete(e))
                    + rec(d.twist([e]).delete(e))
                    + rec(d.dual_pivot([e]).delete(e))
                )
        memo[d] = result
        return result

    result = rec(system)
    logging.debug(
        "Q_delta recursion visited %d set systems, %d subset-sum fallbacks", len(memo), fallbacks
    )
    return result


def q_bar(system: SetSystem) -> IntPoly2:
    """``q_bar(M; x, y) = sum over X of x^{|X|} y^{d_M(X)}``."""
    _require_feasible(system)
    counts = Counter((popcount(x), d) for x, d in enumerate(system.distances()))
    return IntPoly2(counts)


def q_bar_printed(system: SetSystem) -> IntPoly2:
    """``sum over X of x^{|X|} (y - 1)^{d_M(X)}``, the variant that fails the
    relation with the two-variable graph polynomial; kept for comparison."""
    _require_feasible(system)
    counts = Counter((popcount(x), d) for x, d in enumerate(system.distances()))
    return IntPoly2.from_exponent_counts(counts, 0, -1)


def q_bar_recursive(system: SetSystem) -> IntPoly2:
    """Recursion on the first element: a loop gives ``(1 + xy) q_bar(D \\ u)``,
    a coloop ``(x + y) q_bar(D*u \\ u)``, anything else
    ``q_bar(D \\ u) + x q_bar(D*u \\ u)``."""
    _require_feasible(system)
    loop_factor = IntPoly2({(0, 0): 1, (1, 1): 1})
    coloop_factor = IntPoly2({(1, 0): 1, (0, 1): 1})
    x = IntPoly2.monomial(1, 0)
    memo: dict = {}

    def rec(d: SetSystem) -> IntPoly2:
        if d in memo:
            return memo[d]
        if not d.n:
            result = IntPoly2.constant(1)
        else:
            u = d.ground[0]
            if d.is_loop(u):
                result = loop_factor * rec(d.delete(u))
            elif d.is_coloop(u):
                result = coloop_factor * rec(d.twist([u]).delete(u))
            else:
                result = rec(d.delete(u)) + x * rec(d.twist([u]).delete(u))
        memo[d] = result
        return result

    return rec(system)


def q_bar_relation_sides(system: SetSystem, q_twovar: IntPoly2) -> tuple:
    """Both sides of ``q_bar(M_G; x - 1, (y - 1)/(x - 1)) = q(G; x, y)`` with
    the power of ``x - 1`` cleared.

    :return: ``(left, right)``, both polynomials
    """
    left, lift = shift_ratio_substitute(q_bar(system))
    right = q_twovar * (IntPoly2({(1, 0): 1, (0, 0): -1}) ** lift)
    return left, right


@frozen
class DeltaEvaluation:
    """One evaluation identity with its two sides."""

    name: str
    left: int
    right: int
    holds: bool


def _odd_multiple(value: int, base: int) -> bool:
    if base == 0:
        return value == 0
    quotient, remainder = divmod(value, base)
    return remainder == 0 and quotient % 2 == 1


def delta_evaluations(system: SetSystem, vf_safe=None, binary: bool = False) -> list:
    """Evaluations of ``q_delta`` and ``Q_delta`` that hold for a delta-matroid.

    The vf-safe identities are included when ``vf_safe`` is true or when the
    bounded search finds the system vf-safe; binary systems are vf-safe.

    :return: list of :class:`DeltaEvaluation`
    """
    _require_feasible(system)
    n = system.n
    q = q_delta(system)
    results = [
        DeltaEvaluation("q_delta(1) = 2^n", q.evaluate(1), 2**n, q.evaluate(1) == 2**n),
        DeltaEvaluation(
            "q_delta(0) = |F|", q.evaluate(0), len(system.feasible),
            q.evaluate(0) == len(system.feasible),
        ),
    ]
    if len({popcount(f) & 1 for f in system.feasible}) == 1:
        results.append(
            DeltaEvaluation("q_delta(-1) = 0 for equal parity", q.evaluate(-1), 0, q.evaluate(-1) == 0)
        )
    if binary:
        vf_safe = True
    elif vf_safe is None:
        vf_safe = is_vf_safe(system)
    if vf_safe:
        big_q = q_delta_global(system)
        results.append(
            DeltaEvaluation("Q_delta(-2) = 0 for vf-safe", big_q.evaluate(-2), 0, big_q.evaluate(-2) == 0)
        )
    if binary:
        at_two, at_minus_two = q.evaluate(2), q.evaluate(-2)
        results.append(
            DeltaEvaluation(
                "q_delta(2) = odd * q_delta(-2) for binary", at_two, at_minus_two,
                _odd_multiple(at_two, at_minus_two),
            )
        )
    return results


def dual_pivot_evaluation(system: SetSystem) -> dict:
    """Compare ``q_delta(-2)`` with ``(-1)^n (-2)^d`` for the two candidate
    distances ``d_{D *bar E}(empty)`` and ``d_{D + E}(E)``.

    The identity is stated without the argument of the distance, so both
    readings are reported and neither is treated as a failure.
    """
    _require_feasible(system)
    n = system.n
    value = q_delta(system).evaluate(-2)
    everything = system.ground
    readings = {}
    for name, d in (
        ("d_{D *bar E}(empty)", _distance_or_none(system.dual_pivot(everything), ())),
        ("d_{D + E}(E)", _distance_or_none(system.loop_complement(everything), everything)),
    ):
        predicted = None if d is None else (-1) ** n * (-2) ** d
        readings[name] = {"distance": d, "predicted": predicted, "holds": predicted == value}
    return {"q_delta(-2)": value, "readings": readings}


def _distance_or_none(system: SetSystem, labels):
    try:
        return system.distance(labels)
    except UndefinedDistanceError:
        return None

