"""Set systems and delta-matroids.

Feasible sets are bit masks over the ground set: element ``i`` of ``ground``
is bit ``i``.
"""

from __future__ import annotations

from collections import deque

from attrs import field, frozen

from ...errors import InvalidIndexError, UndefinedDistanceError, UnsupportedInputError
from ..algebra.gf2 import bits, popcount
from ..graphs.graph import Graph


def _frozen_masks(masks) -> frozenset:
    return frozenset(int(m) for m in masks)


def _drop_bit(mask: int, i: int) -> int:
    low = mask & ((1 << i) - 1)
    return low | ((mask >> (i + 1)) << i)


@frozen
class SetSystem:
    """``M = (E, F)``.

    :param ground: element labels of ``E``
    :param feasible: feasible sets as bit masks over ``ground``
    """

    ground: tuple = field(converter=tuple)
    feasible: frozenset = field(converter=_frozen_masks)

    def __attrs_post_init__(self):
        full = (1 << len(self.ground)) - 1
        if any(f & ~full for f in self.feasible):
            raise UnsupportedInputError("feasible set outside the ground set")

    @classmethod
    def from_sets(cls, ground, sets) -> "SetSystem":
        """Build from iterables of labels; strings are read letter by letter.

        example::

            SetSystem.from_sets("abc", ["abc", "ab", "ac", "bc", "b", "c", ""])
        """
        ground = tuple(ground)
        positions = {label: i for i, label in enumerate(ground)}
        masks = []
        for members in sets:
            mask = 0
            for label in members:
                if label not in positions:
                    raise InvalidIndexError(label, "ground set")
                mask |= 1 << positions[label]
            masks.append(mask)
        return cls(ground, masks)

    @property
    def n(self) -> int:
        return len(self.ground)

    @property
    def is_proper(self) -> bool:
        return self.n > 0

    def index(self, label) -> int:
        try:
            return self.ground.index(label)
        except ValueError:
            raise InvalidIndexError(label, "ground set") from None

    def mask(self, labels) -> int:
        result = 0
        for label in labels:
            result |= 1 << self.index(label)
        return result

    def labels_of(self, mask: int) -> tuple:
        return tuple(self.ground[i] for i in bits(mask))

    def sets(self) -> list:
        """Feasible sets as label tuples, ordered by size then position."""
        ordered = sorted(self.feasible, key=lambda m: (popcount(m), tuple(bits(m))))
        return [self.labels_of(m) for m in ordered]

    def is_loop(self, e) -> bool:
        """``e`` lies in no feasible set."""
        bit = 1 << self.index(e)
        return all(not f & bit for f in self.feasible)

    def is_coloop(self, e) -> bool:
        """``e`` lies in every feasible set."""
        bit = 1 << self.index(e)
        return all(f & bit for f in self.feasible)

    def loops(self) -> tuple:
        return tuple(e for e in self.ground if self.is_loop(e))

    def coloops(self) -> tuple:
        return tuple(e for e in self.ground if self.is_coloop(e))

    def symmetric_exchange_check(self) -> bool:
        """For all feasible ``X, Y`` and ``u`` in ``X ^ Y`` some ``v`` in
        ``X ^ Y`` (possibly ``u``) makes ``X ^ {u, v}`` feasible."""
        for x in self.feasible:
            for y in self.feasible:
                diff = x ^ y
                for u in bits(diff):
                    swaps = (x ^ (1 << u) ^ ((1 << v) if v != u else 0) for v in bits(diff))
                    if not any(s in self.feasible for s in swaps):
                        return False
        return True

    def is_delta_matroid(self) -> bool:
        return self.is_proper and self.symmetric_exchange_check()

    # minors

    def _without(self, i: int, masks) -> "SetSystem":
        ground = self.ground[:i] + self.ground[i + 1:]
        return SetSystem(ground, (_drop_bit(m, i) for m in masks))

    def delete(self, e) -> "SetSystem":
        """``M \\ e``; a coloop is contracted instead."""
        i = self.index(e)
        if self.feasible and self.is_coloop(e):
            return self.contract(e)
        return self._without(i, (f for f in self.feasible if not f >> i & 1))

    def contract(self, e) -> "SetSystem":
        """``M / e``; a loop is deleted instead."""
        i = self.index(e)
        if self.feasible and self.is_loop(e):
            return self._without(i, self.feasible)
        return self._without(i, (f for f in self.feasible if f >> i & 1))

    # the twist / loop complement algebra

    def twist(self, labels) -> "SetSystem":
        """``M * X``."""
        x = self.mask(labels)
        return SetSystem(self.ground, (f ^ x for f in self.feasible))

    def loop_complement(self, labels) -> "SetSystem":
        """``M + X``, one point at a time; the order does not matter."""
        family = set(self.feasible)
        for i in bits(self.mask(labels)):
            bit = 1 << i
            family ^= {f | bit for f in family if not f & bit}
        return SetSystem(self.ground, family)

    def dual_pivot(self, labels) -> "SetSystem":
        """``M *bar X``: ``*e +e *e`` at each point of ``X``."""
        system = self
        for e in self.labels_of(self.mask(labels)):
            system = system.twist([e]).loop_complement([e]).twist([e])
        return system

    def apply_op(self, op: str, argument) -> "SetSystem":
        """Apply ``delete``, ``contract``, ``twist``, ``loop_complement`` or
        ``dual_pivot``; the first two take an element, the others a subset
        or a single element."""
        if op in ("twist", "loop_complement", "dual_pivot") and isinstance(argument, str):
            argument = [argument]
        if op == "delete":
            return self.delete(argument)
        if op == "contract":
            return self.contract(argument)
        if op in ("twist", "loop_complement", "dual_pivot"):
            return getattr(self, op)(argument)
        raise ValueError(f"unknown set-system operation {op!r}")

    # distance

    def distance(self, labels) -> int:
        """``d_M(X) = min |F ^ X|`` over feasible ``F``."""
        if not self.feasible:
            raise UndefinedDistanceError("distance to a set system without feasible sets")
        x = self.mask(labels)
        return min(popcount(f ^ x) for f in self.feasible)

    def distances(self) -> list:
        """``d_M(X)`` for every mask ``X``, by breadth-first search over the
        cube from all feasible sets at once."""
        if not self.feasible:
            raise UndefinedDistanceError("distance to a set system without feasible sets")
        size = 1 << self.n
        dist = [-1] * size
        queue = deque()
        for f in self.feasible:
            dist[f] = 0
            queue.append(f)
        while queue:
            x = queue.popleft()
            for i in range(self.n):
                y = x ^ (1 << i)
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def __str__(self):
        shown = ", ".join("".join(map(str, s)) or "{}" for s in self.sets())
        return f"({''.join(map(str, self.ground))}, {{{shown}}})"


def adjacency_delta_matroid(graph: Graph) -> SetSystem:
    """``M_G``: the subsets ``X`` with ``A(G)[X]`` invertible over GF(2); the
    empty set is always feasible."""
    matrix = graph.adjacency_matrix()
    feasible = [
        mask for mask in range(1 << graph.n) if matrix.rank_of_mask(mask) == popcount(mask)
    ]
    return SetSystem(graph.labels, feasible)


def is_vf_safe(system: SetSystem, max_n: int = 4, cap: int = 100_000):
    """Whether every sequence of twists and loop complements yields a
    delta-matroid, searched exhaustively over single-point operations.

    :return: ``True`` / ``False``, or ``None`` when ``|E| > max_n``
    """
    if system.n > max_n:
        return None
    seen = {system}
    queue = deque([system])
    while queue:
        current = queue.popleft()
        if not current.is_delta_matroid():
            return False
        for e in current.ground:
            for step in (current.twist([e]), current.loop_complement([e])):
                if step not in seen:
                    if len(seen) >= cap:
                        return None
                    seen.add(step)
                    queue.append(step)
    return True
