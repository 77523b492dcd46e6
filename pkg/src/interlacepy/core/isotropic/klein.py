"""Vectors over the Klein four-group ``K = {0, x, y, z}``.

``K`` is encoded as GF(2)^2 with ``x = (1, 0)``, ``y = (0, 1)`` and
``z = (1, 1)``; as an integer an element is ``a1 | a2 << 1``, so Klein
addition is XOR. A vector on ``n`` vertices packs into ``2n`` bits, vertex
``i`` at bits ``2i`` and ``2i + 1``.
"""

from __future__ import annotations

from attrs import field, frozen

from ...errors import InvalidIndexError, InvalidSystemError
from ..algebra.gf2 import parity

LETTERS = "0xyz"
ZERO, X, Y, Z = 0, 1, 2, 3
NONZERO = (X, Y, Z)


def klein_form(a: int, b: int) -> int:
    """``<a, b>`` on single elements: 1 iff both are nonzero and different."""
    return int(a != 0 and b != 0 and a != b)


def _even_mask(n: int) -> int:
    return int("01" * n, 2) if n else 0


def swap_halves(value: int, n: int) -> int:
    """Exchange the two bits of every coordinate."""
    even = _even_mask(n)
    return ((value & even) << 1) | ((value >> 1) & even)


def bilinear_form(a: int, b: int, n: int) -> int:
    """``<A, B> = sum_v <A_v, B_v>`` on packed vectors."""
    return parity(a & swap_halves(b, n))


def _as_values(values) -> tuple:
    if isinstance(values, str):
        try:
            return tuple(LETTERS.index(letter) for letter in values)
        except ValueError:
            raise InvalidSystemError(f"{values!r} is not a word over {LETTERS}") from None
    return tuple(int(v) for v in values)


@frozen
class KVector:
    """Map from the vertex labels to ``K``.

    example::

        KVector("ab", "xy")     # a -> x, b -> y
    """

    labels: tuple = field(converter=tuple)
    values: tuple = field(converter=_as_values)

    def __attrs_post_init__(self):
        if len(self.labels) != len(self.values):
            raise InvalidSystemError("one value per vertex is required")
        if any(not 0 <= v <= 3 for v in self.values):
            raise InvalidSystemError("Klein values are 0, x, y or z")

    @classmethod
    def from_bits(cls, labels, packed: int) -> "KVector":
        labels = tuple(labels)
        return cls(labels, [packed >> (2 * i) & 3 for i in range(len(labels))])

    @property
    def bits(self) -> int:
        return sum(v << (2 * i) for i, v in enumerate(self.values))

    def __getitem__(self, label) -> int:
        try:
            return self.values[self.labels.index(label)]
        except ValueError:
            raise InvalidIndexError(label, "vertex set") from None

    def __add__(self, other: "KVector") -> "KVector":
        return KVector(self.labels, [a ^ b for a, b in zip(self.values, other.values)])

    def form(self, other: "KVector") -> int:
        return sum(klein_form(a, b) for a, b in zip(self.values, other.values)) % 2

    def restrict(self, vertices) -> "KVector":
        """``X|P``: keep the values on ``P``, zero elsewhere."""
        keep = set(vertices)
        return KVector(
            self.labels, [v if label in keep else ZERO for label, v in zip(self.labels, self.values)]
        )

    def is_full(self) -> bool:
        """Whether the vector lies in ``(K')^V``, i.e. has no zero entry."""
        return all(self.values)

    def require_full(self, name: str = "vector"):
        if not self.is_full():
            raise InvalidSystemError(f"{name} {self} has a zero entry")

    def hat_basis(self) -> list:
        """Packed basis of ``X^ = {Y : Y_v in {0, X_v}}``."""
        return [v << (2 * i) for i, v in enumerate(self.values) if v]

    def __str__(self):
        return "".join(LETTERS[v] for v in self.values)
