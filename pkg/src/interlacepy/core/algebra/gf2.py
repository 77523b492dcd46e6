"""Linear algebra over GF(2) on bit-packed rows.

A row is a Python ``int`` whose bit ``j`` holds the entry in column ``j``;
elimination is a sequence of XORs on whole rows. Python integers have no word
size, so rows of any length are a single object and XOR works on all of their
machine words at once.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np
from attrs import field, frozen

from ...errors import InvalidIndexError, PivotNotDefinedError, UnsupportedInputError


def popcount(value: int) -> int:
    return bin(value).count("1")


def parity(value: int) -> int:
    return popcount(value) & 1


def bits(mask: int) -> Iterable[int]:
    """Positions of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def gf2_reduce(rows: Iterable[int]) -> dict:
    """Echelon basis of the row span, as ``{leading bit: row}``.

    Each row is reduced against the basis and inserted if a nonzero remainder
    is left.
    """
    basis: dict = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            if lead not in basis:
                basis[lead] = row
                break
            row ^= basis[lead]
    return basis


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of a family of bit rows."""
    return len(gf2_reduce(rows))


def in_span(basis: dict, row: int) -> bool:
    """Membership test against a basis built by :func:`gf2_reduce`."""
    while row:
        lead = row.bit_length() - 1
        if lead not in basis:
            return False
        row ^= basis[lead]
    return True


def gf2_kernel(rows: Iterable[int], width: int) -> list:
    """Basis of ``{x : r . x = 0 for every row r}`` over ``width`` columns."""
    pivots: dict = {}
    for row in rows:
        for col, pivot_row in pivots.items():
            if row >> col & 1:
                row ^= pivot_row
        if not row:
            continue
        col = (row & -row).bit_length() - 1
        for other in list(pivots):
            if pivots[other] >> col & 1:
                pivots[other] ^= row
        pivots[col] = row
    basis = []
    for free in range(width):
        if free in pivots:
            continue
        vector = 1 << free
        for col, pivot_row in pivots.items():
            if pivot_row >> free & 1:
                vector |= 1 << col
        basis.append(vector)
    return basis


def gf2_inverse(rows: Sequence[int]) -> Optional[list]:
    """Gauss-Jordan inverse of the square bit matrix ``rows``; ``None`` when
    singular. The empty matrix is its own inverse."""
    size = len(rows)
    work = list(rows)
    inverse = [1 << i for i in range(size)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r] >> col & 1), None)
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        inverse[col], inverse[pivot] = inverse[pivot], inverse[col]
        for r in range(size):
            if r != col and work[r] >> col & 1:
                work[r] ^= work[col]
                inverse[r] ^= inverse[col]
    return inverse


def gf2_product(left: Sequence[int], right: Sequence[int]) -> list:
    """Bit-row product ``left @ right``."""
    product = []
    for row in left:
        acc = 0
        for k in bits(row):
            acc ^= right[k]
        product.append(acc)
    return product


def _check_symmetric(rows: Sequence[int]) -> bool:
    size = len(rows)
    for i in range(size):
        for j in range(i + 1, size):
            if (rows[i] >> j & 1) != (rows[j] >> i & 1):
                return False
    return True


@frozen
class Gf2Matrix:
    """Square symmetric 0/1 matrix over GF(2) indexed by labels.

    :param labels: ordered element labels; position ``i`` is row/column ``i``
    :param rows: bit rows, bit ``j`` of ``rows[i]`` is entry ``(i, j)``

    example::

        >>> m = Gf2Matrix.from_lists(["a", "b"], [[0, 1], [1, 0]])
        >>> m.rank_nullity()
        (2, 0)
    """

    labels: tuple = field(converter=tuple)
    rows: tuple = field(converter=tuple)
    _positions: dict = field(init=False, repr=False, eq=False)

    def __attrs_post_init__(self):
        if len(self.labels) != len(self.rows):
            raise UnsupportedInputError("matrix must be square")
        if len(set(self.labels)) != len(self.labels):
            raise UnsupportedInputError("duplicate labels in index set")
        width = (1 << len(self.labels)) - 1
        if any(row & ~width for row in self.rows):
            raise UnsupportedInputError("row has entries outside the index set")
        if not _check_symmetric(self.rows):
            raise UnsupportedInputError("matrix is not symmetric")
        object.__setattr__(
            self, "_positions", {label: i for i, label in enumerate(self.labels)}
        )

    @classmethod
    def zeros(cls, labels) -> "Gf2Matrix":
        labels = tuple(labels)
        return cls(labels, [0] * len(labels))

    @classmethod
    def identity(cls, labels) -> "Gf2Matrix":
        labels = tuple(labels)
        return cls(labels, [1 << i for i in range(len(labels))])

    @classmethod
    def from_lists(cls, labels, entries) -> "Gf2Matrix":
        rows = [sum((int(e) & 1) << j for j, e in enumerate(row)) for row in entries]
        return cls(labels, rows)

    @classmethod
    def from_array(cls, array: np.ndarray, labels=None) -> "Gf2Matrix":
        array = np.asarray(array, dtype=np.uint8) % 2
        if labels is None:
            labels = [str(i) for i in range(array.shape[0])]
        return cls.from_lists(labels, array.tolist())

    def to_array(self) -> np.ndarray:
        size = self.dimension
        array = np.zeros((size, size), dtype=np.uint8)
        for i, row in enumerate(self.rows):
            for j in bits(row):
                array[i, j] = 1
        return array

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self._positions[label]
        except KeyError:
            raise InvalidIndexError(label) from None

    def mask(self, subset=None) -> int:
        """Bit mask of ``subset`` (all labels when ``None``)."""
        if subset is None:
            return (1 << self.dimension) - 1
        mask = 0
        for label in subset:
            mask |= 1 << self.index(label)
        return mask

    def labels_of(self, mask: int) -> tuple:
        return tuple(self.labels[i] for i in bits(mask))

    def entry(self, u, v) -> int:
        return self.rows[self.index(u)] >> self.index(v) & 1

    def rank_of_mask(self, mask: int) -> int:
        """Rank of the principal submatrix selected by a bit mask."""
        return gf2_rank(self.rows[i] & mask for i in bits(mask))

    def rank_nullity(self, subset=None) -> tuple:
        """Rank and nullity of the principal submatrix ``M[subset]``.

        :param subset: labels of the submatrix, whole index set by default
        :return: ``(rank, nullity)`` with ``rank + nullity == len(subset)``
        """
        mask = self.mask(subset)
        rank = self.rank_of_mask(mask)
        return rank, popcount(mask) - rank

    def is_invertible(self, subset=None) -> bool:
        mask = self.mask(subset)
        return self.rank_of_mask(mask) == popcount(mask)

    def principal_pivot_transform(self, subset) -> "Gf2Matrix":
        """Principal pivot transform ``M * T``.

        Over GF(2) the block formula needs no signs. The result is computed as
        ``V @ inv(U)`` where ``U`` maps ``x`` to ``(y_T, x_rest)`` and ``V``
        maps ``x`` to ``(x_T, y_rest)`` for ``y = M x``.

        :raise PivotNotDefinedError: ``M[T]`` is singular
        """
        mask = self.mask(subset)
        size = self.dimension
        u_rows = []
        v_rows = []
        for i in range(size):
            if mask >> i & 1:
                u_rows.append(self.rows[i])
                v_rows.append(1 << i)
            else:
                u_rows.append(1 << i)
                v_rows.append(self.rows[i])
        u_inverse = gf2_inverse(u_rows)
        if u_inverse is None:
            raise PivotNotDefinedError(self.labels_of(mask))
        return Gf2Matrix(self.labels, gf2_product(v_rows, u_inverse))

    def matvec(self, vector: int) -> int:
        """``M x`` for a bit vector ``x``."""
        result = 0
        for i, row in enumerate(self.rows):
            if parity(row & vector):
                result |= 1 << i
        return result

    def restrict(self, keep) -> "Gf2Matrix":
        """Principal submatrix on ``keep`` as a matrix of its own, in the
        original label order."""
        keep_mask = self.mask(keep)
        old = list(bits(keep_mask))
        new_rows = []
        for i in old:
            row = self.rows[i]
            new_rows.append(sum(1 << k for k, j in enumerate(old) if row >> j & 1))
        return Gf2Matrix([self.labels[i] for i in old], new_rows)

    def delete(self, *labels) -> "Gf2Matrix":
        """``A \\ v``: drop the rows and columns of ``labels``."""
        drop = self.mask(labels)
        return self.restrict(self.labels_of(self.mask() & ~drop))

    def swap_labels(self, a, b) -> "Gf2Matrix":
        """Exchange rows and columns ``a`` and ``b``; labels stay in place."""
        i, j = self.index(a), self.index(b)
        order = list(range(self.dimension))
        order[i], order[j] = j, i
        rows = []
        for k in order:
            row = self.rows[k]
            rows.append(sum(1 << m for m, src in enumerate(order) if row >> src & 1))
        return Gf2Matrix(self.labels, rows)

    def __str__(self):
        return "\n".join(
            " ".join(str(row >> j & 1) for j in range(self.dimension))
            for row in self.rows
        )


def rank_nullity(matrix: Gf2Matrix, subset=None) -> tuple:
    return matrix.rank_nullity(subset)


def principal_pivot_transform(matrix: Gf2Matrix, subset) -> Gf2Matrix:
    return matrix.principal_pivot_transform(subset)
