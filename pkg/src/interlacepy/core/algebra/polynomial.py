"""Exact integer polynomials in one and two variables.

Coefficients are Python integers (arbitrary precision), stored sparsely as
sorted ``(exponent, coefficient)`` pairs with no zero coefficient, so two
polynomials are equal exactly when their term tuples are equal.
"""

from __future__ import annotations

from collections import Counter
from math import comb
from typing import Iterable, Mapping, Union

from attrs import field, frozen


def _normalize(terms) -> tuple:
    if isinstance(terms, Mapping):
        items = terms.items()
    else:
        items = terms
    merged: Counter = Counter()
    for key, value in items:
        merged[key] += value
    return tuple(sorted((k, c) for k, c in merged.items() if c))


@frozen
class IntPoly1:
    """Polynomial in ``x`` with integer coefficients."""

    terms: tuple = field(factory=tuple, converter=_normalize)

    @classmethod
    def constant(cls, value: int) -> "IntPoly1":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPoly1":
        return cls({exponent: coefficient})

    @classmethod
    def from_dense(cls, coefficients: Iterable[int]) -> "IntPoly1":
        """Build from ascending coefficients ``c0 c1 c2 ...``."""
        return cls(dict(enumerate(coefficients)))

    @classmethod
    def from_exponent_counts(cls, counts: Mapping[int, int], shift: int) -> "IntPoly1":
        """Sum ``count * (x + shift)^k`` over ``counts = {k: count}``.

        State sums collect how often each exponent occurs and expand once.
        """
        total = cls()
        for exponent, count in sorted(counts.items()):
            total = total + count * shifted_power(exponent, shift)
        return total

    def as_dict(self) -> dict:
        return dict(self.terms)

    def coefficient(self, exponent: int) -> int:
        return self.as_dict().get(exponent, 0)

    def dense(self) -> list:
        """Ascending coefficient list, ``[0]`` for the zero polynomial."""
        if not self.terms:
            return [0]
        coefficients = [0] * (self.degree + 1)
        for exponent, coefficient in self.terms:
            coefficients[exponent] = coefficient
        return coefficients

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self.terms[-1][0] if self.terms else -1

    @property
    def low_degree(self) -> int:
        """Least exponent with a nonzero coefficient; -1 for zero."""
        return self.terms[0][0] if self.terms else -1

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point: int) -> int:
        # Horner on the dense form keeps everything in exact integers
        result = 0
        for coefficient in reversed(self.dense()):
            result = result * point + coefficient
        return result

    def substitute_shift(self, shift: int) -> "IntPoly1":
        """Return ``p(x + shift)``."""
        total = IntPoly1()
        for exponent, coefficient in self.terms:
            total = total + coefficient * shifted_power(exponent, shift)
        return total

    def to_y(self) -> "IntPoly2":
        """The same polynomial read in the second variable."""
        return IntPoly2({(0, k): c for k, c in self.terms})

    def __add__(self, other: Union["IntPoly1", int]) -> "IntPoly1":
        other = _promote1(other)
        return IntPoly1(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly1":
        return IntPoly1({k: -c for k, c in self.terms})

    def __sub__(self, other: Union["IntPoly1", int]) -> "IntPoly1":
        return self + (-_promote1(other))

    def __rsub__(self, other: int) -> "IntPoly1":
        return _promote1(other) - self

    def __mul__(self, other: Union["IntPoly1", int]) -> "IntPoly1":
        if isinstance(other, int):
            return IntPoly1({k: c * other for k, c in self.terms})
        product: Counter = Counter()
        for k1, c1 in self.terms:
            for k2, c2 in other.terms:
                product[k1 + k2] += c1 * c2
        return IntPoly1(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly1":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPoly1.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self):
        return render_terms(
            [(c, _monomial_text(("x", k))) for k, c in reversed(self.terms)]
        )


@frozen
class IntPoly2:
    """Polynomial in ``x`` and ``y`` with integer coefficients; terms are
    ``((i, j), c)`` for ``c x^i y^j``."""

    terms: tuple = field(factory=tuple, converter=_normalize)

    @classmethod
    def constant(cls, value: int) -> "IntPoly2":
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, i: int, j: int, coefficient: int = 1) -> "IntPoly2":
        return cls({(i, j): coefficient})

    @classmethod
    def from_exponent_counts(
        cls, counts: Mapping[tuple, int], shift_x: int, shift_y: int
    ) -> "IntPoly2":
        """Sum ``count * (x + shift_x)^i (y + shift_y)^j`` over
        ``counts = {(i, j): count}``."""
        total = cls()
        for (i, j), count in sorted(counts.items()):
            total = total + count * shifted_power2(i, j, shift_x, shift_y)
        return total

    def as_dict(self) -> dict:
        return dict(self.terms)

    def coefficient(self, i: int, j: int) -> int:
        return self.as_dict().get((i, j), 0)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree_x(self) -> int:
        return max((i for (i, _), _c in self.terms), default=-1)

    @property
    def degree_y(self) -> int:
        return max((j for (_, j), _c in self.terms), default=-1)

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self.terms)

    def specialize_x(self, value: int) -> IntPoly1:
        """Substitute ``x = value``; the result is a polynomial in ``y``,
        returned as an :class:`IntPoly1` in its own variable."""
        return IntPoly1([(j, c * value**i) for (i, j), c in self.terms])

    def specialize_y(self, value: int) -> IntPoly1:
        return IntPoly1([(i, c * value**j) for (i, j), c in self.terms])

    def diagonal(self) -> IntPoly1:
        """Return ``p(x, x)``."""
        return IntPoly1([(i + j, c) for (i, j), c in self.terms])

    def __add__(self, other: Union["IntPoly2", int]) -> "IntPoly2":
        other = _promote2(other)
        return IntPoly2(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly2":
        return IntPoly2({k: -c for k, c in self.terms})

    def __sub__(self, other: Union["IntPoly2", int]) -> "IntPoly2":
        return self + (-_promote2(other))

    def __rsub__(self, other: int) -> "IntPoly2":
        return _promote2(other) - self

    def __mul__(self, other: Union["IntPoly2", int]) -> "IntPoly2":
        if isinstance(other, int):
            return IntPoly2({k: c * other for k, c in self.terms})
        product: Counter = Counter()
        for (i1, j1), c1 in self.terms:
            for (i2, j2), c2 in other.terms:
                product[(i1 + i2, j1 + j2)] += c1 * c2
        return IntPoly2(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntPoly2":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = IntPoly2.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self):
        ordered = sorted(self.terms, key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))
        return render_terms(
            [(c, _monomial_text(("x", i), ("y", j))) for (i, j), c in ordered]
        )


def _promote1(value) -> IntPoly1:
    if isinstance(value, IntPoly1):
        return value
    if isinstance(value, int):
        return IntPoly1.constant(value)
    raise TypeError(f"cannot combine IntPoly1 with {type(value).__name__}")


def _promote2(value) -> IntPoly2:
    if isinstance(value, IntPoly2):
        return value
    if isinstance(value, int):
        return IntPoly2.constant(value)
    raise TypeError(f"cannot combine IntPoly2 with {type(value).__name__}")


def shifted_power(k: int, shift: int) -> IntPoly1:
    """Binomial expansion of ``(x + shift)^k``.

    example::

        shifted_power(2, -2)  ->  x^2 - 4x + 4
    """
    if k < 0:
        raise ValueError("exponent must be a natural number")
    return IntPoly1({i: comb(k, i) * shift ** (k - i) for i in range(k + 1)})


def shifted_power2(i: int, j: int, shift_x: int, shift_y: int) -> IntPoly2:
    """Expansion of ``(x + shift_x)^i (y + shift_y)^j``."""
    px = shifted_power(i, shift_x)
    py = shifted_power(j, shift_y)
    return IntPoly2({(a, b): ca * cb for a, ca in px.terms for b, cb in py.terms})


def shift_ratio_substitute(poly: IntPoly2) -> tuple:
    """Substitute ``(x - 1, (y - 1) / (x - 1))`` and clear the denominator.

    Term ``c x^i y^j`` becomes ``c (x-1)^(i-j+D) (y-1)^j`` where ``D`` is the
    least natural number keeping every exponent of ``x - 1`` natural; the
    substituted rational function equals the returned polynomial divided by
    ``(x - 1)^D``.

    :return: ``(polynomial, D)``
    """
    lift = max([0] + [j - i for (i, j), _c in poly.terms])
    total = IntPoly2()
    for (i, j), coefficient in poly.terms:
        total = total + coefficient * shifted_power2(i - j + lift, j, -1, -1)
    return total, lift


def evaluate(poly, *point: int) -> int:
    """Evaluate a one- or two-variable polynomial at an integer point."""
    return poly.evaluate(*point)


def _monomial_text(*factors) -> str:
    parts = []
    for name, exponent in factors:
        if exponent == 1:
            parts.append(name)
        elif exponent > 1:
            parts.append(f"{name}^{exponent}")
    return "".join(parts)


def render_terms(terms) -> str:
    """Render ``[(coefficient, monomial_text), ...]`` as ``x^2 - 2x + 2y``."""
    if not terms:
        return "0"
    pieces = []
    for position, (coefficient, monomial) in enumerate(terms):
        sign = "-" if coefficient < 0 else "+"
        magnitude = abs(coefficient)
        if monomial:
            body = monomial if magnitude == 1 else f"{magnitude}{monomial}"
        else:
            body = str(magnitude)
        if position == 0:
            pieces.append(f"-{body}" if sign == "-" else body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces)
