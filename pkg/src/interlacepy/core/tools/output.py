"""Polynomial output grammar.

One-variable polynomials print as a single line of ascending coefficients,
``poly x: c0 c1 c2 ...``; two-variable polynomials print one line
``coef i j c`` per nonzero coefficient of ``x^i y^j``, sorted by ``(i, j)``.
"""

from __future__ import annotations

import regex

from ...errors import FormatParseError
from ..algebra.polynomial import IntPoly1, IntPoly2

POLY_LINE = regex.compile(r"^poly\s+(?P<var>[a-z]):(?:\s+(?P<c>-?\d+))+$")
COEF_LINE = regex.compile(r"^coef\s+(?P<i>\d+)\s+(?P<j>\d+)\s+(?P<c>-?\d+)$")


def format_poly1(poly: IntPoly1, variable: str = "x") -> str:
    return f"poly {variable}: " + " ".join(str(c) for c in poly.dense())


def format_poly2(poly: IntPoly2) -> list:
    """Lines of a two-variable polynomial; the zero polynomial is ``coef 0 0 0``."""
    if poly.is_zero():
        return ["coef 0 0 0"]
    return [f"coef {i} {j} {c}" for (i, j), c in poly.terms]


def format_poly(poly) -> list:
    if isinstance(poly, IntPoly2):
        return format_poly2(poly)
    return [format_poly1(poly)]


def parse_poly1(line: str) -> IntPoly1:
    match = POLY_LINE.match(line.strip())
    if match is None:
        raise FormatParseError(f"not a polynomial line: {line!r}")
    return IntPoly1.from_dense(int(c) for c in match.captures("c"))


def parse_poly2(lines) -> IntPoly2:
    terms = {}
    for number, line in enumerate(lines, start=1):
        match = COEF_LINE.match(line.strip())
        if match is None:
            raise FormatParseError(f"not a coefficient line: {line!r}", number)
        terms[(int(match["i"]), int(match["j"]))] = int(match["c"])
    return IntPoly2(terms)
