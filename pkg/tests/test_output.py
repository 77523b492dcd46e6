import pytest

from interlacepy.core.algebra.polynomial import IntPoly1, IntPoly2
from interlacepy.core.tools.output import format_poly, format_poly1, format_poly2, parse_poly1, parse_poly2
from interlacepy.errors import FormatParseError

Q_K2 = IntPoly2({(2, 0): 1, (1, 0): -2, (0, 1): 2})


def test_one_variable():
    assert format_poly1(IntPoly1.from_dense([0, 2])) == "poly x: 0 2"
    assert format_poly1(IntPoly1()) == "poly x: 0"
    assert format_poly1(IntPoly1.from_dense([1, -1]), "y") == "poly y: 1 -1"
    assert parse_poly1("poly x: 0 2 1") == IntPoly1.from_dense([0, 2, 1])
    assert parse_poly1("poly x: 0").is_zero()


def test_two_variable():
    assert format_poly2(Q_K2) == ["coef 0 1 2", "coef 1 0 -2", "coef 2 0 1"]
    assert format_poly2(IntPoly2()) == ["coef 0 0 0"]
    assert parse_poly2(format_poly2(Q_K2)) == Q_K2
    assert parse_poly2(["coef 0 0 0"]).is_zero()


def test_format_poly_dispatches_on_type():
    assert format_poly(IntPoly1.monomial(1, 3)) == ["poly x: 0 3"]
    assert format_poly(Q_K2) == format_poly2(Q_K2)


def test_bad_lines():
    with pytest.raises(FormatParseError):
        parse_poly1("poly x:")
    with pytest.raises(FormatParseError):
        parse_poly1("x^2 + 1")
    with pytest.raises(FormatParseError) as excinfo:
        parse_poly2(["coef 0 0 1", "coef 1"])
    assert excinfo.value.line_number == 2
