from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import rational_functions
from ffrec.parse import ParseError, parse, parse_poly, parse_rational
from ffrec.polyalg import Poly, RationalFunction, X


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x", RationalFunction(X)),
        ("  x ^ 2 + 1 ", RationalFunction(X ** 2 + 1)),
        ("(x^2+1)/x^5", RationalFunction(X ** 2 + 1, X ** 5)),
        ("3/4", RationalFunction(Fraction(3, 4))),
        ("-x", RationalFunction(-X)),
        ("2*x - -3", RationalFunction(2 * X + 3)),
        ("x^-2", RationalFunction(Poly([1]), X ** 2)),
        ("(x-1)^0", RationalFunction(1)),
        ("1/2*x", RationalFunction(X * Fraction(1, 2))),
        ("x/(x-1)/x", RationalFunction(Poly([1]), X - 1)),
        ("((x))", RationalFunction(X)),
    ],
)
def test_grammar(text, expected):
    assert parse(text) == expected


@pytest.mark.parametrize(
    "text, pos",
    [
        ("x^2+", 4),
        ("x+*2", 2),
        ("(x+1", 4),
        ("y+1", 0),
        ("x^x", 2),
        ("x 2", 2),
        ("", 0),
        ("x+1)", 3),
    ],
)
def test_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos
    rendered = info.value.render().splitlines()
    assert rendered[-1].index("^") - 2 == pos


def test_division_by_zero_is_a_parse_error():
    with pytest.raises(ParseError) as info:
        parse("x/(x-x)")
    assert info.value.pos == 1


def test_parse_helpers():
    assert parse_rational("-6/4") == Fraction(-3, 2)
    assert parse_poly("x^3-x") == X ** 3 - X
    with pytest.raises(ParseError):
        parse_rational("x")
    with pytest.raises(ParseError):
        parse_poly("1/x")


@given(rational_functions)
@settings(max_examples=200, deadline=None)
def test_print_parse_round_trip(f):
    assert parse(str(f)) == f
    assert parse(str(f.num)) == RationalFunction(f.num)
