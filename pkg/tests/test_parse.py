from fractions import Fraction

import pytest

from pencil_lab.mpoly import MPoly
from pencil_lab.parse import (BinOp, ExpressionSyntaxError, Num, Pow, UnknownVariable, Var,
                              parse, parse_ast)
from pencil_lab.ratfunc import RationalFunction, ZeroDenominator

V = ["x", "y"]
x, y = MPoly.gens(2)


def test_simple_quotient():
    f = parse("x/y", V)
    assert f.num == x and f.den == y


def test_lorenzini_text():
    f = parse("(x^3+y^3+(1+x+y)^3)/(x*y*(1+x+y))", V)
    assert f.degree == 3
    assert f == RationalFunction(x ** 3 + y ** 3 + (1 + x + y) ** 3, x * y * (1 + x + y))


def test_common_denominator():
    assert parse("1/x + 1/y", V) == RationalFunction(x + y, x * y)


def test_precedence():
    assert parse("-x^2", V) == RationalFunction(-(x * x))
    assert parse("2*x+3*y^2", V) == RationalFunction(x * 2 + y * y * 3)
    assert parse("x-y-1", V) == RationalFunction(x - y - 1)
    assert parse("x/y/x", V) == RationalFunction(x.one(), y)
    assert parse("2^3^2", V) == RationalFunction(x.one().scale(512))


def test_decimal_literals():
    assert parse("0.5*x", V) == RationalFunction(x.scale(Fraction(1, 2)))
    assert parse(".25", V) == RationalFunction(x.one().scale(Fraction(1, 4)))


def test_ast_nodes():
    node = parse_ast("x^2/3", V)
    assert node == BinOp("/", Pow(Var(0, "x"), 2), Num(Fraction(3)))


def test_custom_variable_order():
    f = parse("u*v + w", ["u", "v", "w"])
    assert f.nvars == 3


@pytest.mark.parametrize("text, position", [
    ("x+", 2),
    ("(x", 2),
    ("x^y", 2),
    ("x^-1", 2),
    ("x ? y", 2),
    ("x y", 2),
    ("", 0),
])
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(ExpressionSyntaxError) as exc:
        parse(text, V)
    assert exc.value.position == position


def test_unknown_variable():
    with pytest.raises(UnknownVariable) as exc:
        parse("x*z", V)
    assert exc.value.name == "z" and exc.value.position == 2


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        parse("1/(x-x)", V)


def test_round_trip_printed_form():
    f = parse("(3*x^2*y - 1/2*y + 5)/(x - 7/3)", V)
    assert parse(str(f), V) == f
