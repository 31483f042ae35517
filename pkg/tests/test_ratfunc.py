import pytest

from pencil_lab.arith import NumberField, UniPoly
from pencil_lab.mpoly import MPoly
from pencil_lab.ratfunc import (INFINITY, DegreeLawViolation, RationalFunction,
                                UniRationalFunction, ZeroDenominator, algebraically_dependent,
                                compose, jacobian_derivation, pencil_member, rf_new)

x, y = MPoly.gens(2)
R = RationalFunction
LORENZINI = R(x ** 3 + y ** 3 + (1 + x + y) ** 3, x * y * (1 + x + y))


def t(*coeffs):
    return UniPoly(list(coeffs))


def test_rf_new_cancels():
    f = rf_new(x * x - y * y, x - y)
    assert f.num == x + y and f.den == x.one()
    assert f.degree == 1


def test_rf_new_keeps_reduced_pair():
    f = rf_new(x, y)
    assert (f.num, f.den, f.degree) == (x, y, 1)
    assert LORENZINI.degree == 3


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rf_new(x, x.zero())


def test_denominator_is_monic():
    f = rf_new(x, y * 4)
    assert f.den == y
    assert f.num.lc() * 4 == 1


def test_pencil_member_examples():
    f = R(x, y)
    assert pencil_member(f, 2) == x - y * 2
    assert pencil_member(f, INFINITY) == y
    p, q = LORENZINI.num, LORENZINI.den
    assert pencil_member(LORENZINI, 1) == p - q


def test_pencil_member_number_field():
    K = NumberField(t(1, 1, 1), "λ")
    F = pencil_member(R(x, y), K.gen)
    assert F.field == K
    assert F.terms[(0, 1)] == -K.gen


def test_jacobian_examples():
    assert jacobian_derivation(R(x), R(y)) == R(x.one())
    assert jacobian_derivation(LORENZINI, LORENZINI).num.is_zero()
    assert jacobian_derivation(R(x, y), R(x)) == R(x, y * y)


def test_jacobian_needs_two_variables():
    X, Y, Z = MPoly.gens(3)
    with pytest.raises(ValueError):
        jacobian_derivation(R(X), R(Y))


def test_dependence_examples():
    assert algebraically_dependent(R(x, y), R(x * x, y * y))
    assert not algebraically_dependent(R(x), R(y))
    X, Y, Z = MPoly.gens(3)
    assert algebraically_dependent(R(X, Y), R(X * X + Y * Y, X * Y))
    assert not algebraically_dependent(R(X, Y), R(Z))


def test_compose_examples():
    assert compose(UniRationalFunction(t(0, 0, 1)), R(x, y)) == R(x * x, y * y)
    assert compose(UniRationalFunction(t(1, 0, 1), t(0, 1)), R(x, y)) == R(x * x + y * y, x * y)
    f = compose(UniRationalFunction(t(0, 0, 0, 1)), R(x + y, x - y))
    assert f.degree == 3
    assert f == R((x + y) ** 3, (x - y) ** 3)


def test_compose_rejects_constant_inner():
    with pytest.raises(ValueError):
        compose(UniRationalFunction(t(0, 1)), R(x.one()))


def test_degree_law_violation_is_an_assertion_error():
    assert issubclass(DegreeLawViolation, AssertionError)


def test_uni_fraction_after():
    r = UniRationalFunction(t(0, 0, 1))
    s = UniRationalFunction(t(1), t(0, 1))
    assert r.after(s) == UniRationalFunction(t(1), t(0, 0, 1))


def test_text_form():
    assert str(R(x, y)) == "(x)/(y)"
