from fractions import Fraction

import pytest

from pencil_lab.arith import NumberField, UniPoly
from pencil_lab.mpoly import MPoly, mp_gcd, mp_leading_homogeneous, mp_partial, mp_squarefree_part

x, y = MPoly.gens(2)


def same_up_to_scalar(a: MPoly, b: MPoly) -> bool:
    return a.monic() == b.monic()


def test_canonical_printing():
    p = x * x * y * 3 - y * Fraction(1, 2) + 5
    assert str(p) == "3*x^2*y - 1/2*y + 5"


def test_gcd_examples():
    assert same_up_to_scalar(mp_gcd(x * x - y * y, x - y), x - y)
    assert mp_gcd(x * y, x + y).is_constant()
    a = (x + y + 1) * (x - y)
    b = (x + y + 1) * (x * y - 1)
    assert same_up_to_scalar(mp_gcd(a, b), x + y + 1)


def test_gcd_over_gaussian_field():
    K = NumberField(UniPoly([1, 0, 1]))
    X, Y = MPoly.gens(2, K)
    i = K.gen
    a = (X + Y.scale(i)) * (X - Y)
    b = (X + Y.scale(i)) * (X + Y + 1)
    assert mp_gcd(a, b).monic() == (X + Y.scale(i)).monic()


def test_gcd_trivariate():
    X, Y, Z = MPoly.gens(3)
    g = X * Z + Y - 1
    assert same_up_to_scalar(mp_gcd(g * (X + Z), g * (Y * Y - Z)), g)


def test_partial_examples():
    assert mp_partial(x * x * y, 0) == x * y * 2
    assert mp_partial(y ** 3, 0).is_zero()
    s = 1 + x + y
    assert mp_partial(x ** 3 + y ** 3 + s ** 3, 0) == x * x * 3 + s * s * 3


def test_squarefree_examples():
    assert same_up_to_scalar(mp_squarefree_part((x - y) ** 2 * (x + y)), (x - y) * (x + y))
    a = x * y * (1 + x + y)
    assert same_up_to_scalar(mp_squarefree_part(a), a)
    assert same_up_to_scalar(mp_squarefree_part((x * x + y) ** 3), x * x + y)


def test_leading_homogeneous_examples():
    assert mp_leading_homogeneous(x * x + x + 1) == x * x
    s = 1 + x + y
    assert mp_leading_homogeneous(x ** 3 + y ** 3 + s ** 3) == x ** 3 + y ** 3 + (x + y) ** 3
    assert mp_leading_homogeneous(x * y * s) == x * y * (x + y)


def test_degree_conventions():
    assert x.zero().degree == -1
    assert (x * x * y + y).degree == 3
    assert (x * x * y + y).degree_in(1) == 1


def test_divexact_rejects_inexact():
    with pytest.raises(ArithmeticError):
        (x * x + 1).divexact(x + 1)


def test_substitute():
    p = x * x - y
    assert p.substitute([x + y, x - y]) == (x + y) ** 2 - (x - y)


def test_integer_scaled():
    P, s = (x * Fraction(1, 2) - y * Fraction(1, 3)).integer_scaled()
    assert P == x * 3 - y * 2
    assert s == 6
