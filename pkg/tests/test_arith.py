from fractions import Fraction

import pytest

from pencil_lab.arith import (QL, NumberField, UniPoly, ZeroDivisorEncountered,
                              nf_invert, rational_roots, split_evaluate, uni_gcd,
                              uni_squarefree_part, uni_xgcd)


def t(*coeffs):
    return UniPoly(list(coeffs))


def test_gcd_examples():
    assert uni_gcd(t(-1, 0, 1), t(-1, 1)) == t(-1, 1)
    assert uni_gcd(t(1, 0, 1), t(2, 1)) == t(1)
    assert uni_gcd(t(0, -1, 0, 1), t(-1, 0, 1)) == t(-1, 0, 1)


def test_gcd_of_zeros_is_zero():
    assert uni_gcd(t(), t()).is_zero()


def test_gcd_is_monic():
    assert uni_gcd(t(-4, 0, 2), t(0, 6)).lc() == 1


def test_xgcd_bezout():
    a, b = t(1, 2, 3, 4), t(-1, 0, 1)
    g, s, u = uni_xgcd(a, b)
    assert s * a + u * b == g
    assert g == uni_gcd(a, b)


def test_squarefree_examples():
    tm1, tp2 = t(-1, 1), t(2, 1)
    assert uni_squarefree_part(tm1 * tm1 * tp2) == tm1 * tp2
    assert uni_squarefree_part(t(-1, 0, 0, 1)) == t(-1, 0, 0, 1)
    assert uni_squarefree_part(t(1, 1, 1) ** 2) == t(1, 1, 1)


def test_nf_invert_examples():
    K = NumberField(t(1, 0, 1))
    assert nf_invert(K.gen) == K(t(0, -1))
    K = NumberField(t(1, 1, 1))
    assert nf_invert(K.gen) == K(t(-1, -1))


def test_nf_invert_zero_divisor_carries_factor():
    K = NumberField(t(-1, 0, 1))
    with pytest.raises(ZeroDivisorEncountered) as exc:
        nf_invert(K(t(-1, 1)))
    assert exc.value.factor == t(-1, 1)


def test_number_field_rejects_non_squarefree_modulus():
    with pytest.raises(ValueError):
        NumberField(t(1, -2, 1))


def test_number_field_reduction():
    K = NumberField(t(1, 1, 1))
    j = K.gen
    assert j ** 3 == K.one
    assert j * j + j + 1 == K.zero


def test_split_evaluate_splits_and_covers_modulus():
    m = t(-1, 0, 1) * t(1, 0, 1)  # (t^2 - 1)(t^2 + 1)

    def probe(K):
        x = K.gen - 1
        if not x:
            return "zero"
        return nf_invert(x) * x == K.one

    branches = split_evaluate(probe, m)
    product = t(1)
    for K, _ in branches:
        product = product * K.modulus
    assert product == m
    assert [(K.modulus, v) for K, v in branches] == [(t(-1, 1), "zero"), (t(1, 1, 1, 1), True)]


def test_rational_roots():
    P = t(-7, 3) * t(-1, 1) * t(-5, 2) * t(1, 0, 1)
    assert rational_roots(P) == [Fraction(1), Fraction(7, 3), Fraction(5, 2)]


def test_rational_roots_none():
    assert rational_roots(t(2, 0, 1)) == []


def test_ql_field_arithmetic():
    lam = QL.gen
    a = (lam * lam - 1) / (lam - 1)
    assert a == lam + 1
    assert QL.inv(lam + 1) * (lam + 1) == QL.one


def test_unipoly_string_form():
    assert str(t(5, Fraction(-1, 2), 3)) == "3*t^2 - 1/2*t + 5"


def test_divmod_identity():
    a, b = t(3, 1, 4, 1, 5), t(2, 7)
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree
