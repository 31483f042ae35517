import random
from fractions import Fraction

import pytest

from pencil_lab.arith import NumberField, UniPoly
from pencil_lab.irrcount import (CompositeInput, count_abs_irred, degree_drop_value, gao_system,
                                 generic_count, spectral_candidates)
from pencil_lab.mpoly import MPoly
from pencil_lab.ratfunc import RationalFunction, pencil_member

x, y = MPoly.gens(2)
R = RationalFunction
LORENZINI = R(x ** 3 + y ** 3 + (1 + x + y) ** 3, x * y * (1 + x + y))


def lam(*coeffs):
    return UniPoly(list(coeffs), var="λ")


@pytest.mark.parametrize("F, expected", [
    (x * x - y * y, 2),
    (x * x + y * y, 2),
    (x * y - 1, 1),
    ((x - y) * (x + y - 1) * (x * 2 + y + 3), 3),
    (x * (y * y - 1), 3),
    ((x * x - y) ** 2 * (x + y), 2),
    (y ** 3 - 1, 3),
    (x ** 3 + y ** 3 + (1 + x + y) ** 3 - x * y * (1 + x + y) * 3, 3),
])
def test_count_examples(F, expected):
    assert count_abs_irred(F) == expected


def test_count_rejects_constants():
    with pytest.raises(ValueError):
        count_abs_irred(x.one())


def test_count_over_number_field_matches_rational_count():
    K = NumberField(UniPoly([-2, 0, 1]))
    F = (x * x - y * 3) * (x + y)
    assert count_abs_irred(F.change_field(K)) == count_abs_irred(F) == 2


def test_count_over_extension_sees_split_conic():
    # x^2 - 2y^2 splits over Q(sqrt 2) but is already counted absolutely over Q
    K = NumberField(UniPoly([-2, 0, 1]))
    F = x * x - y * y * 2
    assert count_abs_irred(F) == 2
    assert count_abs_irred(F.change_field(K)) == 2


def test_gao_system_shape():
    F = x ** 2 * y + y ** 2 + x
    S = gao_system(F)
    m, n = 2, 2
    assert S.ncols == m * (n + 1) + (m + 1) * n
    assert S.bidegree == (m, n)


def test_gao_kernel_contains_log_derivative_solution():
    f1, f2 = x + y, x * y - 1
    F = f1 * f2
    S = gao_system(F)
    G = f2 * f1.partial(0)
    H = f2 * f1.partial(1)
    vec = []
    for kind, i, j in S.columns:
        src = G if kind == "G" else H
        vec.append(src.terms.get((i, j), 0))
    for row in S.matrix:
        assert sum(a * b for a, b in zip(row, vec)) == 0


@pytest.mark.parametrize("f, expected", [
    (R(x, y), 1),
    (R(x * x, y * y), 2),
    (LORENZINI, 1),
    (R(x * y), 1),
    (R((x * y) ** 3 - x * y + 1), 3),
])
def test_generic_count(f, expected):
    assert generic_count(f) == expected


def test_candidates_for_x_over_y():
    f = R(x, y)
    c = spectral_candidates(f)
    assert c.include_infinity
    for P in c.finite_candidates:
        assert P.degree == 1
        assert count_abs_irred(pencil_member(f, -P[0])) == 1


def test_candidates_for_polynomial():
    c = spectral_candidates(R(x * y))
    assert not c.include_infinity
    assert lam(0, 1) in c.finite_candidates


def test_candidates_for_lorenzini():
    c = spectral_candidates(LORENZINI)
    assert c.include_infinity
    assert lam(-3, 1) in c.finite_candidates
    assert lam(9, 3, 1) in c.finite_candidates
    for P in c.finite_candidates:
        assert P.lc() == 1


def test_candidates_refuse_composites():
    with pytest.raises(CompositeInput):
        spectral_candidates(R(x * x, y * y))


def test_degree_drop_value():
    assert degree_drop_value(R(x * x + y, x * x * 2 + 1)) == Fraction(1, 2)
    assert degree_drop_value(R(x, y)) is None
    assert degree_drop_value(R(x * y)) is None


def test_candidates_include_degree_drop():
    f = R(x * x + y, x * x * 2 + 1)
    assert spectral_candidates(f).degree_drop_candidate == Fraction(1, 2)


def test_candidate_soundness_random_points():
    rng = random.Random(3)
    c = spectral_candidates(LORENZINI)
    for _ in range(20):
        v = Fraction(rng.randint(-200, 200), rng.randint(1, 9))
        if c.contains(v):
            continue
        assert count_abs_irred(pencil_member(LORENZINI, v)) == 1
