"""Seeded random inputs shared by the property and acceptance tests."""

import random
from fractions import Fraction

from pencil_lab.arith import UniPoly
from pencil_lab.mpoly import MPoly
from pencil_lab.ratfunc import RationalFunction, UniRationalFunction, compose


def random_poly(rng: random.Random, degree: int, density: float = 0.6, bound: int = 5) -> MPoly:
    """Bivariate polynomial of exact total degree ``degree``."""
    terms = {}
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            if rng.random() < density:
                terms[(i, j)] = rng.randint(-bound, bound)
    top = rng.choice([(degree, 0), (0, degree), (degree - 1, 1) if degree else (0, 0)])
    terms[top] = rng.choice([1, 2, -1, 3])
    return MPoly(terms, 2)


def random_fraction(rng: random.Random, max_degree: int = 3) -> RationalFunction:
    while True:
        d = rng.randint(1, max_degree)
        p = random_poly(rng, d)
        q = random_poly(rng, rng.randint(0, d))
        if q.is_zero():
            continue
        f = RationalFunction(p, q)
        if not f.is_constant():
            return f


def random_uni_fraction(rng: random.Random, degree: int, bound: int = 3) -> UniRationalFunction:
    while True:
        num = UniPoly([rng.randint(-bound, bound) for _ in range(degree + 1)])
        den = UniPoly([rng.randint(-bound, bound) for _ in range(rng.randint(1, degree + 1))])
        if den.is_zero():
            continue
        r = UniRationalFunction(num, den)
        if r.degree == degree:
            return r


def random_composite(rng: random.Random) -> tuple[UniRationalFunction, RationalFunction, RationalFunction]:
    """(r, g, r o g) with deg r in {2, 3} and deg g in {1, 2}."""
    r = random_uni_fraction(rng, rng.choice([2, 3]))
    while True:
        g = random_fraction(rng, 2)
        if g.degree >= 1:
            return r, g, compose(r, g)


def random_linear_form(rng: random.Random) -> MPoly:
    while True:
        a, b = rng.randint(-6, 6), rng.randint(-6, 6)
        if a or b:
            return MPoly({(1, 0): a, (0, 1): b, (0, 0): rng.randint(-6, 6)}, 2)


def proportional(a: MPoly, b: MPoly) -> bool:
    e = a.leading_exponent()
    c = b.terms.get(e)
    return c is not None and a.scale(Fraction(c) / a.lc()) == b


def distinct_linear_forms(rng: random.Random, k: int) -> list[MPoly]:
    forms: list[MPoly] = []
    while len(forms) < k:
        ell = random_linear_form(rng)
        if not any(proportional(ell, m) for m in forms):
            forms.append(ell)
    return forms
