"""Counting absolutely irreducible factors through the Ruppert-Gao
linear system, and locating the pencil parameters where the count can jump.

For a squarefree bivariate F of bidegree (m, n) the unknowns are the
coefficients of G (deg_x <= m-1, deg_y <= n) and H (deg_x <= m,
deg_y <= n-1) subject to

    G_y F - G F_y - H_x F + H F_x = 0.

Every closed form (G dx + H dy)/F with these bounds is a combination of
the logarithmic differentials dF_i/F_i, so the kernel dimension is the
number of distinct absolutely irreducible factors F_i.  For an arbitrary
nonzero F (repeated factors, smaller bidegree than the bounds) the kernel
still contains the independent solutions ((F/F_i) dF_i/dx, (F/F_i) dF_i/dy),
hence its dimension bounds the count from above.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .arith import (QQ, QL, NumberField, UniPoly, ZeroDivisorEncountered,
                    rational_roots, uni_gcd, uni_squarefree_part)
from .linalg import (_eliminate, exact_rank, field_rank, pencil_det_poly,
                     primes, rank_mod_p)
from .mpoly import MPoly, mp_squarefree_part
from .ratfunc import RationalFunction, pencil_member

__all__ = [
    "GaoSystem",
    "CandidateSet",
    "CompositeInput",
    "gao_system",
    "count_abs_irred",
    "generic_system",
    "generic_count",
    "spectral_candidates",
]


class CompositeInput(ValueError):
    """Raised when an operation needs a non-composite fraction."""


@dataclass
class GaoSystem:
    """Row-major matrix of the linear system plus its layout.

    ``columns[k]`` is ``("G", i, j)`` or ``("H", i, j)``: the coefficient of
    ``x^i y^j`` in G or H.  ``rows[k]`` is the monomial of the identity that
    row k expresses."""

    matrix: list[list]
    columns: list[tuple[str, int, int]]
    rows: list[tuple[int, int]]
    bidegree: tuple[int, int]
    field: object

    @property
    def ncols(self) -> int:
        return len(self.columns)

    @property
    def n_g(self) -> int:
        m, n = self.bidegree
        return m * (n + 1)


def _bidegree(F: MPoly) -> tuple[int, int]:
    return F.degree_in(0), F.degree_in(1)


def gao_system(F: MPoly, bidegree: tuple[int, int] | None = None) -> GaoSystem:
    if F.nvars != 2:
        raise ValueError("the Gao system needs a bivariate polynomial")
    m, n = bidegree or _bidegree(F)
    zero = F.field.zero
    Fx, Fy = F.partial(0), F.partial(1)
    columns = [("G", i, j) for i in range(m) for j in range(n + 1)]
    columns += [("H", i, j) for i in range(m + 1) for j in range(n)]
    col_vectors: list[dict] = []
    for kind, i, j in columns:
        vec: dict = {}

        def add(poly: MPoly, coef: int, di: int, dj: int):
            for (a, b), c in poly.terms.items():
                key = (a + di, b + dj)
                v = vec.get(key)
                vec[key] = c * coef if v is None else v + c * coef

        if kind == "G":
            if j:
                add(F, j, i, j - 1)
            add(Fy, -1, i, j)
        else:
            if i:
                add(F, -i, i - 1, j)
            add(Fx, 1, i, j)
        col_vectors.append(vec)
    row_keys = sorted({k for vec in col_vectors for k, v in vec.items() if v})
    index = {k: r for r, k in enumerate(row_keys)}
    matrix = [[zero] * len(columns) for _ in row_keys]
    for c, vec in enumerate(col_vectors):
        for k, v in vec.items():
            if v:
                matrix[index[k]][c] = v
    return GaoSystem(matrix, columns, row_keys, (m, n), F.field)


def _require_extremes(F: MPoly) -> None:
    """Over Q[t]/(m): make sure the top x-degree and top y-degree parts of F
    are nonzero in every branch, splitting the modulus otherwise."""
    K = F.field
    if not isinstance(K, NumberField):
        return
    for var in (0, 1):
        d = F.degree_in(var)
        g = K.modulus
        for e, c in F.terms.items():
            if e[var] == d:
                g = uni_gcd(g, c.residue())
                if g.degree == 0:
                    break
        if g.degree > 0:
            raise ZeroDivisorEncountered(g, K)


def _integer_rows(matrix: list[list]) -> list[list[int]]:
    return [[int(v) for v in row] for row in matrix]


def count_abs_irred(F: MPoly) -> int:
    """Number of distinct absolutely irreducible factors of a nonconstant
    bivariate polynomial over Q or Q[t]/(m)."""
    if F.nvars != 2:
        raise ValueError("count_abs_irred needs a bivariate polynomial")
    if F.is_constant():
        raise ValueError("count_abs_irred needs a nonconstant polynomial")
    _require_extremes(F)
    F = mp_squarefree_part(F)
    _require_extremes(F)
    used = F.variables()
    if len(used) == 1:
        (v,) = used
        return F.degree_in(v)
    if F.field == QQ:
        P, _ = F.integer_scaled()
        system = gao_system(P)
        return system.ncols - exact_rank(_integer_rows(system.matrix), system.ncols)
    system = gao_system(F)
    return system.ncols - field_rank(system.matrix, system.ncols, F.field)


# ---------------------------------------------------------------------------
# the generic member p - lambda*q


def _integral_pair(f: RationalFunction) -> tuple[MPoly, MPoly]:
    """Scale p and q by one common rational so both have integer coefficients."""
    den = 1
    for c in list(f.num.terms.values()) + list(f.den.terms.values()):
        d = c.denominator
        den = den * d // _igcd(den, d)
    return f.num.scale(Fraction(den)), f.den.scale(Fraction(den))


def _igcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def generic_system(f: RationalFunction) -> tuple[GaoSystem, list[list[int]], list[list[int]]]:
    """The Gao system of p - lambda*q over Q(lambda), with its matrix split as
    ``M0 - lambda*M1`` into integer matrices."""
    if f.nvars != 2:
        raise ValueError("generic_system needs a bivariate fraction")
    p, q = _integral_pair(f)
    F = pencil_member(RationalFunction._raw(p, q), QL.gen)
    system = gao_system(F)
    M0, M1 = [], []
    for row in system.matrix:
        r0, r1 = [], []
        for v in row:
            # entries are polynomials of degree <= 1 in lambda
            r0.append(int(v.num[0]))
            r1.append(-int(v.num[1]))
        M0.append(r0)
        M1.append(r1)
    return system, M0, M1


def _sample_lambda(rng: random.Random) -> int:
    return rng.randint(-(2**20), 2**20)


def generic_count(f: RationalFunction, rng: random.Random | None = None,
                  samples: int = 3) -> int:
    """Number of absolutely irreducible factors of p - lambda*q for
    transcendental lambda.

    The kernel dimension at any specialization lambda* (and modulo any prime)
    bounds the generic one from above, and the generic kernel is never
    trivial, so observing dimension 1 certifies the value 1.  Larger values
    are the minimum over ``samples`` random specializations."""
    if f.is_constant():
        raise ValueError("generic_count needs a nonconstant fraction")
    rng = rng or random.Random(0)
    system, M0, M1 = generic_system(f)
    ncols = system.ncols
    A0 = np.array(M0, dtype=np.int64).reshape(len(M0), ncols)
    A1 = np.array(M1, dtype=np.int64).reshape(len(M1), ncols)
    best = ncols
    for k in range(samples):
        lam = _sample_lambda(rng)
        p = next(primes(skip=rng.randint(0, 64)))
        A = (A0 % p - (lam % p) * (A1 % p)) % p
        best = min(best, ncols - rank_mod_p(A, p))
        if best == 1:
            break
    return best


# ---------------------------------------------------------------------------
# candidate spectrum values


@dataclass
class CandidateSet:
    """Search space for the spectrum: squarefree, pairwise coprime, monic
    polynomials in lambda (each standing for all of its roots), plus
    infinity and the degree-drop value when there is one."""

    finite_candidates: list[UniPoly]
    include_infinity: bool
    degree_drop_candidate: Fraction | None = None
    rank_drop_poly: UniPoly | None = field(default=None, repr=False)

    def contains(self, lam) -> bool:
        return any(P(lam) == 0 for P in self.finite_candidates)


def degree_drop_value(f: RationalFunction) -> Fraction | None:
    """The finite lambda with deg(p - lambda*q) < deg f, if any."""
    p, q = f.num, f.den
    if p.degree != q.degree or q.is_zero() or p.degree <= 0:
        return None
    lp, lq = p.leading_homogeneous(), q.leading_homogeneous()
    e = lq.leading_exponent()
    c = lp.terms.get(e)
    if c is None:
        return None
    ratio = c / lq.terms[e]
    if lp == lq.scale(ratio):
        return ratio
    return None


def _maximal_minor(M0, M1, rank: int, rng: random.Random) -> list[int] | None:
    """det of a random rank x rank submatrix of M0 - lambda*M1 that is
    nonsingular at a random lambda (mod a prime); integer coefficients."""
    nrows, ncols = len(M0), len(M0[0])
    rperm = list(range(nrows))
    cperm = list(range(ncols))
    rng.shuffle(rperm)
    rng.shuffle(cperm)
    p = next(primes(skip=rng.randint(0, 64)))
    lam = _sample_lambda(rng)
    A0 = np.array(M0, dtype=np.int64)[np.ix_(rperm, cperm)]
    A1 = np.array(M1, dtype=np.int64)[np.ix_(rperm, cperm)]
    A = (A0 % p - (lam % p) * (A1 % p)) % p
    r, pivots, order = _eliminate(A.copy(), p)
    if r != rank:
        return None
    rows = [rperm[i] for i in order[:r]]
    cols = [cperm[c] for c in pivots]
    S0 = [[M0[i][j] for j in cols] for i in rows]
    S1 = [[-M1[i][j] for j in cols] for i in rows]
    return pencil_det_poly(S0, S1)


def _rank_drop_poly(f: RationalFunction, rng: random.Random, minors: int = 3) -> UniPoly:
    """gcd of a few maximal minors of the generic system: every lambda at
    which the kernel grows is a root."""
    system, M0, M1 = generic_system(f)
    rank = system.ncols - 1
    if rank == 0:
        return UniPoly([1], QQ, "λ")
    g = None
    attempts = 0
    while (g is None or g.degree > 0) and attempts < 4 * minors:
        attempts += 1
        coeffs = _maximal_minor(M0, M1, rank, rng)
        if coeffs is None or not any(coeffs):
            continue
        P = UniPoly(coeffs, QQ, "λ")
        g = P.monic() if g is None else uni_gcd(g, P)
        if attempts >= minors and g is not None:
            break
    if g is None:
        raise RuntimeError("could not find a nonsingular maximal minor")
    return g


def _coprime_basis(polys: list[UniPoly]) -> list[UniPoly]:
    basis: list[UniPoly] = []
    for P in polys:
        if P.degree < 1:
            continue
        P = uni_squarefree_part(P)
        new_basis = []
        for B in basis:
            g = uni_gcd(B, P)
            if g.degree > 0:
                for piece in (B.exact_div(g), g):
                    if piece.degree > 0:
                        new_basis.append(piece.monic())
                P = P.exact_div(g)
            else:
                new_basis.append(B)
        if P.degree > 0:
            new_basis.append(P.monic())
        basis = new_basis
    return basis


def spectral_candidates(f: RationalFunction, rng: random.Random | None = None) -> CandidateSet:
    if f.nvars != 2:
        raise ValueError("spectral_candidates needs a bivariate fraction")
    rng = rng or random.Random(0)
    if generic_count(f, rng) > 1:
        raise CompositeInput("the generic member of the pencil is reducible")
    D = _rank_drop_poly(f, rng)
    drop = degree_drop_value(f)
    sources = [D]
    if drop is not None:
        sources.append(UniPoly([-drop, 1], QQ, "λ"))
    pieces = []
    for B in _coprime_basis(sources):
        rest = B
        for r in rational_roots(B):
            lin = UniPoly([-r, 1], QQ, "λ")
            pieces.append(lin)
            rest = rest.exact_div(lin)
        if rest.degree > 0:
            pieces.append(rest.monic())
    pieces.sort(key=lambda P: (P.degree, [P[i] for i in range(P.degree + 1)]))
    return CandidateSet(pieces, f.den.degree >= 1, drop, D)
