"""Compositeness, decomposition f = r o g, and writing members of K(f)
as univariate fractions of f."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .arith import QQ, NumberField, UniPoly, split_evaluate, uni_squarefree_part, uni_xgcd
from .irrcount import gao_system, generic_count
from .linalg import charpoly, field_nullspace, rational_nullspace
from .mpoly import MPoly, mp_gcd, mp_squarefree_part
from .ratfunc import RationalFunction, UniRationalFunction, compose, pencil_member
from .spectrum import slice_to_bivariate

__all__ = [
    "Decomposition",
    "DegreeMismatch",
    "ExtractionFailed",
    "CompositeBase",
    "is_composite",
    "solve_outer",
    "decompose",
    "express_in_f",
]


class DegreeMismatch(ValueError):
    pass


class ExtractionFailed(RuntimeError):
    pass


class CompositeBase(ValueError):
    """express_in_f was asked to work relative to a composite fraction."""


@dataclass(frozen=True)
class Decomposition:
    outer: UniRationalFunction
    inner: RationalFunction
    field: str = "Q"

    def to_json(self, names=None) -> dict:
        return {
            "outer_num": str(self.outer.num).replace(" ", ""),
            "outer_den": str(self.outer.den).replace(" ", ""),
            "inner_num": self.inner.num.format(names).replace(" ", ""),
            "inner_den": self.inner.den.format(names).replace(" ", ""),
            "field": self.field,
        }


def is_composite(f: RationalFunction, seed: int = 0) -> bool:
    if f.is_constant():
        raise ValueError("compositeness is undefined for constants")
    if f.nvars == 2:
        return generic_count(f, random.Random(f"composite:{seed}")) > 1
    # a composite fraction stays composite on every slice; ask two slices
    for s in (seed, seed + 1):
        g, _ = slice_to_bivariate(f, s)
        if generic_count(g, random.Random(f"composite:{s}")) == 1:
            return False
    return True


def _homogenized_powers(g: RationalFunction, k: int) -> list[MPoly]:
    """psi^i * phi^(k-i) for i = 0..k, where g = psi/phi."""
    psi, phi = g.num, g.den
    ppow, fpow = [psi.one()], [phi.one()]
    for _ in range(k):
        ppow.append(ppow[-1] * psi)
        fpow.append(fpow[-1] * phi)
    return [ppow[i] * fpow[k - i] for i in range(k + 1)]


def solve_outer(f: RationalFunction, g: RationalFunction, k: int) -> UniRationalFunction | None:
    """The r with f = r o g and deg r = k, or None when there is none.

    With g = psi/phi and r = (sum a_i t^i)/(sum b_i t^i) the condition
    ``p * sum b_i psi^i phi^(k-i) = q * sum a_i psi^i phi^(k-i)`` is linear
    in the a_i, b_i."""
    if g.is_constant():
        raise ValueError("inner function must be nonconstant")
    if f.degree != k * g.degree:
        raise DegreeMismatch(f"deg f = {f.degree} is not {k} * deg g = {k * g.degree}")
    K = g.field
    if f.field != K:
        f = f.change_field(K)
    powers = _homogenized_powers(g, k)
    columns = [-(f.den * h) for h in powers] + [f.num * h for h in powers]
    rows = sorted({e for c in columns for e in c.terms})
    index = {e: r for r, e in enumerate(rows)}
    matrix = [[K.zero] * len(columns) for _ in rows]
    for j, c in enumerate(columns):
        for e, v in c.terms.items():
            matrix[index[e]][j] = v
    kernel = field_nullspace(matrix, len(columns), K)
    if not kernel:
        return None
    v = kernel[0]
    num = UniPoly(v[:k + 1], K)
    den = UniPoly(v[k + 1:], K)
    if den.is_zero():
        return None
    r = UniRationalFunction(num, den)
    if r.degree != k:
        return None
    if compose(r, g) != f:
        return None
    return r


# ---------------------------------------------------------------------------
# decomposition


def _univariate(F: MPoly, var: int, value: int) -> UniPoly:
    """F with variable ``var`` set to ``value``, as a polynomial in the other."""
    other = 1 - var
    coeffs: dict[int, Fraction] = {}
    for e, c in F.terms.items():
        coeffs[e[other]] = coeffs.get(e[other], 0) + c * Fraction(value) ** e[var]
    top = max(coeffs, default=0)
    return UniPoly([coeffs.get(i, 0) for i in range(top + 1)], F.field, "y")


def _resolvent(F: MPoly, G: MPoly, Fx: MPoly, var: int, rng: random.Random,
               tries: int = 6) -> UniPoly | None:
    """Squarefree polynomial whose roots are the constants a_i with
    G = a_i Fx modulo the factors F_i of F, read off after fixing one
    variable at a random integer.  Fx is a nonzero partial derivative."""
    target = F.degree_in(1 - var)
    for _ in range(tries):
        x0 = rng.randint(-30, 30)
        A = _univariate(F, var, x0)
        if A.degree != target or A.degree < 1:
            continue
        if uni_squarefree_part(A).degree != A.degree:
            continue
        B = _univariate(Fx, var, x0)
        g, s, _ = uni_xgcd(B % A, A)
        if g.degree != 0:
            continue
        w = (_univariate(G, var, x0) * s.scale(1 / g[0])) % A
        n = A.degree
        basis = [UniPoly.monomial(j, 1, QQ, "y") for j in range(n)]
        cols = [(w * b) % A for b in basis]
        mat = [[cols[j][i] for j in range(n)] for i in range(n)]
        E = uni_squarefree_part(UniPoly(charpoly(mat), QQ, "c"))
        return E.monic()
    return None


def _in_span_pool(polys: list[MPoly]) -> tuple[MPoly, MPoly] | None:
    """Two linearly independent members of ``polys``, if any."""
    nonzero = [P for P in polys if not P.is_zero()]
    for i, a in enumerate(nonzero):
        for b in nonzero[i + 1:]:
            e = a.leading_exponent()
            cb = b.terms.get(e)
            if cb is None or a.scale(cb / a.lc()) != b:
                return a, b
    return None


def _echelon_pair(a: MPoly, b: MPoly) -> tuple[MPoly, MPoly]:
    """Reduced echelon basis of span{a, b} with monomials in descending
    graded-lex order: a canonical choice of inner function up to Moebius."""
    u = a.monic()
    e = u.leading_exponent()
    v = b - u.scale(b.terms.get(e, 0)) if e in b.terms else b
    v = v.monic()
    e2 = v.leading_exponent()
    if e2 in u.terms:
        u = u - v.scale(u.terms[e2])
    return u, v


def _normalize(f: RationalFunction, a: MPoly, b: MPoly, k: int) -> tuple[UniRationalFunction, RationalFunction] | None:
    """Canonical inner function from the span of a and b, with
    deg num >= deg den, and the matching outer fraction."""
    u, v = _echelon_pair(a, b)
    if u.degree < v.degree:
        u, v = v, u
    g = RationalFunction(u, v)
    r = solve_outer(f, g, k)
    return None if r is None else (r, g)


def _bidegree(f: RationalFunction) -> tuple[int, int]:
    return (max(f.num.degree_in(0), f.den.degree_in(0)),
            max(f.num.degree_in(1), f.den.degree_in(1)))


def decompose(f: RationalFunction, seed: int = 0, retry_budget: int = 8) -> Decomposition | None:
    """A decomposition ``f = r o g`` with deg r >= 2, or None if f is
    non-composite.

    A general fiber F = p - l0*q splits as a product of k members of the
    pencil of the inner function.  A random element G of the Gao kernel of F
    satisfies G = a_i F_x modulo the i-th factor, so gcd(F, G - c F_x) with
    c a root of the resolvent isolates a factor over Q(c).  Its coordinates
    in the basis 1, c, c^2, ... lie in the two-dimensional span of the
    inner numerator and denominator, and any two independent ones give a
    Moebius transform of the inner function."""
    if f.nvars != 2:
        raise ValueError("decompose needs a bivariate fraction")
    if f.is_constant():
        raise ValueError("constants have no decomposition")
    rng = random.Random(f"decompose:{seed}")
    k = generic_count(f, rng)
    if k == 1:
        return None
    m, n = _bidegree(f)
    reasons = []
    for _ in range(retry_budget):
        lam0 = rng.randint(-50, 50)
        F = pencil_member(f, lam0)
        if F.degree != f.degree or (F.degree_in(0), F.degree_in(1)) != (m, n):
            reasons.append(f"λ0={lam0}: degree drop")
            continue
        if mp_squarefree_part(F).degree != F.degree:
            reasons.append(f"λ0={lam0}: repeated factor")
            continue
        P, _ = F.integer_scaled()
        system = gao_system(P)
        kernel = rational_nullspace([[int(v) for v in row] for row in system.matrix],
                                    system.ncols)
        if len(kernel) != k:
            reasons.append(f"λ0={lam0}: fiber count {len(kernel)} != {k}")
            continue
        weights = [rng.randint(-99, 99) for _ in kernel]
        # Use the x-part of the kernel against F_x, unless F does not
        # involve x; then the y-part against F_y.
        part = "G" if P.degree_in(0) > 0 else "H"
        G_terms: dict = {}
        for c, (kind, i, j) in enumerate(system.columns):
            if kind != part:
                continue
            v = sum(w * vec[c] for w, vec in zip(weights, kernel))
            if v:
                G_terms[(i, j)] = v
        G = MPoly(G_terms, 2)
        Px = P.partial(0 if part == "G" else 1)
        E = None
        for var in (0, 1):
            if P.degree_in(1 - var) == 0:
                continue
            E = _resolvent(P, G, Px, var, rng)
            if E is not None and E.degree == k:
                break
        if E is None or E.degree != k:
            reasons.append(f"λ0={lam0}: resolvent degree mismatch")
            continue

        def factor_coords(K: NumberField) -> list[MPoly]:
            c = K.gen
            FK = P.change_field(K)
            H = G.change_field(K) - Px.change_field(K).scale(c)
            F1 = mp_gcd(FK, H)
            coords = []
            for d in range(K.degree):
                terms = {e: v.coeffs[d] for e, v in F1.terms.items()
                         if d < len(v.coeffs) and v.coeffs[d]}
                coords.append(MPoly(terms, 2))
            return coords

        pool = [P_i for _, coords in split_evaluate(factor_coords, E, "c") for P_i in coords]
        pair = _in_span_pool(pool)
        if pair is None:
            reasons.append(f"λ0={lam0}: extracted factors span a line")
            continue
        out = _normalize(f, pair[0], pair[1], k)
        if out is None:
            reasons.append(f"λ0={lam0}: no outer fraction for the extracted inner")
            continue
        r, g = out
        return Decomposition(r, g, "Q")
    raise ExtractionFailed("; ".join(reasons))


def express_in_f(g: RationalFunction, f: RationalFunction, seed: int = 0) -> UniRationalFunction | None:
    """s with g = s o f, or None when g is not in K(f)."""
    if f.is_constant() or g.is_constant():
        raise ValueError("express_in_f needs nonconstant fractions")
    if is_composite(f, seed):
        raise CompositeBase("f is composite")
    if g.degree % f.degree:
        return None
    return solve_outer(g, f, g.degree // f.degree)
