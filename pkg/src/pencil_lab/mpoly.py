"""Sparse multivariate polynomials over a pluggable coefficient field.

Terms live in a dict mapping exponent tuples to nonzero coefficients.  The
canonical ordering is graded-lexicographic with ``x_1 > x_2 > ...``; it
drives printing, leading terms and the scalar normalization used by
:func:`mp_gcd`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import QQ, UniPoly, uni_gcd, _join_terms, _term_string

__all__ = [
    "MPoly",
    "default_names",
    "mp_gcd",
    "mp_partial",
    "mp_squarefree_part",
    "mp_leading_homogeneous",
    "grlex_key",
]


def grlex_key(e: tuple) -> tuple:
    return (sum(e), e)


def default_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


class MPoly:
    __slots__ = ("terms", "nvars", "field")

    def __init__(self, terms: dict | None = None, nvars: int = 2, field=QQ):
        self.nvars = nvars
        self.field = field
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have length {nvars}")
                c = field(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict, nvars: int, field) -> "MPoly":
        p = object.__new__(cls)
        p.terms, p.nvars, p.field = terms, nvars, field
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c, nvars: int, field=QQ) -> "MPoly":
        c = field(c)
        return cls._raw({(0,) * nvars: c} if c else {}, nvars, field)

    @classmethod
    def var(cls, i: int, nvars: int, field=QQ) -> "MPoly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw({tuple(e): field.one}, nvars, field)

    @classmethod
    def gens(cls, nvars: int, field=QQ) -> list["MPoly"]:
        return [cls.var(i, nvars, field) for i in range(nvars)]

    def _like(self, terms: dict) -> "MPoly":
        return MPoly._raw(terms, self.nvars, self.field)

    def zero(self) -> "MPoly":
        return self._like({})

    def one(self) -> "MPoly":
        return self._like({(0,) * self.nvars: self.field.one})

    # -- predicates and accessors ------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, self.field.zero)

    @property
    def degree(self) -> int:
        """Total degree; -1 stands in for -infinity on the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def variables(self) -> set[int]:
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        return used

    def leading_exponent(self) -> tuple:
        return max(self.terms, key=grlex_key)

    def lc(self):
        if not self.terms:
            return self.field.zero
        return self.terms[self.leading_exponent()]

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def monic(self) -> "MPoly":
        if not self.terms:
            return self
        c = self.lc()
        if c == 1:
            return self
        return self.scale(self.field.inv(c))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials have different numbers of variables")
            return other
        return MPoly.const(other, self.nvars, self.field)

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return self._like(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def scale(self, c) -> "MPoly":
        if not c:
            return self.zero()
        out = {}
        for e, v in self.terms.items():
            w = v * c
            if w:
                out[e] = w
        return self._like(out)

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            return self.scale(self.field(other) if isinstance(other, (int, Fraction)) else other)
        if other.nvars != self.nvars:
            raise ValueError("polynomials have different numbers of variables")
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return self._like({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative exponent")
        result, base = self.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MPoly.const(other, self.nvars, self.field).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def divexact(self, other: "MPoly") -> "MPoly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        le = other.leading_exponent()
        inv = self.field.inv(other.terms[le])
        rem = dict(self.terms)
        quo: dict = {}
        oterms = list(other.terms.items())
        while rem:
            e = max(rem, key=grlex_key)
            shift = tuple(a - b for a, b in zip(e, le))
            if min(shift) < 0:
                raise ArithmeticError("inexact multivariate division")
            c = rem[e] * inv
            quo[shift] = c
            for oe, oc in oterms:
                t = tuple(a + b for a, b in zip(oe, shift))
                v = rem.get(t)
                v = -c * oc if v is None else v - c * oc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return self._like(quo)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.divexact(self)
        except ArithmeticError:
            return False
        return True

    # -- calculus and structure ----------------------------------------------

    def partial(self, i: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = list(e)
                e2[i] = k - 1
                out[tuple(e2)] = c * k
        return self._like(out)

    def leading_homogeneous(self) -> "MPoly":
        d = self.degree
        return self._like({e: c for e, c in self.terms.items() if sum(e) == d})

    def homogeneous_part(self, d: int) -> "MPoly":
        return self._like({e: c for e, c in self.terms.items() if sum(e) == d})

    def map_coeffs(self, fn, field) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return MPoly._raw(out, self.nvars, field)

    def change_field(self, field) -> "MPoly":
        return self.map_coeffs(field, field)

    def substitute(self, images: Sequence["MPoly"]) -> "MPoly":
        """Compose: replace variable ``i`` by ``images[i]`` (all in one ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0]
        result = target.zero()
        powers: list[dict[int, MPoly]] = [{0: target.one()} for _ in images]

        def power(i: int, k: int) -> MPoly:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        for e, c in self.terms.items():
            term = target.one().scale(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def evaluate(self, point: Sequence):
        acc = None
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x ** k
            acc = t if acc is None else acc + t
        return self.field.zero if acc is None else acc

    def coefficients_in(self, i: int) -> dict[int, "MPoly"]:
        """View as a polynomial in variable ``i``: exponent -> coefficient
        polynomial (which no longer involves variable ``i``)."""
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[e2] = c
        return {k: self._like(t) for k, t in out.items()}

    def to_unipoly(self, i: int, var: str = "t") -> UniPoly:
        """Requires the polynomial to involve only variable ``i``."""
        d = self.degree_in(i)
        cs = [self.field.zero] * (d + 1)
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError("polynomial involves other variables")
            cs[e[i]] = c
        return UniPoly._raw(cs, self.field, var)

    @classmethod
    def from_unipoly(cls, u: UniPoly, i: int, nvars: int) -> "MPoly":
        terms = {}
        for k, c in enumerate(u.coeffs):
            if c:
                e = [0] * nvars
                e[i] = k
                terms[tuple(e)] = c
        return cls._raw(terms, nvars, u.field)

    def integer_scaled(self) -> tuple["MPoly", Fraction]:
        """Return ``(P, s)`` with ``P = s*self`` having coprime integer
        coefficients and positive leading coefficient (QQ only)."""
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // _gcd(den, c.denominator)
        g = 0
        for c in self.terms.values():
            g = _gcd(g, int(c * den))
        if not g:
            return self, Fraction(1)
        s = Fraction(den, g)
        if self.lc() < 0:
            s = -s
        return self.scale(s), s

    # -- printing ------------------------------------------------------------

    def format(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else default_names(self.nvars)
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            parts.append(_term_string(c, "*".join(factors)))
        return _join_terms(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"MPoly({self})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


# ---------------------------------------------------------------------------
# gcd


def mp_partial(a: MPoly, var: int) -> MPoly:
    if not 0 <= var < a.nvars:
        raise IndexError(f"variable index {var} out of range")
    return a.partial(var)


def mp_leading_homogeneous(a: MPoly) -> MPoly:
    if a.is_zero():
        raise ValueError("zero polynomial has no leading form")
    return a.leading_homogeneous()


def _lex_first_key(v: int):
    def key(e):
        return (e[v], sum(e), e)
    return key


def _unitize(a: MPoly, v: int) -> MPoly:
    """Scale so the leading coefficient w.r.t. ``v``-first lex is 1.

    Over ``Q[t]/(m)`` the inversion certifies that the top ``v``-degree part
    is nonzero in every branch (or raises a splitting zero divisor)."""
    e = max(a.terms, key=_lex_first_key(v))
    c = a.terms[e]
    if c == 1:
        return a
    return a.scale(a.field.inv(c))


def _content_in(a: MPoly, v: int) -> MPoly:
    coeffs = sorted(a.coefficients_in(v).values(), key=lambda p: len(p.terms))
    g = coeffs[0]
    for c in coeffs[1:]:
        if g.is_constant():
            break
        g = _gcd_nonzero(g, c)
    if g.is_constant():
        return a.one()
    return g


def _prem(A: MPoly, B: MPoly, v: int) -> MPoly:
    db = B.degree_in(v)
    lcB = B.coefficients_in(v)[db]
    R = A
    while not R.is_zero() and R.degree_in(v) >= db:
        dr = R.degree_in(v)
        lcR = R.coefficients_in(v)[dr]
        shift = [0] * R.nvars
        shift[v] = dr - db
        mono = R._like({tuple(shift): R.field.one})
        R = R * lcB - lcR * mono * B
        if R.field.has_zero_divisors and not R.is_zero():
            R = _unitize(R, v)
    return R


# Heuristic gcd for integer coefficients: evaluate one variable at a large
# integer xi, recurse, read the gcd back from its balanced base-xi digits and
# keep it only if it divides both inputs exactly.


def _int_content(d: dict) -> int:
    g = 0
    for c in d.values():
        g = _gcd(g, c)
        if g == 1:
            break
    return g


def _evaluate_var(d: dict, v: int, xi: int) -> dict:
    out: dict = {}
    for e, c in d.items():
        k = e[:v] + (0,) + e[v + 1:]
        out[k] = out.get(k, 0) + c * xi ** e[v]
    return {k: c for k, c in out.items() if c}


def _interpolate_var(d: dict, v: int, xi: int) -> dict:
    out: dict = {}
    half = xi // 2
    for e, c in d.items():
        i = 0
        while c:
            r = c % xi
            if r > half:
                r -= xi
            if r:
                out[e[:v] + (i,) + e[v + 1:]] = r
            c = (c - r) // xi
            i += 1
    return out


def _divides_int(h: dict, f: dict, nvars: int) -> bool:
    return MPoly._raw({e: Fraction(c) for e, c in h.items()}, nvars, QQ).divides(
        MPoly._raw({e: Fraction(c) for e, c in f.items()}, nvars, QQ))


def _heu_gcd(f: dict, g: dict, active: list[int], nvars: int) -> dict | None:
    if not active:
        zero = (0,) * nvars
        return {zero: _gcd(f.get(zero, 0), g.get(zero, 0))}
    cf, cg = _int_content(f), _int_content(g)
    c = _gcd(cf, cg)
    f = {e: v // cf for e, v in f.items()}
    g = {e: v // cg for e, v in g.items()}
    fn = max(abs(v) for v in f.values())
    gn = max(abs(v) for v in g.values())
    xi = 2 * min(fn, gn) + 29
    v = active[-1]
    for _ in range(6):
        ff, gg = _evaluate_var(f, v, xi), _evaluate_var(g, v, xi)
        if ff and gg:
            h = _heu_gcd(ff, gg, active[:-1], nvars)
            if h is not None:
                H = _interpolate_var(h, v, xi)
                if H:
                    k = _int_content(H)
                    H = {e: w // k for e, w in H.items()}
                    if _divides_int(H, f, nvars) and _divides_int(H, g, nvars):
                        return {e: w * c for e, w in H.items()}
        xi = xi * 73794 * math.isqrt(math.isqrt(xi)) // 27011
    return None


def _heu_gcd_rational(a: MPoly, b: MPoly) -> MPoly | None:
    A, _ = a.integer_scaled()
    B, _ = b.integer_scaled()
    fa = {e: int(c) for e, c in A.terms.items()}
    fb = {e: int(c) for e, c in B.terms.items()}
    active = sorted(a.variables() | b.variables())
    h = _heu_gcd(fa, fb, active, a.nvars)
    if h is None:
        return None
    return MPoly({e: Fraction(c) for e, c in h.items()}, a.nvars, QQ)


def _gcd_nonzero(a: MPoly, b: MPoly) -> MPoly:
    if a.is_constant() or b.is_constant():
        return a.one()
    if a.field == QQ and len(a.variables() | b.variables()) > 1:
        h = _heu_gcd_rational(a, b)
        if h is not None:
            return h
    va, vb = a.variables(), b.variables()
    both = va | vb
    if len(both) == 1:
        (v,) = both
        g = uni_gcd(a.to_unipoly(v), b.to_unipoly(v))
        return MPoly.from_unipoly(g, v, a.nvars)
    v = min(both, key=lambda i: (max(a.degree_in(i), b.degree_in(i)), i))
    if v not in va:
        return _gcd_nonzero(a, _content_in(b, v))
    if v not in vb:
        return _gcd_nonzero(_content_in(a, v), b)
    ca, cb = _content_in(a, v), _content_in(b, v)
    pa, pb = a.divexact(ca), b.divexact(cb)
    content = _gcd_nonzero(ca, cb)
    if pa.degree_in(v) < pb.degree_in(v):
        pa, pb = pb, pa
    pa, pb = _unitize(pa, v), _unitize(pb, v)
    while True:
        r = _prem(pa, pb, v)
        if r.is_zero():
            break
        if r.degree_in(v) == 0:
            return content
        r = r.divexact(_content_in(r, v))
        pa, pb = pb, _unitize(r, v)
    return content * pb


def mp_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Gcd normalized to leading coefficient 1 under graded-lex.

    Recursive primitive PRS on the variable of lowest degree; ``gcd(0, 0)``
    is 0.  Over ``Q[t]/(m)`` may raise ``ZeroDivisorEncountered``."""
    if a.nvars != b.nvars:
        raise ValueError("polynomials have different numbers of variables")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    return _gcd_nonzero(a, b).monic()


def mp_gcd_many(polys: Iterable[MPoly]) -> MPoly:
    g = None
    for p in polys:
        g = p.monic() if g is None else mp_gcd(g, p)
        if not g.is_zero() and g.is_constant():
            return g
    if g is None:
        raise ValueError("gcd of an empty family")
    return g


def mp_squarefree_part(a: MPoly) -> MPoly:
    """``a / gcd(a, da/dx_1, ..., da/dx_n)``, normalized monic."""
    if a.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if a.is_constant():
        return a.one()
    g = mp_gcd_many([a] + [a.partial(i) for i in sorted(a.variables())])
    return a.divexact(g).monic()
