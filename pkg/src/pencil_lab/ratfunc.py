"""Reduced rational functions p/q, pencil members, the Jacobian
derivation and composition with univariate fractions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .arith import QQ, NFElement, QLambda, UniPoly, uni_gcd
from .mpoly import MPoly, default_names, mp_gcd

__all__ = [
    "RationalFunction",
    "UniRationalFunction",
    "INFINITY",
    "ZeroDenominator",
    "DegreeLawViolation",
    "rf_new",
    "pencil_member",
    "jacobian_derivation",
    "algebraically_dependent",
    "compose",
]


class ZeroDenominator(ZeroDivisionError):
    pass


class DegreeLawViolation(AssertionError):
    """deg(r o g) != deg r * deg g; only a reduction bug can cause this."""


class _Infinity:
    """The point at infinity of the projective line of pencil parameters."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()


class RationalFunction:
    """f = num/den with gcd(num, den) = 1 and den monic under graded-lex."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = num.one()
        if num.nvars != den.nvars:
            raise ValueError("numerator and denominator have different nvars")
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        if num.is_zero():
            self.num, self.den = num, den.one()
            return
        g = mp_gcd(num, den)
        if not g.is_constant():
            num, den = num.divexact(g), den.divexact(g)
        c = den.lc()
        if c != 1:
            inv = den.field.inv(c)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: MPoly, den: MPoly) -> "RationalFunction":
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    @classmethod
    def const(cls, c, nvars: int, field=QQ) -> "RationalFunction":
        return cls(MPoly.const(c, nvars, field))

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @property
    def field(self):
        return self.num.field

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree, 0)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    # -- field operations -------------------------------------------------

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MPoly):
            return RationalFunction._raw(other, other.one())
        return RationalFunction._raw(MPoly.const(other, self.nvars, self.field), self.den.one())

    def __add__(self, other) -> "RationalFunction":
        o = self._coerce(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDenominator("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._coerce(other) / self

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return (1 / self) ** (-k)
        # already reduced: powers of coprime polynomials stay coprime
        return RationalFunction._raw(self.num ** k, self.den ** k)

    def __eq__(self, other) -> bool:
        if isinstance(other, (RationalFunction, MPoly, int, Fraction)):
            o = self._coerce(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def partial(self, i: int) -> "RationalFunction":
        p, q = self.num, self.den
        return RationalFunction(p.partial(i) * q - p * q.partial(i), q * q)

    def substitute(self, images: Sequence[MPoly]) -> "RationalFunction":
        return RationalFunction(self.num.substitute(images), self.den.substitute(images))

    def change_field(self, field) -> "RationalFunction":
        return RationalFunction._raw(self.num.change_field(field), self.den.change_field(field))

    def format(self, names: Sequence[str] | None = None) -> str:
        return f"({self.num.format(names)})/({self.den.format(names)})"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def rf_new(p: MPoly, q: MPoly) -> RationalFunction:
    return RationalFunction(p, q)


class UniRationalFunction:
    """Reduced univariate fraction a(t)/b(t), b monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly | None = None):
        if den is None:
            den = num._like([num.field.one])
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        if num.is_zero():
            self.num, self.den = num, den._like([den.field.one])
            return
        g = uni_gcd(num, den)
        if g.degree > 0:
            num, den = num.exact_div(g), den.exact_div(g)
        c = den.lc()
        if c != 1:
            inv = den.field.inv(c)
            num, den = num.scale(inv), den.scale(inv)
        self.num, self.den = num, den

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniRationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __call__(self, x):
        if isinstance(x, RationalFunction):
            return compose(self, x)
        return self.num(x) / self.den(x)

    def after(self, other: "UniRationalFunction") -> "UniRationalFunction":
        """``self o other`` as a univariate fraction."""
        k = self.degree
        u, v = other.num, other.den

        def hom(a: UniPoly) -> UniPoly:
            acc = u._like([])
            for i, c in enumerate(a.coeffs):
                if c:
                    acc = acc + (u ** i) * (v ** (k - i)) * c
            return acc

        return UniRationalFunction(hom(self.num), hom(self.den))

    def format(self, var: str = "t") -> str:
        num = UniPoly._raw(list(self.num.coeffs), self.num.field, var)
        den = UniPoly._raw(list(self.den.coeffs), self.den.field, var)
        return f"({num})/({den})"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"UniRationalFunction({self})"


def pencil_member(f: RationalFunction, lam) -> MPoly:
    """``p - lam*q``, or ``q`` when ``lam`` is :data:`INFINITY`.

    ``lam`` may be rational, an element of ``Q[t]/(m)`` or of ``Q(lambda)``;
    the coefficients of p and q are promoted to its field."""
    p, q = f.num, f.den
    if lam is INFINITY:
        return q
    if isinstance(lam, (NFElement, QLambda)):
        K = lam.field
        p, q = p.change_field(K), q.change_field(K)
        return p - q.scale(lam)
    return p - q.scale(Fraction(lam))


def jacobian_derivation(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    """``D_f(g) = f_x g_y - f_y g_x`` for bivariate f, g."""
    if f.nvars != 2 or g.nvars != 2:
        raise ValueError("the Jacobian derivation is defined for two variables")
    p, q, u, v = f.num, f.den, g.num, g.den
    fx = p.partial(0) * q - p * q.partial(0)
    fy = p.partial(1) * q - p * q.partial(1)
    gx = u.partial(0) * v - u * v.partial(0)
    gy = u.partial(1) * v - u * v.partial(1)
    return RationalFunction(fx * gy - fy * gx, (q * v) ** 2)


def algebraically_dependent(f: RationalFunction, g: RationalFunction) -> bool:
    """True iff every 2x2 minor of the Jacobian matrix of (f, g) vanishes."""
    if f.nvars != g.nvars:
        raise ValueError("f and g have different numbers of variables")
    p, q, u, v = f.num, f.den, g.num, g.den
    n = f.nvars
    fd = [p.partial(i) * q - p * q.partial(i) for i in range(n)]
    gd = [u.partial(i) * v - u * v.partial(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if not (fd[i] * gd[j] - fd[j] * gd[i]).is_zero():
                return False
    return True


def compose(r: UniRationalFunction, g: RationalFunction) -> RationalFunction:
    """``r o g`` in reduced form, checked against deg = deg r * deg g."""
    if g.is_constant():
        raise ValueError("inner function must be nonconstant")
    k = r.degree
    u, v = g.num, g.den
    field = u.field
    upow = [u.one()]
    vpow = [v.one()]
    for _ in range(k):
        upow.append(upow[-1] * u)
        vpow.append(vpow[-1] * v)

    def hom(a: UniPoly) -> MPoly:
        acc = u.zero()
        for i, c in enumerate(a.coeffs):
            if c:
                acc = acc + (upow[i] * vpow[k - i]).scale(c if field == QQ else field(c))
        return acc

    result = RationalFunction(hom(r.num), hom(r.den))
    if result.degree != k * g.degree:
        raise DegreeLawViolation(f"deg(r o g) = {result.degree} != {k} * {g.degree}")
    return result


def format_fraction(f: RationalFunction, names: Sequence[str] | None = None) -> str:
    names = names or default_names(f.nvars)
    return f.format(names)
