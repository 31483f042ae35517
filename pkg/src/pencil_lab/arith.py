"""Exact coefficient arithmetic.

Rationals are :class:`fractions.Fraction`.  On top of them this module
provides dense univariate polynomials over a field, algebraic extensions
``Q[t]/(m(t))`` with ``m`` squarefree but not necessarily irreducible
(dynamic evaluation: a zero divisor met during inversion splits the
modulus), and the rational function field ``Q(lambda)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

__all__ = [
    "Fraction",
    "QQ",
    "RationalField",
    "UniPoly",
    "NumberField",
    "NFElement",
    "RationalFunctionField",
    "QLambda",
    "QL",
    "ZeroDivisorEncountered",
    "uni_gcd",
    "uni_xgcd",
    "uni_squarefree_part",
    "nf_invert",
    "split_evaluate",
    "rational_roots",
]


class ZeroDivisorEncountered(ArithmeticError):
    """Inversion hit a zero divisor of ``Q[t]/(m)``.

    ``factor`` is a proper monic factor of the modulus; the caller is expected
    to redo the computation in ``Q[t]/(factor)`` and ``Q[t]/(m/factor)``.
    """

    def __init__(self, factor: "UniPoly", field: "NumberField"):
        super().__init__(f"zero divisor: modulus has factor {factor}")
        self.factor = factor
        self.field = field


class RationalField:
    """The field Q, with elements represented as ``Fraction``."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)
    has_zero_divisors = False

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        raise TypeError(f"cannot convert {x!r} to QQ")

    def inv(self, a: Fraction) -> Fraction:
        return 1 / a

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")


QQ = RationalField()


def _trim(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "field", "var")

    def __init__(self, coeffs: Iterable = (), field=QQ, var: str = "t"):
        cs = _trim([field(c) for c in coeffs])
        self.coeffs = tuple(cs)
        self.field = field
        self.var = var

    @classmethod
    def _raw(cls, coeffs: list, field, var: str) -> "UniPoly":
        p = object.__new__(cls)
        p.coeffs = tuple(_trim(coeffs))
        p.field = field
        p.var = var
        return p

    @classmethod
    def monomial(cls, k: int, c=1, field=QQ, var: str = "t") -> "UniPoly":
        return cls([0] * k + [c], field, var)

    def _like(self, coeffs: list) -> "UniPoly":
        return UniPoly._raw(coeffs, self.field, self.var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return self.coeffs == (other,)

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return self._like([self.field(other)])

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = self.field(other)
            return self._like([a * c for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._like([])
        out = [self.field.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        result = self._like([self.field.one])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "UniPoly":
        return self._like([a * c for a in self.coeffs])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return self.scale(self.field.inv(lc))

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        inv_lc = self.field.inv(other.lc())
        rem = list(self.coeffs)
        db = other.degree
        quo = [self.field.zero] * max(len(rem) - db, 0)
        bc = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = c * inv_lc
            quo[k - db] = c
            for i in range(db + 1):
                rem[k - db + i] = rem[k - db + i] - c * bc[i]
        return self._like(quo), self._like(rem[:db] if db > 0 else [])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, x):
        acc = self.field.zero if not isinstance(x, UniPoly) else x._like([])
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return self._like([c * i for i, c in enumerate(self.coeffs) if i > 0])

    def map(self, fn: Callable, field, var: str | None = None) -> "UniPoly":
        return UniPoly._raw([fn(c) for c in self.coeffs], field, var or self.var)

    def to_integer(self) -> tuple[list[int], int]:
        """Primitive integer coefficient list and the scale used (QQ only)."""
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // _igcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = _igcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        return ints, den

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mon = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            parts.append(_term_string(c, mon))
        return _join_terms(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def _igcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _term_string(c, mon: str) -> str:
    """Render ``c*mon`` with a leading sign; ``mon`` may be empty."""
    if isinstance(c, NFElement) and len(c.coeffs) <= 1:
        c = c.coeffs[0] if c.coeffs else Fraction(0)
    if isinstance(c, (Fraction, int)):
        neg = c < 0
        mag = -c if neg else c
        if mon and mag == 1:
            body = mon
        elif mon:
            body = f"{mag}*{mon}"
        else:
            body = str(mag)
        return ("-" if neg else "+") + body
    s = f"({c})"
    return "+" + (f"{s}*{mon}" if mon else s)


def _join_terms(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0][1:] if parts[0][0] == "+" else "-" + parts[0][1:]
    for p in parts[1:]:
        out += (" + " if p[0] == "+" else " - ") + p[1:]
    return out


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    while b:
        a, b = b, a % b
    return a.monic()


def uni_xgcd(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    one = a._like([a.field.one])
    zero = a._like([])
    r0, r1, s0, s1, t0, t1 = a, b, one, zero, zero, one
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = r0.field.inv(r0.lc())
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def uni_squarefree_part(a: UniPoly) -> UniPoly:
    if a.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if a.degree == 0:
        return a._like([a.field.one])
    return a.exact_div(uni_gcd(a, a.derivative())).monic()


# ---------------------------------------------------------------------------
# Q[t]/(m)


class NumberField:
    """``Q[t]/(modulus)`` for a monic squarefree ``modulus`` of degree >= 1."""

    has_zero_divisors = True

    def __init__(self, modulus: UniPoly, name: str = "t"):
        if modulus.field != QQ:
            raise TypeError("modulus must have rational coefficients")
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        modulus = modulus.monic()
        if uni_gcd(modulus, modulus.derivative()).degree > 0:
            raise ValueError(f"modulus {modulus} is not squarefree")
        self.modulus = UniPoly._raw(list(modulus.coeffs), QQ, name)
        self.name = name
        self.degree = modulus.degree
        d = self.degree
        # t^k mod m for d <= k <= 2d-2, as coefficient lists of length d
        tail = [-c for c in self.modulus.coeffs[:d]]
        table = []
        cur = tail
        for _ in range(max(d - 1, 0)):
            table.append(cur)
            top = cur[-1]
            nxt = [Fraction(0)] + cur[:-1]
            if top:
                nxt = [x + top * y for x, y in zip(nxt, tail)]
            cur = nxt
        self._reduce_table = table
        self.zero = NFElement(self, ())
        self.one = NFElement(self, (Fraction(1),))
        self.gen = self(UniPoly([0, 1]))

    def __call__(self, x) -> "NFElement":
        if isinstance(x, NFElement):
            if x.field is not self:
                if x.field == self:
                    return NFElement(self, x.coeffs)
                raise TypeError("element of a different number field")
            return x
        if isinstance(x, UniPoly):
            r = UniPoly(x.coeffs, QQ) % self.modulus
            return NFElement(self, r.coeffs)
        return NFElement(self, (QQ(x),) if x else ())

    def _reduce(self, coeffs: list) -> tuple:
        d = self.degree
        if len(coeffs) <= d:
            return tuple(_trim(coeffs))
        out = coeffs[:d]
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self._reduce_table[k - d]
                for i in range(d):
                    if row[i]:
                        out[i] = out[i] + c * row[i]
        return tuple(_trim(out))

    def inv(self, a: "NFElement") -> "NFElement":
        return nf_invert(a)

    def split(self, factor: UniPoly) -> tuple["NumberField", "NumberField"]:
        factor = factor.monic()
        other = self.modulus.exact_div(factor).monic()
        return NumberField(factor, self.name), NumberField(other, self.name)

    def __eq__(self, other) -> bool:
        return isinstance(other, NumberField) and self.modulus.coeffs == other.modulus.coeffs

    def __hash__(self) -> int:
        return hash(("NF", self.modulus.coeffs))

    def __repr__(self) -> str:
        return f"NumberField({self.modulus})"


class NFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def residue(self) -> UniPoly:
        return UniPoly._raw(list(self.coeffs), QQ, self.field.name)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise TypeError("mixing elements of different number fields")
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, (Fraction(other),) if other else ())
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return NFElement(self.field, tuple(_trim(out)))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.field.zero
            return NFElement(self.field, tuple(c * other for c in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return self.field.zero
        if len(b) == 1:
            c = b[0]
            return NFElement(self.field, tuple(x * c for x in a))
        if len(a) == 1:
            c = a[0]
            return NFElement(self.field, tuple(x * c for x in b))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return NFElement(self.field, self.field._reduce(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * nf_invert(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * nf_invert(self)

    def __pow__(self, k: int):
        if k < 0:
            return nf_invert(self) ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, NFElement):
            return self.coeffs == other.coeffs and self.field == other.field
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.coeffs
            return self.coeffs == (other,)
        return NotImplemented

    def __hash__(self) -> int:
        if not self.coeffs:
            return hash(0)
        if len(self.coeffs) == 1:
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __str__(self) -> str:
        return str(self.residue())

    def __repr__(self) -> str:
        return f"NFElement({self} mod {self.field.modulus})"


def nf_invert(x: NFElement) -> NFElement:
    """Inverse in ``Q[t]/(m)`` by extended Euclid on (residue, modulus).

    Raises :class:`ZeroDivisorEncountered` carrying ``gcd(residue, m)`` when
    that gcd is a proper factor of the modulus.
    """
    K = x.field
    if not x.coeffs:
        raise ZeroDivisionError("inverse of zero in a number field")
    g, s, _ = uni_xgcd(x.residue(), K.modulus)
    if g.degree > 0:
        raise ZeroDivisorEncountered(g, K)
    return NFElement(K, (s % K.modulus).coeffs)


def split_evaluate(fn: Callable[[NumberField], object], modulus: UniPoly,
                   name: str = "t") -> list[tuple[NumberField, object]]:
    """Run ``fn`` over ``Q[t]/(modulus)``, splitting on zero divisors.

    Returns ``(branch_field, result)`` pairs whose moduli multiply to
    ``modulus``, ordered by the branch modulus' degree and coefficients.
    """
    pending = [NumberField(modulus, name)]
    done = []
    while pending:
        K = pending.pop()
        try:
            done.append((K, fn(K)))
        except ZeroDivisorEncountered as exc:
            if exc.field != K:
                raise
            pending.extend(K.split(exc.factor))
    done.sort(key=lambda kv: (kv[0].degree, [str(c) for c in kv[0].modulus.coeffs]))
    return done


# ---------------------------------------------------------------------------
# rational roots of integer polynomials (p-adic lifting)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _ratrecon(r: int, m: int, nbound: int, dbound: int) -> Fraction | None:
    a0, a1 = m, r % m
    b0, b1 = 0, 1
    while a1 > nbound:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    if b1 == 0 or abs(b1) > dbound:
        return None
    return Fraction(a1, b1)


def rational_roots(poly: UniPoly) -> list[Fraction]:
    """All rational roots of a nonzero polynomial over Q, sorted.

    Roots mod a small good prime are Hensel-lifted and rationally
    reconstructed; every candidate is confirmed by exact evaluation.
    """
    if poly.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    roots: list[Fraction] = []
    P = uni_squarefree_part(poly)
    if P.degree >= 1 and not P[0]:
        roots.append(Fraction(0))
        P = P.exact_div(UniPoly([0, 1]))
    if P.degree < 1:
        return sorted(roots)
    ints, _ = P.to_integer()
    lc, c0 = abs(ints[-1]), abs(ints[0])
    dP = [i * c for i, c in enumerate(ints)][1:]

    def ev(cs, x, m):
        acc = 0
        for c in reversed(cs):
            acc = (acc * x + c) % m
        return acc

    p = 3
    while True:
        if lc % p and _is_prime(p):
            if _gcd_mod_p(ints, dP, p) == 0:
                break
        p += 2
    mod_roots = [r for r in range(p) if ev(ints, r, p) == 0]
    bound = 2 * c0 * lc + 1
    for r in mod_roots:
        m = p
        while m <= bound:
            m2 = m * m
            fr = ev(ints, r, m2)
            dfr = ev(dP, r, m2)
            r = (r - fr * pow(dfr, -1, m2)) % m2
            m = m2
        cand = _ratrecon(r, m, c0, lc)
        if cand is not None and P(cand) == 0:
            roots.append(cand)
    return sorted(set(roots))


def _gcd_mod_p(a: list[int], b: list[int], p: int) -> int:
    """Degree of gcd(a, b) over F_p (a, b integer coefficient lists)."""

    def trim(x):
        x = [c % p for c in x]
        while x and x[-1] == 0:
            x.pop()
        return x

    a, b = trim(a), trim(b)
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, y in enumerate(b):
                a[shift + i] = (a[shift + i] - c * y) % p
            a = trim(a)
            if not a:
                break
        a, b = b, a
    return len(a) - 1


# ---------------------------------------------------------------------------
# Q(lambda)


class RationalFunctionField:
    """The field Q(lambda) of univariate rational functions."""

    name = "QQ(lambda)"
    has_zero_divisors = False

    def __init__(self, var: str = "λ"):
        self.var = var
        self.zero = QLambda._make(UniPoly((), QQ, var), UniPoly((1,), QQ, var), self)
        self.one = QLambda._make(UniPoly((1,), QQ, var), UniPoly((1,), QQ, var), self)
        self.gen = QLambda._make(UniPoly((0, 1), QQ, var), UniPoly((1,), QQ, var), self)

    def __call__(self, x) -> "QLambda":
        if isinstance(x, QLambda):
            return x
        if isinstance(x, UniPoly):
            return QLambda(x, UniPoly((1,), QQ, self.var), self)
        return QLambda(UniPoly((x,), QQ, self.var), UniPoly((1,), QQ, self.var), self)

    def inv(self, a: "QLambda") -> "QLambda":
        return 1 / a

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalFunctionField) and other.var == self.var

    def __hash__(self) -> int:
        return hash(("QL", self.var))

    def __repr__(self) -> str:
        return f"QQ({self.var})"


class QLambda:
    """Reduced fraction num/den in Q(lambda), den monic."""

    __slots__ = ("num", "den", "field")

    def __init__(self, num: UniPoly, den: UniPoly, field: RationalFunctionField):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(lambda)")
        if num.is_zero():
            num, den = num._like([]), den._like([Fraction(1)])
        else:
            g = uni_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            lc = den.lc()
            if lc != 1:
                num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num, self.den, self.field = num, den, field

    @classmethod
    def _make(cls, num, den, field):
        obj = object.__new__(cls)
        obj.num, obj.den, obj.field = num, den, field
        return obj

    def _coerce(self, other):
        if isinstance(other, QLambda):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.degree == 0 and o.den.degree == 0:
            return QLambda._make(self.num + o.num, self.den, self.field)
        return QLambda(self.num * o.den + o.num * self.den, self.den * o.den, self.field)

    __radd__ = __add__

    def __neg__(self):
        return QLambda._make(-self.num, self.den, self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QLambda._make(self.num * other, self.den, self.field) if other else self.field.zero
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.degree == 0 and o.den.degree == 0:
            return QLambda._make(self.num * o.num, self.den, self.field)
        return QLambda(self.num * o.num, self.den * o.den, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero in Q(lambda)")
        return QLambda(self.num * o.den, self.den * o.num, self.field)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return (self.field.one / self) ** (-k)
        return QLambda._make(self.num ** k, self.den ** k, self.field)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self) -> int:
        if self.den.degree == 0 and self.num.degree <= 0:
            return hash(self.num[0])
        return hash((self.num, self.den))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __str__(self) -> str:
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


QL = RationalFunctionField()
