"""Spectrum, per-fiber counts and the order of reducibility of a fraction,
plus randomized slicing for three or more variables."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .arith import UniPoly, split_evaluate
from .irrcount import count_abs_irred, generic_count, spectral_candidates
from .mpoly import MPoly, mp_gcd
from .ratfunc import INFINITY, RationalFunction, pencil_member

__all__ = [
    "ConstantInput",
    "SliceDegenerate",
    "SpectrumEntry",
    "SpectrumReport",
    "SliceRecord",
    "spectrum",
    "rho",
    "slice_to_bivariate",
    "spectrum_multivar",
]

INFINITE = "infinite"


class ConstantInput(ValueError):
    pass


class SliceDegenerate(RuntimeError):
    pass


@dataclass(frozen=True)
class SpectrumEntry:
    """One conjugacy class of spectrum values (or infinity)."""

    defining_poly: UniPoly | None
    n: int
    conjugacy: int

    @property
    def infinity(self) -> bool:
        return self.defining_poly is None

    def poly_text(self) -> str | None:
        if self.defining_poly is None:
            return None
        return str(self.defining_poly).replace(" ", "")

    def to_json(self) -> dict:
        return {
            "defining_poly": self.poly_text(),
            "infinity": self.infinity,
            "n": self.n,
            "conjugacy": self.conjugacy,
        }


@dataclass(frozen=True)
class SliceRecord:
    seed: int
    coefficients: tuple[tuple[int, int, int], ...]
    attempts: int

    def to_json(self) -> dict:
        return {"seed": self.seed, "coefficients": [list(c) for c in self.coefficients],
                "attempts": self.attempts}


@dataclass
class SpectrumReport:
    degree: int
    nvars: int
    composite: bool
    entries: list[SpectrumEntry]
    rho: int | str
    bounds: dict[str, str]
    seed: int = 0
    slices: list[SliceRecord] = field(default_factory=list)
    verification: str = "exact"

    def spectrum_size(self) -> int | str:
        """Number of spectrum points, conjugates counted separately."""
        if self.composite:
            return INFINITE
        return sum(e.conjugacy for e in self.entries)

    def signature(self) -> tuple:
        """What two slices must agree on."""
        return (self.composite, self.rho,
                tuple((e.poly_text(), e.n, e.conjugacy) for e in self.entries))

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "nvars": self.nvars,
            "composite": self.composite,
            "entries": [e.to_json() for e in self.entries],
            "rho": self.rho,
            "bounds": dict(self.bounds),
            "seed": self.seed,
            "verification": self.verification,
            "slices": [s.to_json() for s in self.slices],
        }


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


def _bounds(f: RationalFunction, rho_value, polynomial: bool) -> dict[str, str]:
    if rho_value == INFINITE:
        return {"stein": "n/a", "theorem1": "n/a", "lorenzini": "n/a"}
    d = f.degree
    return {
        "stein": _verdict(rho_value < d) if polynomial else "n/a",
        "theorem1": _verdict(rho_value < d * d + d),
        "lorenzini": _verdict(rho_value < d * d),
    }


def _entry_key(e: SpectrumEntry):
    if e.defining_poly is None:
        return (1, 0, ())
    P = e.defining_poly
    return (0, P.degree, tuple(P[i] for i in range(P.degree + 1)))


def _fiber_count(F: MPoly) -> int | None:
    if F.is_constant():
        return None
    return count_abs_irred(F)


def spectrum(f: RationalFunction, seed: int = 0) -> SpectrumReport:
    if f.nvars != 2:
        raise ValueError("spectrum needs a bivariate fraction; use spectrum_multivar")
    if f.is_constant():
        raise ConstantInput("constant fraction has no pencil")
    rng = random.Random(f"spectrum:{seed}")
    polynomial = f.is_polynomial()
    if generic_count(f, rng) > 1:
        return SpectrumReport(f.degree, 2, True, [], INFINITE,
                              _bounds(f, INFINITE, polynomial), seed)
    cands = spectral_candidates(f, rng)
    entries: list[SpectrumEntry] = []
    for P in cands.finite_candidates:
        if P.degree == 1:
            n = _fiber_count(pencil_member(f, -P[0]))
            if n is not None and n > 1:
                entries.append(SpectrumEntry(P, n, 1))
            continue
        branches = split_evaluate(lambda K: _fiber_count(pencil_member(f, K.gen)), P, "λ")
        for K, n in branches:
            if n is not None and n > 1:
                entries.append(SpectrumEntry(K.modulus, n, K.degree))
    if cands.include_infinity:
        n = _fiber_count(pencil_member(f, INFINITY))
        if n is not None and n > 1:
            entries.append(SpectrumEntry(None, n, 1))
    entries.sort(key=_entry_key)
    total = sum(e.conjugacy * (e.n - 1) for e in entries)
    return SpectrumReport(f.degree, 2, False, entries, total,
                          _bounds(f, total, polynomial), seed)


# ---------------------------------------------------------------------------
# slicing


Draw = Callable[[random.Random, int], list[tuple[int, int, int]]]


def _default_draw(rng: random.Random, nvars: int) -> list[tuple[int, int, int]]:
    return [(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(nvars)]


def _apply_slice(f: RationalFunction, coeffs) -> tuple[MPoly, MPoly]:
    x, y = MPoly.gens(2, f.field)
    images = [x.scale(a) + y.scale(b) + MPoly.const(c, 2, f.field) for a, b, c in coeffs]
    return f.num.substitute(images), f.den.substitute(images)


def _one_form(f: RationalFunction) -> bool:
    """True when f is a function of a single linear form, i.e. all partial
    derivatives of f are constant multiples of one of them."""
    p, q = f.num, f.den
    grads = [p.partial(i) * q - p * q.partial(i) for i in range(f.nvars)]
    grads = [d for d in grads if not d.is_zero()]
    if not grads:
        return True
    base = grads[0]
    e = base.leading_exponent()
    for d in grads[1:]:
        c = d.terms.get(e)
        if c is None or base.scale(c / base.lc()) != d:
            return False
    return True


def slice_to_bivariate(f: RationalFunction, seed: int, retry_budget: int = 8,
                       draw: Draw | None = None) -> tuple[RationalFunction, SliceRecord]:
    """Restrict f to a random affine plane x_j = a_j x + b_j y + c_j."""
    if f.nvars < 3:
        raise ValueError("slicing needs at least three variables")
    if f.is_constant():
        raise ConstantInput("constant fraction has no pencil")
    rng = random.Random(f"slice:{seed}")
    draw = draw or _default_draw
    keep_rank = not _one_form(f)
    for attempt in range(1, retry_budget + 1):
        coeffs = tuple(tuple(c) for c in draw(rng, f.nvars))
        p, q = _apply_slice(f, coeffs)
        if p.degree != f.num.degree or q.degree != f.den.degree:
            continue
        if not mp_gcd(p, q).is_constant():
            continue
        g = RationalFunction(p, q)
        if keep_rank and _one_form(g):
            continue
        return g, SliceRecord(seed, coeffs, attempt)
    raise SliceDegenerate(f"no degree-preserving slice in {retry_budget} draws")


def spectrum_multivar(f: RationalFunction, seed: int = 0, retry_budget: int = 8) -> SpectrumReport:
    """Spectrum of an n-variable fraction (n >= 3) from bivariate slices.

    Two slices (seeds ``seed`` and ``seed+1``) that agree give a report
    marked ``monte-carlo-verified``.  Otherwise a third slice decides:
    if it matches one of the first two that report is returned as
    ``majority``, else a per-entry vote is returned as ``low-confidence``.
    """
    if f.nvars < 3:
        return spectrum(f, seed)
    if f.is_constant():
        raise ConstantInput("constant fraction has no pencil")

    def one(s: int) -> SpectrumReport:
        g, record = slice_to_bivariate(f, s, retry_budget)
        rep = spectrum(g, s)
        rep.slices = [record]
        return rep

    a, b = one(seed), one(seed + 1)
    if a.signature() == b.signature():
        return _finish(f, a, [a, b], "monte-carlo-verified", seed)
    c = one(seed + 2)
    for r in (a, b):
        if r.signature() == c.signature():
            return _finish(f, r, [a, b, c], "majority", seed)
    return _finish(f, _vote(f, [a, b, c]), [a, b, c], "low-confidence", seed)


def _vote(f: RationalFunction, reports: list[SpectrumReport]) -> SpectrumReport:
    composite = Counter(r.composite for r in reports).most_common(1)[0][0]
    if composite:
        return SpectrumReport(f.degree, f.nvars, True, [], INFINITE,
                              _bounds(f, INFINITE, f.is_polynomial()))
    votes = Counter(e for r in reports if not r.composite for e in r.entries)
    entries = sorted((e for e, k in votes.items() if k >= 2), key=_entry_key)
    total = sum(e.conjugacy * (e.n - 1) for e in entries)
    return SpectrumReport(f.degree, f.nvars, False, entries, total,
                          _bounds(f, total, f.is_polynomial()))


def _finish(f, chosen: SpectrumReport, used: list[SpectrumReport], label: str,
            seed: int) -> SpectrumReport:
    rho_value = chosen.rho
    return SpectrumReport(
        degree=f.degree,
        nvars=f.nvars,
        composite=chosen.composite,
        entries=list(chosen.entries),
        rho=rho_value,
        bounds=_bounds(f, rho_value, f.is_polynomial()),
        seed=seed,
        slices=[s for r in used for s in r.slices],
        verification=label,
    )


def rho(f: RationalFunction, seed: int = 0) -> int | str:
    if f.nvars >= 3:
        return spectrum_multivar(f, seed).rho
    return spectrum(f, seed).rho
