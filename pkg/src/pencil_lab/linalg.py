"""Exact linear algebra.

Integer matrices are handled multimodularly: ranks mod word-sized primes
are computed with numpy, and the rank over Q is certified by the Hadamard
bound (once the primes used multiply past twice the largest possible
``(r+1)``-minor, every such minor is zero).  Matrices over a generic field,
``Q[t]/(m)`` included, use plain Gaussian elimination through ``field.inv``
so zero divisors surface as splitting events.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .arith import _is_prime, _ratrecon

__all__ = [
    "primes",
    "rank_mod_p",
    "exact_rank",
    "nullspace_mod_p",
    "rational_nullspace",
    "field_rref",
    "field_nullspace",
    "field_rank",
    "pencil_det_poly",
    "charpoly",
    "integer_matrix",
]

PRIME_TOP = 2**31 - 1


@lru_cache(maxsize=None)
def _nth_prime_below_top(k: int) -> int:
    if k == 0:
        return PRIME_TOP
    p = _nth_prime_below_top(k - 1) - 2
    while not _is_prime(p):
        p -= 2
    return p


def primes(skip: int = 0):
    """Primes below 2**31, descending, deterministic."""
    k = skip
    while True:
        yield _nth_prime_below_top(k)
        k += 1


def _reduce(M: Sequence[Sequence[int]], p: int) -> np.ndarray:
    return np.array([[v % p for v in row] for row in M], dtype=np.int64).reshape(len(M), -1)


def _eliminate(A: np.ndarray, p: int, full: bool = False):
    """In-place row reduction mod p. Returns (rank, pivot_cols, row_order)."""
    nrows, ncols = A.shape
    order = list(range(nrows))
    pivots = []
    k = 0
    for c in range(ncols):
        if k == nrows:
            break
        nz = np.flatnonzero(A[k:, c])
        if nz.size == 0:
            continue
        r = k + int(nz[0])
        if r != k:
            A[[k, r]] = A[[r, k]]
            order[k], order[r] = order[r], order[k]
        inv = pow(int(A[k, c]), p - 2, p)
        A[k, c:] = (A[k, c:] * inv) % p
        below = A[k + 1:, c].copy()
        mask = np.flatnonzero(below)
        if mask.size:
            rows = mask + k + 1
            A[rows, c:] = (A[rows, c:] - np.outer(below[mask], A[k, c:]) % p) % p
        if full and k:
            above = A[:k, c].copy()
            mask = np.flatnonzero(above)
            if mask.size:
                A[mask, c:] = (A[mask, c:] - np.outer(above[mask], A[k, c:]) % p) % p
        pivots.append(c)
        k += 1
    return k, pivots, order


def rank_mod_p(M, p: int) -> int:
    A = M % p if isinstance(M, np.ndarray) else _reduce(M, p)
    return _eliminate(A.copy(), p)[0]


def integer_matrix(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row of a rational matrix to coprime integers (row scaling
    preserves rank and kernel)."""
    out = []
    for row in rows:
        den = 1
        for v in row:
            if isinstance(v, Fraction):
                d = v.denominator
                den = den * d // _gcd(den, d)
        ints = [int(v * den) for v in row]
        g = 0
        for v in ints:
            g = _gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _hadamard_sq(norms_sq: list[int], k: int) -> int:
    """Square of the Hadamard bound for any k x k minor."""
    h = 1
    for v in norms_sq[:k]:
        h *= v
    return h


def exact_rank(M: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    """Rank over Q of an integer matrix, certified multimodularly."""
    nrows = len(M)
    if ncols is None:
        ncols = len(M[0]) if nrows else 0
    if nrows == 0 or ncols == 0:
        return 0
    small = all(abs(v) < 2**62 for row in M for v in row)
    base = np.array(M, dtype=np.int64) if small else None
    norms_sq = sorted((sum(v * v for v in row) for row in M), reverse=True)
    full = min(nrows, ncols)
    r = -1
    prod = 1
    for p in primes():
        A = (base % p) if small else _reduce(M, p)
        rp = _eliminate(A, p)[0]
        if rp > r:
            r = rp
        if r == full:
            return r
        prod *= p
        if prod * prod > 4 * _hadamard_sq(norms_sq, r + 1):
            return r


def nullspace_mod_p(M: np.ndarray, p: int) -> tuple[list[int], np.ndarray]:
    """RREF-based kernel basis mod p. Returns (free_cols, basis rows)."""
    A = M.copy() % p
    rank, pivots, _ = _eliminate(A, p, full=True)
    ncols = A.shape[1]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for k, pc in enumerate(pivots):
            basis[i, pc] = (-A[k, fc]) % p
    return free, basis


def rational_nullspace(M: Sequence[Sequence[int]], ncols: int | None = None,
                       max_primes: int = 200) -> list[list[Fraction]]:
    """Kernel basis over Q of an integer matrix, in reduced echelon shape
    (identity on the free columns).

    Kernels mod several primes are combined by CRT and rationally
    reconstructed; the result is accepted only after an exact check that
    every vector is annihilated.  Primes whose pivot pattern differs from
    the smallest kernel seen are discarded."""
    nrows = len(M)
    if ncols is None:
        ncols = len(M[0]) if nrows else 0
    if nrows == 0:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    small = all(abs(v) < 2**62 for row in M for v in row)
    base = np.array(M, dtype=np.int64) if small else None
    free_ref: list[int] | None = None
    residues: list[list[int]] = []
    modulus = 1
    for count, p in enumerate(primes()):
        if count >= max_primes:
            raise ArithmeticError("rational reconstruction of the kernel did not stabilize")
        A = (base % p) if small else _reduce(M, p)
        free, basis = nullspace_mod_p(A, p)
        if free_ref is None or len(free) < len(free_ref):
            free_ref, residues, modulus = free, [[0] * ncols for _ in free], 1
        elif free != free_ref:
            continue
        if not free_ref:
            return []
        inv = pow(modulus % p, p - 2, p) if modulus > 1 else 1
        for vec, row in zip(residues, basis.tolist()):
            for j in range(ncols):
                r = vec[j]
                vec[j] = r + modulus * (((row[j] - r) * inv) % p)
        modulus *= p
        bound = math.isqrt(modulus // 2)
        out = []
        for vec in residues:
            rec = [_ratrecon(v, modulus, bound, bound) for v in vec]
            if any(v is None for v in rec):
                break
            out.append(rec)
        else:
            if all(_annihilates(M, v) for v in out):
                return out


def _annihilates(M, v: list[Fraction]) -> bool:
    den = 1
    for c in v:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in v]
    nz = [(j, c) for j, c in enumerate(ints) if c]
    return all(sum(row[j] * c for j, c in nz) == 0 for row in M)


def _det_mod_p(A: np.ndarray, p: int) -> int:
    A = A.copy()
    n = A.shape[0]
    det = 1
    for c in range(n):
        nz = np.flatnonzero(A[c:, c])
        if nz.size == 0:
            return 0
        r = c + int(nz[0])
        if r != c:
            A[[c, r]] = A[[r, c]]
            det = -det
        piv = int(A[c, c])
        det = det * piv % p
        inv = pow(piv, p - 2, p)
        below = A[c + 1:, c].copy()
        mask = np.flatnonzero(below)
        if mask.size:
            rows = mask + c + 1
            f = below[mask] * inv % p
            A[rows, c:] = (A[rows, c:] - np.outer(f, A[c, c:]) % p) % p
    return det % p


def _interpolate_mod_p(xs: list[int], ys: list[int], p: int) -> list[int]:
    """Coefficients (low first) of the interpolating polynomial mod p."""
    n = len(xs)
    coef = list(ys)
    # Newton divided differences
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) * pow(xs[i] - xs[i - j], p - 2, p) % p
    poly = [0] * n
    poly[0] = coef[n - 1]
    deg = 0
    for i in range(n - 2, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        new = [0] * n
        for k in range(deg + 1):
            new[k + 1] = (new[k + 1] + poly[k]) % p
            new[k] = (new[k] - poly[k] * xs[i]) % p
        new[0] = (new[0] + coef[i]) % p
        poly = new
        deg += 1
    return poly


def pencil_det_poly(A0: Sequence[Sequence[int]], A1: Sequence[Sequence[int]]) -> list[int]:
    """Integer coefficients (low first) of ``det(A0 + lam*A1)``.

    Evaluation/interpolation modulo primes, CRT until the product of primes
    exceeds twice the permanent bound ``prod_i sum_j (|a_ij| + |b_ij|)``.
    """
    n = len(A0)
    if n == 0:
        return [1]
    bound = 1
    for r0, r1 in zip(A0, A1):
        bound *= sum(abs(a) + abs(b) for a, b in zip(r0, r1))
    if bound == 0:
        return [0]
    small = all(abs(v) < 2**62 for row in list(A0) + list(A1) for v in row)
    B0 = np.array(A0, dtype=np.int64) if small else None
    B1 = np.array(A1, dtype=np.int64) if small else None
    xs = list(range(n + 1))
    residues: list[int] = [0] * (n + 1)
    modulus = 1
    for p in primes():
        if small:
            M0, M1 = B0 % p, B1 % p
        else:
            M0, M1 = _reduce(A0, p), _reduce(A1, p)
        ys = [_det_mod_p((M0 + x * M1) % p, p) for x in xs]
        coeffs = _interpolate_mod_p(xs, ys, p)
        # CRT
        inv = pow(modulus % p, p - 2, p) if modulus > 1 else 1
        for k in range(n + 1):
            r = residues[k]
            t = ((coeffs[k] - r) * inv) % p
            residues[k] = r + modulus * t
        modulus *= p
        if modulus > 2 * bound:
            break
    half = modulus // 2
    out = [r - modulus if r > half else r for r in residues]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# generic field elimination


def field_rref(rows: list[list], ncols: int, field) -> tuple[list[int], list[list]]:
    """Reduced row echelon form over ``field``; returns (pivot columns, rows).

    Pivots are inverted with ``field.inv``; over ``Q[t]/(m)`` a zero-divisor
    pivot raises ``ZeroDivisorEncountered``.
    """
    A = [list(r) for r in rows]
    pivots: list[int] = []
    k = 0
    nrows = len(A)
    for c in range(ncols):
        if k == nrows:
            break
        r = next((i for i in range(k, nrows) if A[i][c]), None)
        if r is None:
            continue
        A[k], A[r] = A[r], A[k]
        inv = field.inv(A[k][c])
        pivrow = [v * inv if v else v for v in A[k]]
        A[k] = pivrow
        nzc = [j for j in range(c, ncols) if pivrow[j]]
        for i in range(nrows):
            if i == k:
                continue
            f = A[i][c]
            if not f:
                continue
            row = A[i]
            for j in nzc:
                row[j] = row[j] - f * pivrow[j]
        pivots.append(c)
        k += 1
    return pivots, A[:k]


def field_nullspace(rows: list[list], ncols: int, field) -> list[list]:
    pivots, R = field_rref(rows, ncols, field)
    pset = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pset:
            continue
        v = [field.zero] * ncols
        v[fc] = field.one
        for k, pc in enumerate(pivots):
            v[pc] = -R[k][fc]
        basis.append(v)
    return basis


def field_rank(rows: list[list], ncols: int, field) -> int:
    A = [list(r) for r in rows]
    k = 0
    nrows = len(A)
    for c in range(ncols):
        if k == nrows:
            break
        r = next((i for i in range(k, nrows) if A[i][c]), None)
        if r is None:
            continue
        A[k], A[r] = A[r], A[k]
        inv = field.inv(A[k][c])
        pivrow = [v * inv if v else v for v in A[k]]
        nzc = [j for j in range(c + 1, ncols) if pivrow[j]]
        for i in range(k + 1, nrows):
            f = A[i][c]
            if not f:
                continue
            row = A[i]
            row[c] = field.zero
            for j in nzc:
                row[j] = row[j] - f * pivrow[j]
        k += 1
    return k


def charpoly(A: list[list[Fraction]]) -> list[Fraction]:
    """Characteristic polynomial det(t*I - A), coefficients low first
    (Faddeev-LeVerrier; exact over Q)."""
    n = len(A)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        # Mk = A*M_{k-1} + c_{n-k+1} I
        AM = [[sum((A[i][l] * Mk[l][j] for l in range(n) if Mk[l][j]), Fraction(0))
               for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += c_prev
        Mk = AM
        tr = sum((A[i][l] * Mk[l][i] for i in range(n) for l in range(n)), Fraction(0))
        coeffs[n - k] = -tr / k
    return coeffs
