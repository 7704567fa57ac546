"""Dense univariate polynomial arithmetic over an FqField.

Polynomials are tuples of field values, low degree first, with no trailing
zeros; () is the zero polynomial.  Factorization is squarefree split +
distinct-degree + equal-degree with a seeded generator, so results are
reproducible; the factor list is sorted by (degree, coefficient codes).
"""

from __future__ import annotations

import random
import zlib
from typing import Iterator, Optional

from ..errors import UsageError, VerificationError
from .fq import FqField, Value

Poly = tuple


def _vzero(v: Value) -> bool:
    return (v == 0) if isinstance(v, int) else not any(v)


def ptrim(cs: list) -> Poly:
    n = len(cs)
    while n and _vzero(cs[n - 1]):
        n -= 1
    return tuple(cs[:n])


def pzero() -> Poly:
    return ()


def pone(field: FqField) -> Poly:
    return (field.one,)


def pX(field: FqField) -> Poly:
    return (field.zero, field.one)


def pconst(field: FqField, v: Value) -> Poly:
    return () if field.is_zero(v) else (v,)


def pdeg(f: Poly) -> int:
    return len(f) - 1


def is_pzero(f: Poly) -> bool:
    return not f


def padd(field: FqField, f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = field.add(out[i], c)
    return ptrim(out)


def pneg(field: FqField, f: Poly) -> Poly:
    return tuple(field.neg(c) for c in f)


def psub(field: FqField, f: Poly, g: Poly) -> Poly:
    return padd(field, f, pneg(field, g))


def pscale(field: FqField, c: Value, f: Poly) -> Poly:
    if field.is_zero(c):
        return ()
    return ptrim([field.mul(c, x) for x in f])


def pmul(field: FqField, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not field.is_zero(a):
            for j, b in enumerate(g):
                out[i + j] = field.add(out[i + j], field.mul(a, b))
    return ptrim(out)


def pshift(field: FqField, f: Poly, k: int) -> Poly:
    """Multiply by X^k."""
    if not f:
        return ()
    return (field.zero,) * k + tuple(f)


def pdivmod(field: FqField, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise UsageError("polynomial division by zero")
    if len(f) < len(g):
        return (), f
    inv_lc = field.inv(g[-1])
    rem = list(f)
    quot = [field.zero] * (len(f) - len(g) + 1)
    for i in range(len(f) - len(g), -1, -1):
        c = field.mul(rem[i + len(g) - 1], inv_lc)
        if field.is_zero(c):
            continue
        quot[i] = c
        for j in range(len(g)):
            rem[i + j] = field.sub(rem[i + j], field.mul(c, g[j]))
    return ptrim(quot), ptrim(rem[: len(g) - 1])


def pmod(field: FqField, f: Poly, g: Poly) -> Poly:
    return pdivmod(field, f, g)[1]


def pmonic(field: FqField, f: Poly) -> tuple[Poly, Value]:
    """Return (monic multiple, leading coefficient)."""
    if not f:
        return (), field.one
    lc = f[-1]
    if lc == field.one:
        return f, lc
    return pscale(field, field.inv(lc), f), lc


def pgcd(field: FqField, f: Poly, g: Poly) -> Poly:
    while g:
        f, g = g, pmod(field, f, g)
    return pmonic(field, f)[0]


def pxgcd(field: FqField, f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """(d, u, v) with u*f + v*g = d, d monic."""
    r0, r1 = f, g
    s0, s1 = pone(field), pzero()
    t0, t1 = pzero(), pone(field)
    while r1:
        q, r = pdivmod(field, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(field, s0, pmul(field, q, s1))
        t0, t1 = t1, psub(field, t0, pmul(field, q, t1))
    if not r0:
        return (), s0, t0
    c = field.inv(r0[-1])
    return pscale(field, c, r0), pscale(field, c, s0), pscale(field, c, t0)


def ppowmod(field: FqField, f: Poly, e: int, mod: Poly) -> Poly:
    result = pone(field)
    acc = pmod(field, f, mod)
    while e:
        if e & 1:
            result = pmod(field, pmul(field, result, acc), mod)
        acc = pmod(field, pmul(field, acc, acc), mod)
        e >>= 1
    return result


def pderiv(field: FqField, f: Poly) -> Poly:
    return ptrim([field.smul(i, f[i]) for i in range(1, len(f))])


def peval(field: FqField, f: Poly, x: Value) -> Value:
    acc = field.zero
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def pcodes(field: FqField, f: Poly) -> tuple[int, ...]:
    return tuple(field.code_of(c) for c in f)


def pfrom_int_coeffs(field: FqField, coeffs: list[int]) -> Poly:
    return ptrim([field.constant(c) for c in coeffs])


def pstr(field: FqField, f: Poly, var: str = "t") -> str:
    """Canonical display, highest degree first, coefficients as codes."""
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if field.is_zero(c):
            continue
        code = field.code_of(c)
        if i == 0:
            parts.append(str(code))
        elif i == 1:
            parts.append(f"{var}" if code == 1 else f"{code}*{var}")
        else:
            parts.append(f"{var}^{i}" if code == 1 else f"{code}*{var}^{i}")
    return "+".join(parts)


# ---------------------------------------------------------------------------
# irreducibility, factorization, roots

def is_irreducible(field: FqField, f: Poly) -> bool:
    n = pdeg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    x = pX(field)
    h = x
    for _ in range(n):
        h = ppowmod(field, h, field.q, f)
    if psub(field, h, x):
        return False
    m, r = n, 2
    primes = []
    while r * r <= m:
        if m % r == 0:
            primes.append(r)
            while m % r == 0:
                m //= r
        r += 1
    if m > 1:
        primes.append(m)
    for r in primes:
        h = x
        for _ in range(n // r):
            h = ppowmod(field, h, field.q, f)
        if pdeg(pgcd(field, psub(field, h, x), f)) != 0:
            return False
    return True


def _ell_th_root_poly(field: FqField, f: Poly) -> Poly:
    """For f with zero derivative, i.e. f(X) = g(X^ell), return g."""
    ell = field.ell
    out = []
    for i in range(0, len(f), ell):
        # coefficient ell-th root: x -> x^(q/ell) inverts Frobenius
        out.append(field.pow(f[i], field.q // ell))
    return ptrim(out)


def squarefree_decomposition(field: FqField, f: Poly) -> list[tuple[Poly, int]]:
    """[(g_i, m_i)] with f = lc * prod g_i^{m_i}, g_i monic squarefree coprime."""
    f = pmonic(field, f)[0]
    result: dict[int, Poly] = {}

    def accumulate(g: Poly, mult: int) -> None:
        if pdeg(g) > 0:
            if mult in result:
                result[mult] = pmul(field, result[mult], g)
            else:
                result[mult] = g

    def walk(f: Poly, outer: int) -> None:
        if pdeg(f) < 1:
            return
        df = pderiv(field, f)
        if is_pzero(df):
            walk(_ell_th_root_poly(field, f), outer * field.ell)
            return
        c = pgcd(field, f, df)
        w = pdivmod(field, f, c)[0]
        i = 1
        while pdeg(w) > 0:
            y = pgcd(field, w, c)
            z = pdivmod(field, w, y)[0]
            accumulate(z, i * outer)
            w = y
            c = pdivmod(field, c, y)[0]
            i += 1
        walk(c, outer)

    walk(f, 1)
    return sorted(
        ((g, m) for m, g in result.items()),
        key=lambda it: (it[1], pdeg(it[0]), pcodes(field, it[0])),
    )


def _distinct_degree(field: FqField, f: Poly) -> list[tuple[Poly, int]]:
    """Split a monic squarefree f into products of same-degree irreducibles."""
    out = []
    h = pX(field)
    d = 0
    while pdeg(f) > 2 * (d + 1) - 1 and pdeg(f) > 0:
        d += 1
        h = ppowmod(field, h, field.q, f)
        g = pgcd(field, psub(field, h, pX(field)), f)
        if pdeg(g) > 0:
            out.append((g, d))
            f = pdivmod(field, f, g)[0]
            h = pmod(field, h, f)
    if pdeg(f) > 0:
        out.append((f, pdeg(f)))
    return out


def _random_poly(field: FqField, rng: random.Random, deg: int) -> Poly:
    cs = [field.elem_from_code(rng.randrange(field.q)) for _ in range(deg + 1)]
    return ptrim(cs)


def _equal_degree(field: FqField, f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus split of monic squarefree f into irreducibles of degree d."""
    n = pdeg(f)
    if n == d:
        return [f]
    while True:
        r = _random_poly(field, rng, 2 * d)
        if pdeg(r) < 1:
            continue
        if field.q % 2 == 1:
            e = (field.q**d - 1) // 2
            b = ppowmod(field, r, e, f)
            g = pgcd(field, psub(field, b, pone(field)), f)
        else:
            # trace map splitter for characteristic 2
            b = pzero()
            acc = pmod(field, r, f)
            for _ in range(d * field.deg):
                b = padd(field, b, acc)
                acc = ppowmod(field, acc, 2, f)
            g = pgcd(field, b, f)
        if 0 < pdeg(g) < n:
            rest = pdivmod(field, f, g)[0]
            return _equal_degree(field, g, d, rng) + _equal_degree(field, rest, d, rng)


def _stable_seed(field: FqField, f: Poly, seed: int) -> int:
    blob = repr((field.ell, field.deg, pcodes(field, f), seed)).encode()
    return zlib.crc32(blob)


def factorize(field: FqField, f: Poly, seed: int = 0) -> tuple[Value, list[tuple[Poly, int]]]:
    """Full factorization: (unit, [(monic irreducible, multiplicity)]).

    Deterministic for a fixed seed; the product of the parts is re-checked
    against the input exactly.
    """
    if not f:
        raise UsageError("cannot factor the zero polynomial")
    unit = f[-1]
    rng = random.Random(_stable_seed(field, f, seed))
    factors: list[tuple[Poly, int]] = []
    for g, mult in squarefree_decomposition(field, f):
        for h, d in _distinct_degree(field, g):
            for irr in _equal_degree(field, h, d, rng):
                factors.append((irr, mult))
    factors.sort(key=lambda it: (pdeg(it[0]), pcodes(field, it[0])))
    check = pconst(field, unit)
    for g, m in factors:
        for _ in range(m):
            check = pmul(field, check, g)
    if check != pmonic(field, f)[0] and check != f:
        raise VerificationError("factorization does not multiply back to the input")
    return unit, factors


def find_roots(field: FqField, f: Poly, seed: int = 0) -> list[Value]:
    """All roots in the field, sorted by canonical encoding."""
    if not f:
        raise UsageError("zero polynomial has every root")
    if pdeg(f) == 0:
        return []
    # keep only the split part: gcd with X^q - X
    xq = ppowmod(field, pX(field), field.q, f)
    g = pgcd(field, psub(field, xq, pX(field)), f)
    roots = []
    if pdeg(g) > 0:
        rng = random.Random(_stable_seed(field, f, seed ^ 0x5EED))
        for part, mult in squarefree_decomposition(field, g):
            if pdeg(part) == 0:
                continue
            for irr in _equal_degree(field, part, 1, rng):
                roots.append(field.neg(irr[0]))
    roots.sort(key=field.code_of)
    return roots


def resultant(field: FqField, f: Poly, g: Poly) -> Value:
    """res(f, g) via the Euclidean recurrence."""
    if not f or not g:
        return field.zero
    a, b = f, g
    acc = field.one
    sign_flip = False
    while pdeg(b) > 0:
        r = pmod(field, a, b)
        if not r:
            return field.zero
        da, db, dr = pdeg(a), pdeg(b), pdeg(r)
        acc = field.mul(acc, field.pow(b[-1], da - dr))
        if (da * db) % 2 == 1:
            sign_flip = not sign_flip
        a, b = b, r
    # b is a nonzero constant
    acc = field.mul(acc, field.pow(b[0], pdeg(a)))
    return field.neg(acc) if sign_flip else acc


# ---------------------------------------------------------------------------
# quotient ring F_q[X]/(pi) viewed as the residue field of a place

class ResidueField:
    """Arithmetic in F_q[X]/(pi) for monic irreducible pi, plus the norm map."""

    def __init__(self, base: FqField, pi: Poly):
        if pdeg(pi) < 1:
            raise UsageError("residue field needs a non-constant modulus")
        self.base = base
        self.pi = pi
        self.deg = pdeg(pi)
        self.order = base.q**self.deg

    def reduce(self, f: Poly) -> Poly:
        return pmod(self.base, f, self.pi)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return pmod(self.base, pmul(self.base, a, b), self.pi)

    def inv(self, a: Poly) -> Poly:
        d, u, _ = pxgcd(self.base, a, self.pi)
        if pdeg(d) != 0:
            raise UsageError("element not invertible in residue field")
        return pmod(self.base, pscale(self.base, self.base.inv(d[0]), u), self.pi)

    def pow(self, a: Poly, e: int) -> Poly:
        if e < 0:
            return self.pow(self.inv(a), -e)
        return ppowmod(self.base, a, e, self.pi)

    def norm_to_base(self, a: Poly) -> Value:
        """Norm down to F_q: x^((q^d - 1)/(q - 1)) for units, 0 for 0."""
        if not a:
            return self.base.zero
        e = (self.order - 1) // (self.base.q - 1)
        n = self.pow(a, e)
        if pdeg(n) > 0:
            raise VerificationError("norm did not land in the base field")
        return n[0] if n else self.base.zero
