"""Rational functions F_q(t) with exact place-local data.

Elements are num/den with den monic and gcd(num, den) = 1.  Places are
monic irreducible polynomials, plus the infinite place written "inf".
Everything a tame symbol needs lives here: valuation at a place, the unit
part reduced into the residue field, and cached factor support.
"""

from __future__ import annotations

from typing import Optional, Union

from ..errors import UsageError
from .fq import FqField, Value
from .poly import (
    Poly,
    ResidueField,
    factorize,
    is_irreducible,
    is_pzero,
    padd,
    pconst,
    pdeg,
    pdivmod,
    peval,
    pgcd,
    pmod,
    pmonic,
    pmul,
    pneg,
    pstr,
    ptrim,
    pzero,
)

Place = Union[Poly, str]

INF = "inf"


class RatFuncField:
    def __init__(self, fq: FqField, var: str = "t", seed: int = 0):
        self.fq = fq
        self.var = var
        self.seed = seed
        self._factor_cache: dict = {}

    @property
    def descriptor(self) -> str:
        return f"ratfunc({self.fq.q})"

    def __repr__(self) -> str:
        return f"RatFuncField({self.fq.q}, var={self.var!r})"

    def make(self, num: Poly, den: Poly) -> "RatFuncElem":
        num = ptrim(num)
        den = ptrim(den)
        if is_pzero(den):
            raise UsageError("zero denominator")
        if is_pzero(num):
            return RatFuncElem(self, pzero(), pconst(self.fq, self.fq.one))
        g = pgcd(self.fq, num, den)
        if pdeg(g) > 0:
            num = pdivmod(self.fq, num, g)[0]
            den = pdivmod(self.fq, den, g)[0]
        lc = den[-1]
        if not self.fq.is_zero(self.fq.sub(lc, self.fq.one)):
            inv = self.fq.inv(lc)
            num = tuple(self.fq.mul(inv, c) for c in num)
            den = tuple(self.fq.mul(inv, c) for c in den)
        return RatFuncElem(self, num, den)

    def from_poly(self, f: Poly) -> "RatFuncElem":
        return self.make(f, pconst(self.fq, self.fq.one))

    def zero(self) -> "RatFuncElem":
        return self.from_poly(pzero())

    def one(self) -> "RatFuncElem":
        return self.from_poly(pconst(self.fq, self.fq.one))

    def constant(self, c: Value) -> "RatFuncElem":
        return self.from_poly(pconst(self.fq, c))

    def from_int(self, n: int) -> "RatFuncElem":
        return self.constant(self.fq.constant(n))

    def t(self) -> "RatFuncElem":
        return self.from_poly((self.fq.zero, self.fq.one))

    def factor(self, f: Poly) -> list:
        """Cached (unit dropped) monic irreducible factorization of f."""
        key = f
        hit = self._factor_cache.get(key)
        if hit is None:
            _, hit = factorize(self.fq, f, seed=self.seed)
            self._factor_cache[key] = hit
        return hit

    def place_str(self, place: Place) -> str:
        if place == INF:
            return INF
        return pstr(self.fq, place, self.var)

    def check_place(self, place: Place) -> None:
        if place == INF:
            return
        if not isinstance(place, tuple) or pdeg(place) < 1:
            raise UsageError("a place is a monic irreducible polynomial or 'inf'")
        if not self.fq.is_zero(self.fq.sub(place[-1], self.fq.one)):
            raise UsageError("finite places must be monic")
        if not is_irreducible(self.fq, place):
            raise UsageError(f"reducible place {pstr(self.fq, place, self.var)}")


class RatFuncElem:
    __slots__ = ("field", "num", "den", "_support")

    def __init__(self, field: RatFuncField, num: Poly, den: Poly):
        self.field = field
        self.num = num
        self.den = den
        self._support: Optional[dict] = None

    @property
    def is_zero(self) -> bool:
        return is_pzero(self.num)

    def __add__(self, other: "RatFuncElem") -> "RatFuncElem":
        fq = self.field.fq
        num = padd(fq, pmul(fq, self.num, other.den), pmul(fq, other.num, self.den))
        return self.field.make(num, pmul(fq, self.den, other.den))

    def __neg__(self) -> "RatFuncElem":
        return RatFuncElem(self.field, pneg(self.field.fq, self.num), self.den)

    def __sub__(self, other: "RatFuncElem") -> "RatFuncElem":
        return self + (-other)

    def __mul__(self, other: "RatFuncElem") -> "RatFuncElem":
        fq = self.field.fq
        return self.field.make(pmul(fq, self.num, other.num), pmul(fq, self.den, other.den))

    def inverse(self) -> "RatFuncElem":
        if self.is_zero:
            raise UsageError("inverse of zero")
        return self.field.make(self.den, self.num)

    def __truediv__(self, other: "RatFuncElem") -> "RatFuncElem":
        return self * other.inverse()

    def __pow__(self, e: int) -> "RatFuncElem":
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one()
        acc = self
        while e:
            if e & 1:
                out = out * acc
            acc = acc * acc
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFuncElem):
            return NotImplemented
        return self.field is other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((id(self.field), self.num, self.den))

    # -- place-local data

    def valuation(self, place: Place) -> int:
        if self.is_zero:
            raise UsageError("valuation of zero is undefined")
        if place == INF:
            return pdeg(self.den) - pdeg(self.num)
        return _strip(self.field.fq, self.num, place)[1] - _strip(self.field.fq, self.den, place)[1]

    def unit_residue(self, place: Place) -> Poly:
        """Reduce the unit part at `place` into its residue field.

        Returns a polynomial representative mod `place`; at "inf" a constant
        polynomial (the residue field there is F_q itself).
        """
        if self.is_zero:
            raise UsageError("unit part of zero is undefined")
        fq = self.field.fq
        if place == INF:
            lead = fq.mul(self.num[-1], fq.inv(self.den[-1]))
            return pconst(fq, lead)
        n1, _ = _strip(fq, self.num, place)
        d1, _ = _strip(fq, self.den, place)
        rf = ResidueField(fq, place)
        u = rf.mul(pmod(fq, n1, place), rf.inv(pmod(fq, d1, place)))
        return u

    def factor_support(self) -> dict:
        """Map {place: exponent} over finite places, exponents nonzero.

        The infinite place is implied: v_inf = -(sum over finite places of
        exponent * deg place) plus deg adjustments handled by valuation().
        """
        if self._support is None:
            if self.is_zero:
                raise UsageError("factor support of zero is undefined")
            sup: dict = {}
            for pi, e in self.field.factor(self.den):
                sup[pi] = sup.get(pi, 0) - e
            num_monic, _ = pmonic(self.field.fq, self.num)
            for pi, e in self.field.factor(num_monic):
                sup[pi] = sup.get(pi, 0) + e
                if sup[pi] == 0:
                    del sup[pi]
            self._support = sup
        return self._support

    def leading_unit(self) -> Value:
        """Scalar c with self = c * prod pi^(e_pi) over monic irreducibles."""
        if self.is_zero:
            raise UsageError("leading unit of zero is undefined")
        return self.num[-1]

    def support_places(self) -> list:
        """Finite support plus "inf" when v_inf != 0, in display order."""
        places = sorted(self.factor_support(), key=lambda pi: (pdeg(pi), _codes(self.field.fq, pi)))
        out: list = list(places)
        if self.valuation(INF) != 0:
            out.append(INF)
        return out

    def evaluate(self, x: Value) -> Value:
        fq = self.field.fq
        dv = peval(fq, self.den, x)
        if fq.is_zero(dv):
            raise UsageError("evaluation at a pole")
        return fq.mul(peval(fq, self.num, x), fq.inv(dv))

    def __repr__(self) -> str:
        fq = self.field.fq
        s = pstr(fq, self.num, self.field.var)
        if pdeg(self.den) > 0:
            s = f"({s})/({pstr(fq, self.den, self.field.var)})"
        return s


def _strip(fq: FqField, f: Poly, pi: Poly):
    """f = pi^k * g with pi not dividing g; returns (g, k)."""
    k = 0
    while True:
        q, r = pdivmod(fq, f, pi)
        if not is_pzero(r):
            return f, k
        f = q
        k += 1


def _codes(fq: FqField, f: Poly) -> tuple:
    return tuple(fq.code_of(c) for c in f)
