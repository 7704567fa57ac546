"""Exact truncated Laurent series F_q((t)).

Every element is t^val * (c_0 + c_1 t + ...) with c_0 != 0, together with
one of two tail statements:

* exact: all coefficients beyond the stored ones are zero (the element is a
  Laurent polynomial, known everywhere); or
* truncated: the element is only known modulo O(t^(val + len(coeffs))).

Arithmetic propagates the known window honestly and raises PrecisionError
instead of ever inventing or silently dropping coefficients.  A truncated
element whose known coefficients all cancel is carried as an explicit
O(t^h) marker (empty coefficient tuple); asking such an element for its
valuation or unit part fails rather than guessing.

The field's `prec` is the working window: truncated results are capped at
prec known coefficients.
"""

from __future__ import annotations

from typing import Optional, Sequence

from ..errors import PrecisionError, UsageError
from .fq import FqField, Value, pth_root_fq


class LaurentField:
    def __init__(self, fq: FqField, prec: int = 64, var: str = "t"):
        if prec < 8:
            raise UsageError(f"series precision must be >= 8, got {prec}")
        self.fq = fq
        self.prec = prec
        self.var = var

    @property
    def descriptor(self) -> str:
        return f"laurent({self.fq.q},{self.prec})"

    def __repr__(self) -> str:
        return f"LaurentField({self.fq.q}, prec={self.prec}, var={self.var!r})"

    # -- constructors

    def make(self, val: int, coeffs: Sequence[Value], exact: bool, horizon: Optional[int] = None) -> "LaurentElem":
        """Normalize a coefficient window starting at t^val into an element.

        `horizon` is the first unknown exponent for truncated input; it
        defaults to val + len(coeffs).
        """
        cs = list(coeffs)
        if horizon is None:
            horizon = val + len(cs)
        if exact:
            while cs and self.fq.is_zero(cs[-1]):
                cs.pop()
        while cs and self.fq.is_zero(cs[0]):
            cs.pop(0)
            val += 1
        if not cs:
            if exact:
                return LaurentElem(self, 0, (), True)
            return LaurentElem(self, horizon, (), False)
        if exact:
            return LaurentElem(self, val, tuple(cs), True)
        keep = min(horizon - val, self.prec)
        if keep <= 0:
            return LaurentElem(self, horizon, (), False)
        return LaurentElem(self, val, tuple(cs[:keep]), False)

    def zero(self) -> "LaurentElem":
        return LaurentElem(self, 0, (), True)

    def one(self) -> "LaurentElem":
        return LaurentElem(self, 0, (self.fq.one,), True)

    def constant(self, c: Value) -> "LaurentElem":
        if self.fq.is_zero(c):
            return self.zero()
        return LaurentElem(self, 0, (c,), True)

    def from_int(self, n: int) -> "LaurentElem":
        return self.constant(self.fq.constant(n))

    def monomial(self, v: int, c: Optional[Value] = None) -> "LaurentElem":
        c = self.fq.one if c is None else c
        if self.fq.is_zero(c):
            return self.zero()
        return LaurentElem(self, v, (c,), True)

    def t(self) -> "LaurentElem":
        return self.monomial(1)

    def from_int_coeffs(self, val: int, int_coeffs: Sequence[int]) -> "LaurentElem":
        return self.make(val, [self.fq.constant(c) for c in int_coeffs], True)


class LaurentElem:
    __slots__ = ("field", "val", "coeffs", "exact")

    def __init__(self, field: LaurentField, val: int, coeffs: tuple, exact: bool):
        self.field = field
        self.val = val
        self.coeffs = coeffs
        self.exact = exact

    # -- state predicates

    @property
    def is_exact_zero(self) -> bool:
        return self.exact and not self.coeffs

    @property
    def is_unknown(self) -> bool:
        """True for an O(t^val) marker with no known nonzero coefficient."""
        return not self.exact and not self.coeffs

    @property
    def horizon(self) -> Optional[int]:
        """First exponent with unknown coefficient; None when exact."""
        if self.exact:
            return None
        return self.val + len(self.coeffs)

    def valuation(self) -> int:
        if self.is_exact_zero:
            raise UsageError("valuation of zero is undefined")
        if self.is_unknown:
            raise PrecisionError(
                f"element vanishes to available precision O({self.field.var}^{self.val})"
            )
        return self.val

    def leading(self) -> Value:
        self.valuation()
        return self.coeffs[0]

    def coefficient(self, n: int) -> Value:
        """Coefficient of t^n; fails when n is beyond the known window."""
        if n < self.val:
            return self.field.fq.zero
        if n - self.val < len(self.coeffs):
            return self.coeffs[n - self.val]
        if self.exact:
            return self.field.fq.zero
        raise PrecisionError(
            f"coefficient of {self.field.var}^{n} beyond stored precision "
            f"O({self.field.var}^{self.horizon})"
        )

    # -- ring operations

    def _binop_horizon(self, other: "LaurentElem") -> Optional[int]:
        hs = [h for h in (self.horizon, other.horizon) if h is not None]
        return min(hs) if hs else None

    def __add__(self, other: "LaurentElem") -> "LaurentElem":
        fq = self.field.fq
        if self.is_exact_zero:
            return other
        if other.is_exact_zero:
            return self
        horizon = self._binop_horizon(other)
        starts = [e.val for e in (self, other) if e.coeffs]
        if not starts:
            return LaurentElem(self.field, horizon, (), False)
        lo = min(starts)
        if horizon is not None:
            # exact operands are known at every exponent, truncated ones up
            # to their horizon, so the sum is determined on all of [lo, hi)
            hi = horizon
        else:
            hi = max(e.val + len(e.coeffs) for e in (self, other) if e.coeffs)
        if hi <= lo:
            return LaurentElem(self.field, horizon, (), False)
        out = [fq.zero] * (hi - lo)
        for e in (self, other):
            for i, c in enumerate(e.coeffs):
                n = e.val + i
                if n < hi:
                    out[n - lo] = fq.add(out[n - lo], c)
        return self.field.make(lo, out, horizon is None, horizon)

    def __neg__(self) -> "LaurentElem":
        fq = self.field.fq
        return LaurentElem(self.field, self.val, tuple(fq.neg(c) for c in self.coeffs), self.exact)

    def __sub__(self, other: "LaurentElem") -> "LaurentElem":
        return self + (-other)

    def __mul__(self, other: "LaurentElem") -> "LaurentElem":
        fq = self.field.fq
        if self.is_exact_zero or other.is_exact_zero:
            return self.field.zero()
        if self.is_unknown or other.is_unknown:
            # O(t^a) * (t^b * unit + ...) = O(t^(a+b))
            return LaurentElem(self.field, self.val + other.val, (), False)
        exact = self.exact and other.exact
        if exact:
            n = len(self.coeffs) + len(other.coeffs) - 1
        else:
            windows = []
            if not self.exact:
                windows.append(len(self.coeffs))
            if not other.exact:
                windows.append(len(other.coeffs))
            n = min(min(windows), self.field.prec)
        out = [fq.zero] * n
        for i, a in enumerate(self.coeffs):
            if i >= n:
                break
            if fq.is_zero(a):
                continue
            jmax = min(len(other.coeffs), n - i)
            for j in range(jmax):
                out[i + j] = fq.add(out[i + j], fq.mul(a, other.coeffs[j]))
        val = self.val + other.val
        return self.field.make(val, out, exact, None if exact else val + n)

    def scale(self, c: Value) -> "LaurentElem":
        fq = self.field.fq
        if fq.is_zero(c):
            return self.field.zero()
        return LaurentElem(self.field, self.val, tuple(fq.mul(c, x) for x in self.coeffs), self.exact)

    def shift(self, k: int) -> "LaurentElem":
        """Multiply by t^k."""
        if self.is_exact_zero:
            return self
        return LaurentElem(self.field, self.val + k, self.coeffs, self.exact)

    def inverse(self) -> "LaurentElem":
        fq = self.field.fq
        v = self.valuation()
        cs = self.coeffs
        if len(cs) == 1 and self.exact:
            return LaurentElem(self.field, -v, (fq.inv(cs[0]),), True)
        n = min(len(cs) if not self.exact else self.field.prec, self.field.prec)
        inv0 = fq.inv(cs[0])
        out = [fq.zero] * n
        out[0] = inv0
        for i in range(1, n):
            acc = fq.zero
            for j in range(1, min(i, len(cs) - 1) + 1):
                acc = fq.add(acc, fq.mul(cs[j], out[i - j]))
            out[i] = fq.neg(fq.mul(inv0, acc))
        return self.field.make(-v, out, False, -v + n)

    def __truediv__(self, other: "LaurentElem") -> "LaurentElem":
        return self * other.inverse()

    def __pow__(self, e: int) -> "LaurentElem":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    # -- p-th roots

    def pth_root(self, p: int) -> "LaurentElem":
        """Canonical p-th root; requires p | valuation and a residue root.

        The unit-part root is pinned by choosing the canonical root of the
        leading coefficient; higher coefficients follow by the recursion
        p*y0^(p-1)*y_i = c_i - [t^i]((y_0 + ... + y_{i-1}t^{i-1})^p).
        """
        fq = self.field.fq
        v = self.valuation()
        if v % p:
            raise UsageError(f"valuation {v} not divisible by p={p}; no root in this field")
        y0 = pth_root_fq(fq, self.coeffs[0], p)
        if len(self.coeffs) == 1 and self.exact:
            return LaurentElem(self.field, v // p, (y0,), True)
        n = min(len(self.coeffs) if not self.exact else self.field.prec, self.field.prec)
        ys = [y0]
        lead_inv = fq.inv(fq.smul(p, fq.pow(y0, p - 1)))
        for i in range(1, n):
            # ((partial) + y_i t^i)^p = partial^p + p y0^(p-1) y_i t^i + O(t^(i+1))
            partial = _poly_pow_trunc(fq, ys, p, i + 1)
            ci = self.coeffs[i] if i < len(self.coeffs) else fq.zero
            rhs = fq.sub(ci, partial[i] if i < len(partial) else fq.zero)
            ys.append(fq.mul(lead_inv, rhs))
        return self.field.make(v // p, ys, False, v // p + n)

    def derivative(self) -> "LaurentElem":
        """Formal d/dt; the known window shrinks by nothing, exactness keeps."""
        fq = self.field.fq
        if self.is_exact_zero:
            return self
        if self.is_unknown:
            return LaurentElem(self.field, self.val - 1, (), False)
        out = [fq.smul(self.val + i, c) for i, c in enumerate(self.coeffs)]
        return self.field.make(self.val - 1, out, self.exact,
                               None if self.exact else self.horizon - 1)

    # -- reindexing

    def inflate(self, e: int, target: Optional[LaurentField] = None) -> "LaurentElem":
        """Substitute t -> s^e (exact exponent scaling)."""
        field = target or self.field
        if self.is_exact_zero:
            return field.zero()
        if self.is_unknown:
            return LaurentElem(field, self.val * e, (), False)
        fq = field.fq
        out = [fq.zero] * ((len(self.coeffs) - 1) * e + 1)
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        horizon = None if self.exact else (self.val + len(self.coeffs)) * e
        return field.make(self.val * e, out, self.exact, horizon)

    def deflate(self, e: int, target: Optional[LaurentField] = None) -> "LaurentElem":
        """Substitute s^e -> t; requires support on multiples of e."""
        field = target or self.field
        if self.is_exact_zero:
            return field.zero()
        if self.is_unknown:
            return LaurentElem(field, self.val // e, (), False)
        if self.val % e:
            raise UsageError("support not contained in multiples of the ramification index")
        fq = field.fq
        out = []
        for i, c in enumerate(self.coeffs):
            if i % e == 0:
                out.append(c)
            elif not fq.is_zero(c):
                raise UsageError("support not contained in multiples of the ramification index")
        horizon = None if self.exact else (self.val + len(self.coeffs) + e - 1) // e
        return field.make(self.val // e, out, self.exact, horizon)

    def map_coefficients(self, apply, target: LaurentField) -> "LaurentElem":
        """Push through a coefficient-field embedding."""
        out = [apply(c) for c in self.coeffs]
        return target.make(self.val, out, self.exact, self.horizon)

    def compose(self, g: "LaurentElem") -> "LaurentElem":
        """Evaluate at g: sum c_i g^(val+i).  Needs v(g) >= 1.

        The unknown tail O(t^h) contributes O(g^h), which is tracked.
        """
        if g.is_exact_zero or g.valuation() < 1:
            raise UsageError("composition needs a positive-valuation argument")
        field = g.field
        if self.is_exact_zero:
            return field.zero()
        if self.is_unknown:
            return LaurentElem(field, g.valuation() * self.val, (), False)
        acc = field.zero()
        for c in reversed(self.coeffs):
            acc = acc * g + field.constant(c)
        acc = acc * (g**self.val)
        if not self.exact:
            tail_val = g.valuation() * self.horizon
            acc = acc + LaurentElem(field, tail_val, (), False)
        return acc

    # -- comparisons

    def known_equal(self, other: "LaurentElem", upto: Optional[int] = None) -> bool:
        """Equality over the jointly known window; needs the window to reach `upto`."""
        diff = self - other
        if diff.is_exact_zero:
            return True
        if diff.is_unknown:
            if upto is not None and diff.val < upto:
                raise PrecisionError(
                    f"equality undecidable beyond O({self.field.var}^{diff.val})"
                )
            return True
        if upto is not None and diff.valuation() >= upto:
            return True
        return False

    # -- display

    def to_literal(self) -> str:
        if self.is_exact_zero:
            return "0"
        if self.is_unknown:
            return f"O({self.field.var}^{self.val})"
        fq = self.field.fq
        shown = list(self.coeffs)
        # trailing known zeros are implied by the O-term, keep the window short
        while len(shown) > 1 and not self.exact and fq.is_zero(shown[-1]):
            shown.pop()
        codes = ",".join(str(fq.code_of(c)) for c in shown)
        base = f"{self.field.var}^{self.val}*[{codes}]"
        if not self.exact:
            base += f"+O({self.field.var}^{self.horizon})"
        return base

    def __repr__(self) -> str:
        return f"LaurentElem({self.to_literal()})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentElem):
            return NotImplemented
        return (
            self.field is other.field
            and self.val == other.val
            and self.coeffs == other.coeffs
            and self.exact == other.exact
        )

    def __hash__(self):
        return hash((id(self.field), self.val, self.coeffs, self.exact))


def _poly_pow_trunc(fq: FqField, cs: list, p: int, n: int) -> list:
    """(sum cs[i] t^i)^p truncated to n coefficients."""
    out = [fq.one]
    base = list(cs[:n])
    e = p
    while e:
        if e & 1:
            out = _poly_mul_trunc(fq, out, base, n)
        base = _poly_mul_trunc(fq, base, base, n)
        e >>= 1
    return out


def _poly_mul_trunc(fq: FqField, a: list, b: list, n: int) -> list:
    out = [fq.zero] * min(n, len(a) + len(b) - 1 if a and b else 0)
    for i, x in enumerate(a):
        if i >= n or fq.is_zero(x):
            continue
        for j in range(min(len(b), n - i)):
            out[i + j] = fq.add(out[i + j], fq.mul(x, b[j]))
    return out
