"""Exact arithmetic in finite fields F_{ell^f} with canonical constructions.

Every choice this module makes is deterministic:

* the modulus of F_{ell^f} is the lexicographically smallest monic
  irreducible of degree f (coefficients compared as the integer tuple
  (c_0, ..., c_{f-1}), i.e. by the integer encoding sum c_i ell^i);
* an element's canonical integer encoding is sum c_i ell^i for its
  coefficient vector (c_0, ..., c_{f-1});
* roots of unity, p-th roots and non-residues are always the candidate with
  the smallest encoding.

Element values are plain ints for prime fields and coefficient tuples
(low degree first) for extensions; the field object carries the arithmetic.
"""

from __future__ import annotations

import threading
from typing import Iterator, Optional, Union

from ..errors import UsageError

Value = Union[int, tuple]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any size used here."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
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


def vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise UsageError("vp(0) is undefined")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# polynomial helpers over the prime field (used for the modulus search;
# general polynomial arithmetic over extension fields lives in poly.py)

def _pp_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pp_mulmod(a: list[int], b: list[int], mod: list[int], ell: int) -> list[int]:
    n = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % ell
    for i in range(len(out) - 1, n - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(n):
                out[i - n + j] = (out[i - n + j] - c * mod[j]) % ell
    return _pp_trim(out[:n] if len(out) > n else out)


def _pp_powmod(base: list[int], e: int, mod: list[int], ell: int) -> list[int]:
    result = [1]
    acc = [c % ell for c in base]
    while e:
        if e & 1:
            result = _pp_mulmod(result, acc, mod, ell)
        acc = _pp_mulmod(acc, acc, mod, ell)
        e >>= 1
    return result


def _pp_gcd(a: list[int], b: list[int], ell: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        # reduce a mod b
        inv_lc = pow(b[-1], -1, ell)
        while len(a) >= len(b) and a:
            c = a[-1] * inv_lc % ell
            shift = len(a) - len(b)
            for j in range(len(b)):
                a[shift + j] = (a[shift + j] - c * b[j]) % ell
            _pp_trim(a)
        a, b = b, a
    return a


def _pp_is_irreducible(f: list[int], ell: int) -> bool:
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    # X^(ell^n) == X mod f, and no earlier collapse at n/r for prime r | n
    h = x
    for _ in range(n):
        h = _pp_powmod(h, ell, f, ell)
    probe = list(h)
    if len(probe) < 2:
        probe += [0] * (2 - len(probe))
    probe[1] = (probe[1] - 1) % ell
    if _pp_trim(probe):
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
            h = _pp_powmod(h, ell, f, ell)
        d = list(h)
        if len(d) < 2:
            d += [0] * (2 - len(d))
        d[1] = (d[1] - 1) % ell
        _pp_trim(d)
        if not d or len(_pp_gcd(d, f, ell)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------

class FqField:
    """The field F_{ell^deg} with a fixed monic irreducible modulus."""

    def __init__(self, ell: int, deg: int, modulus: tuple[int, ...]):
        self.ell = ell
        self.deg = deg
        self.q = ell**deg
        self.modulus = modulus
        self._zeta_cache: dict[tuple[int, int], Value] = {}
        self._class_pows: dict[int, dict[Value, int]] = {}

    # -- basic values

    @property
    def zero(self) -> Value:
        return 0 if self.deg == 1 else (0,) * self.deg

    @property
    def one(self) -> Value:
        return 1 if self.deg == 1 else (1,) + (0,) * (self.deg - 1)

    def is_zero(self, x: Value) -> bool:
        return x == 0 if self.deg == 1 else not any(x)

    def elem_from_code(self, code: int) -> Value:
        if not 0 <= code < self.q:
            raise UsageError(f"element code {code} outside [0, {self.q})")
        if self.deg == 1:
            return code
        coeffs = []
        for _ in range(self.deg):
            code, c = divmod(code, self.ell)
            coeffs.append(c)
        return tuple(coeffs)

    def code_of(self, x: Value) -> int:
        if self.deg == 1:
            return x
        code = 0
        for c in reversed(x):
            code = code * self.ell + c
        return code

    def elements(self) -> Iterator[Value]:
        for code in range(self.q):
            yield self.elem_from_code(code)

    def constant(self, n: int) -> Value:
        """Image of the integer n under Z -> F_q."""
        c = n % self.ell
        return c if self.deg == 1 else (c,) + (0,) * (self.deg - 1)

    # -- arithmetic

    def add(self, a: Value, b: Value) -> Value:
        if self.deg == 1:
            return (a + b) % self.ell
        ell = self.ell
        return tuple((x + y) % ell for x, y in zip(a, b))

    def sub(self, a: Value, b: Value) -> Value:
        if self.deg == 1:
            return (a - b) % self.ell
        ell = self.ell
        return tuple((x - y) % ell for x, y in zip(a, b))

    def neg(self, a: Value) -> Value:
        if self.deg == 1:
            return (-a) % self.ell
        ell = self.ell
        return tuple((-x) % ell for x in a)

    def mul(self, a: Value, b: Value) -> Value:
        if self.deg == 1:
            return a * b % self.ell
        ell, d = self.ell, self.deg
        out = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % ell
        mod = self.modulus
        for i in range(2 * d - 2, d - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                for j in range(d):
                    out[i - d + j] = (out[i - d + j] - c * mod[j]) % ell
        return tuple(out[:d])

    def smul(self, n: int, a: Value) -> Value:
        """Scalar multiple by an integer."""
        if self.deg == 1:
            return n * a % self.ell
        ell = self.ell
        return tuple(n * x % ell for x in a)

    def inv(self, a: Value) -> Value:
        if self.is_zero(a):
            raise UsageError("division by zero")
        if self.deg == 1:
            return pow(a, -1, self.ell)
        # extended Euclid on coefficient lists over the prime field
        ell = self.ell
        r0, r1 = list(self.modulus), _pp_trim(list(a))
        s0, s1 = [], [1]
        while r1:
            inv_lc = pow(r1[-1], -1, ell)
            q = [0] * (len(r0) - len(r1) + 1)
            r = list(r0)
            while len(r) >= len(r1) and r:
                c = r[-1] * inv_lc % ell
                shift = len(r) - len(r1)
                q[shift] = c
                for j in range(len(r1)):
                    r[shift + j] = (r[shift + j] - c * r1[j]) % ell
                _pp_trim(r)
            # s = s0 - q*s1
            qs = [0] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        qs[i + j] = (qs[i + j] + qi * sj) % ell
            s = [0] * max(len(s0), len(qs))
            for i, c in enumerate(s0):
                s[i] = c
            for i, c in enumerate(qs):
                s[i] = (s[i] - c) % ell
            _pp_trim(s)
            r0, r1, s0, s1 = r1, r, s1, s
        # r0 is the gcd (a nonzero constant since modulus is irreducible)
        c = pow(r0[0], -1, ell)
        out = [x * c % ell for x in s0]
        out += [0] * (self.deg - len(out))
        return tuple(out[: self.deg])

    def div(self, a: Value, b: Value) -> Value:
        return self.mul(a, self.inv(b))

    def pow(self, a: Value, e: int) -> Value:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        acc = a
        while e:
            if e & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            e >>= 1
        return result

    def frobenius(self, a: Value, times: int = 1) -> Value:
        return self.pow(a, self.ell ** (times % self.deg))

    def __repr__(self) -> str:
        return f"FqField({self.ell}^{self.deg})"

    @property
    def descriptor(self) -> str:
        return f"gf({self.q})"


_FIELD_CACHE: dict[tuple[int, int], FqField] = {}
_FIELD_LOCK = threading.Lock()


def field_make(ell: int, f: int = 1) -> FqField:
    """Return F_{ell^f} with the lexicographically smallest monic modulus.

    Degree-1 fields use the trivial modulus X.  Results are cached, so two
    requests for the same (ell, f) return the identical field object.
    """
    if not is_prime(ell):
        raise UsageError(f"characteristic {ell} is not prime")
    if f < 1:
        raise UsageError(f"extension degree must be >= 1, got {f}")
    key = (ell, f)
    with _FIELD_LOCK:
        cached = _FIELD_CACHE.get(key)
    if cached is not None:
        return cached
    if f == 1:
        modulus = (0, 1)
    else:
        modulus = None
        for code in range(ell**f):
            coeffs, c = [], code
            for _ in range(f):
                c, r = divmod(c, ell)
                coeffs.append(r)
            cand = coeffs + [1]
            if _pp_is_irreducible(cand, ell):
                modulus = tuple(cand)
                break
        if modulus is None:  # cannot happen: irreducibles exist in every degree
            raise UsageError(f"no irreducible of degree {f} over F_{ell}")
    field = FqField(ell, f, modulus)
    with _FIELD_LOCK:
        _FIELD_CACHE.setdefault(key, field)
        return _FIELD_CACHE[key]


def parse_gf_descriptor(text: str) -> FqField:
    """Parse 'gf(q)' with q a prime power."""
    text = text.strip()
    if not (text.startswith("gf(") and text.endswith(")")):
        raise UsageError(f"not a finite-field descriptor: {text!r}")
    try:
        q = int(text[3:-1])
    except ValueError as exc:
        raise UsageError(f"bad field size in {text!r}") from exc
    if q < 2:
        raise UsageError(f"field size must be >= 2, got {q}")
    ell = None
    for cand in range(2, q + 1):
        if q % cand == 0:
            ell = cand
            break
    f = 0
    m = q
    while m % ell == 0:
        m //= ell
        f += 1
    if m != 1 or not is_prime(ell):
        raise UsageError(f"{q} is not a prime power")
    return field_make(ell, f)


# ---------------------------------------------------------------------------
# multiplicative structure: roots of unity, residue classes, p-th roots

def roots_of_unity_depth(field: FqField, p: int) -> int:
    """Largest j with a primitive p^j-th root of unity in the field."""
    if p < 2 or not is_prime(p):
        raise UsageError(f"p must be prime, got {p}")
    n = field.q - 1
    if n % p:
        return 0
    return vp(n, p)


def _exact_order_ppow_element(field: FqField, p: int, j: int) -> Value:
    """Some element of exact multiplicative order p^j (not canonicalized)."""
    n = field.q - 1
    step = n // p**j
    for code in range(2, field.q):
        x = field.elem_from_code(code)
        if field.is_zero(x):
            continue
        eta = field.pow(x, step)
        if field.pow(eta, p ** (j - 1)) != field.one:
            return eta
    raise UsageError(f"no element of order {p}^{j} in {field!r}")


def zeta_ppow(field: FqField, p: int, j: int) -> Value:
    """Smallest-encoding element of exact multiplicative order p^j.

    All exact-order elements are the prime-to-p powers of any one of them,
    so the minimum is taken over that explicit finite set.
    """
    key = (p, j)
    cached = field._zeta_cache.get(key)
    if cached is not None:
        return cached
    if j < 1 or roots_of_unity_depth(field, p) < j:
        raise UsageError(f"field has no primitive {p}^{j}-th roots of unity")
    eta = _exact_order_ppow_element(field, p, j)
    best = None
    best_code = None
    x = field.one
    for i in range(1, p**j):
        x = field.mul(x, eta)
        if i % p == 0:
            continue
        code = field.code_of(x)
        if best_code is None or code < best_code:
            best, best_code = x, code
    field._zeta_cache[key] = best
    return best


def zeta_p(field: FqField, p: int) -> Value:
    return zeta_ppow(field, p, 1)


def power_residue_class(field: FqField, x: Value, p: int) -> int:
    """The class c in Z/p with x^((q-1)/p) = zeta_p^c.

    Surjects onto Z/p and is a homomorphism on units; errors on zero.
    """
    if field.is_zero(x):
        raise UsageError("power_residue_class of zero is undefined")
    if (field.q - 1) % p:
        raise UsageError(f"p={p} does not divide q-1={field.q - 1}")
    table = field._class_pows.get(p)
    if table is None:
        z = zeta_p(field, p)
        table = {}
        acc = field.one
        for c in range(p):
            table[acc] = c
            acc = field.mul(acc, z)
        field._class_pows[p] = table
    y = field.pow(x, (field.q - 1) // p)
    return table[y]


def _dlog_in_ppow_cyclic(field: FqField, s: Value, zeta: Value, p: int, a: int) -> int:
    """Discrete log of s base zeta where zeta has exact order p^a."""
    e = 0
    gamma = field.pow(zeta, p ** (a - 1))  # order p
    zeta_inv = field.inv(zeta)
    for i in range(a):
        h = field.pow(field.mul(s, field.pow(zeta_inv, e)), p ** (a - 1 - i))
        digit = None
        acc = field.one
        for d in range(p):
            if acc == h:
                digit = d
                break
            acc = field.mul(acc, gamma)
        if digit is None:
            raise UsageError("element outside the p-power torsion subgroup")
        e += digit * p**i
    return e


def try_pth_root(field: FqField, x: Value, p: int) -> Optional[Value]:
    """The canonical p-th root of x, or None when x is not a p-th power.

    Canonical means smallest integer encoding among the p roots.
    """
    if field.is_zero(x):
        return field.zero
    n = field.q - 1
    a = vp(n, p) if n % p == 0 else 0
    if a == 0:
        return field.pow(x, pow(p, -1, n))
    m = n // p**a
    # split off the p-Sylow component: x = s * u with s of p-power order
    alpha = pow(m, -1, p**a)
    s = field.pow(x, m * alpha)
    u = field.mul(x, field.inv(s))
    if m > 1:
        ru = field.pow(u, pow(p, -1, m))
    else:
        ru = field.one
    zeta = zeta_ppow(field, p, a)
    e = _dlog_in_ppow_cyclic(field, s, zeta, p, a)
    if e % p:
        return None
    y0 = field.mul(field.pow(zeta, e // p), ru)
    z = zeta_p(field, p)
    best, best_code = y0, field.code_of(y0)
    y = y0
    for _ in range(p - 1):
        y = field.mul(y, z)
        code = field.code_of(y)
        if code < best_code:
            best, best_code = y, code
    return best


def pth_root_fq(field: FqField, x: Value, p: int) -> Value:
    """Canonical p-th root; raises when x is not a p-th power."""
    root = try_pth_root(field, x, p)
    if root is None:
        raise UsageError(
            f"element with code {field.code_of(x)} is not a {p}-th power in F_{field.q}"
        )
    return root


def canonical_nonresidue(field: FqField, p: int) -> Value:
    """Smallest-encoding unit whose power-residue class is exactly 1.

    This is the canonical choice of class-group basis unit: by construction
    its residue character is the distinguished generator, so pairings
    against it read off classes directly.
    """
    for code in range(1, field.q):
        x = field.elem_from_code(code)
        if power_residue_class(field, x, p) == 1:
            return x
    raise UsageError(f"no non-residue unit in F_{field.q} for p={p}")
