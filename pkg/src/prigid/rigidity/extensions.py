"""Adjoining a p-th root to F_q((t)), with an explicit embedding each time.

Three shapes, decided by the class coordinates of a = t^v * u:

* (0, 0): a was already a p-th power; nothing extends.
* unit class nonzero, v = 0 mod p: unramified.  The constants grow to
  F_(q^p), where every old scalar is a p-th power since (q^p-1)/p is a
  multiple of q-1.
* v nonzero mod p: ramified.  With xv + yp = 1 the new uniformizer s is
  pinned by s^p = t u^x, which makes a^(1/p) = s^v u^y exactly: raising it
  to the p gives t^(xvp+yp... ) -- algebra, not approximation: (s^v u^y)^p
  = (t u^x)^v u^(yp) = t^v u^(xv+yp) = a.

The ramified embedding needs t as a series in s.  Writing t = s^p W(s^p),
W solves W * u(zW)^x = 1 in the deflated variable z = s^p; a Newton loop
doubles the correct window each round, so the cost stays near one series
composition.

Everything returned carries its own round-trip verification.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional

from ..errors import PrecisionError, UsageError, VerificationError
from ..fields.embed import FieldEmbedding, embed_field
from ..fields.fq import field_make
from ..fields.laurent import LaurentElem, LaurentField
from .symbols import laurent_class_coords, require_mu_p


@dataclass
class RootExtension:
    kind: str  # trivial | unramified | ramified
    p: int
    base: LaurentField
    ext: LaurentField
    a: LaurentElem
    root: LaurentElem
    embed: Callable[[LaurentElem], LaurentElem]
    data: dict = dc_field(default_factory=dict)

    def verify(self, upto: Optional[int] = None) -> bool:
        image = self.embed(self.a)
        ok = (self.root ** self.p).known_equal(image, upto)
        if not ok:
            raise VerificationError("root^p does not match the embedded element")
        return True


def extend_by_pth_root(base: LaurentField, a: LaurentElem, p: int) -> RootExtension:
    fq = base.fq
    require_mu_p(fq, p)
    coords = laurent_class_coords(a, p)
    if coords == (0, 0):
        root = a.pth_root(p)
        ext = RootExtension("trivial", p, base, base, a, root, lambda f: f,
                            {"coords": list(coords)})
        ext.verify()
        return ext
    if coords[1] == 0:
        return _unramified(base, a, p, coords)
    return _ramified(base, a, p, coords)


def _unramified(base: LaurentField, a: LaurentElem, p: int, coords) -> RootExtension:
    fq = base.fq
    fq2 = field_make(fq.ell, fq.deg * p)
    emb = embed_field(fq, fq2)
    ext_field = LaurentField(fq2, base.prec, base.var)

    def embed(f: LaurentElem) -> LaurentElem:
        return f.map_coefficients(emb.apply, ext_field)

    root = embed(a).pth_root(p)
    ext = RootExtension("unramified", p, base, ext_field, a, root, embed, {
        "coords": list(coords),
        "constants": f"gf({fq2.q})",
        "modulus": list(fq2.modulus),
    })
    ext.verify()
    return ext


def _bezout(v: int, p: int) -> tuple[int, int]:
    """x, y with x*v + y*p = 1 and 0 < x < p."""
    x = pow(v % p, -1, p)
    y = (1 - x * v) // p
    return x, y


def _ramified(base: LaurentField, a: LaurentElem, p: int, coords) -> RootExtension:
    fq = base.fq
    v = a.valuation()
    x, y = _bezout(v, p)
    u = a.shift(-v)  # the unit part, valuation 0
    w = _solve_deflated_unit(base, u, x, p)
    ext_field = LaurentField(fq, base.prec * p, "s")
    t_image = w.inflate(p, ext_field).shift(p)  # t = s^p W(s^p)

    def embed(f: LaurentElem) -> LaurentElem:
        return f.compose(t_image)

    root = ext_field.monomial(v) * embed(u**y)
    ext = RootExtension("ramified", p, base, ext_field, a, root, embed, {
        "coords": list(coords),
        "x": x,
        "y": y,
        "relation": f"s^{p} = t*u^{x}",
        "t_image": t_image.to_literal(),
    })
    ext.verify()
    return ext


def _solve_deflated_unit(base: LaurentField, u: LaurentElem, x: int, p: int) -> LaurentElem:
    """W with W * u(zW)^x = 1, as a series in the deflated variable z."""
    fq = base.fq
    z_field = LaurentField(fq, base.prec, "z")
    z = z_field.t()
    du = u.derivative()
    c = u.leading()
    w = z_field.constant(fq.pow(c, -x))
    one = z_field.one()
    for _ in range(base.prec.bit_length() + 2):
        zw = z * w
        uz = u.compose(zw)
        ux = uz**x
        h = w * ux - one
        if h.is_exact_zero or (h.is_unknown and h.val >= z_field.prec):
            return w
        hprime = ux + w * z_field.constant(fq.constant(x)) * z * du.compose(zw) * uz ** (x - 1)
        w = w - h / hprime
    raise PrecisionError("uniformizer relation did not converge to working precision")


def scalar_root_extension(fq, a, p: int) -> dict:
    """p-th root of a finite field scalar: possibly a degree-p constant step."""
    from ..fields.fq import try_pth_root

    require_mu_p(fq, p)
    if fq.is_zero(a):
        raise UsageError("no root of zero")
    root = try_pth_root(fq, a, p)
    if root is not None:
        return {"kind": "trivial", "constants": f"gf({fq.q})", "root_code": fq.code_of(root)}
    fq2 = field_make(fq.ell, fq.deg * p)
    emb = embed_field(fq, fq2)
    root2 = try_pth_root(fq2, emb.apply(a), p)
    if root2 is None:
        raise VerificationError("scalar must become a p-th power after the constant step")
    return {
        "kind": "unramified",
        "constants": f"gf({fq2.q})",
        "modulus": list(fq2.modulus),
        "root_code": fq2.code_of(root2),
    }
