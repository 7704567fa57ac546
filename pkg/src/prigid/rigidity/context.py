"""Field contexts: the three concrete coefficient settings verdicts run in.

Descriptors:
  gf(q)            the finite field itself
  laurent(q)       F_q((t)), optional second argument = series precision
  ratfunc(q)       F_q(t)

q must be a prime power and p must divide q - 1 (otherwise mu_p is missing
and nothing here applies).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from ..errors import UsageError
from ..fields.fq import FqField, field_make, is_prime, vp
from ..fields.laurent import LaurentField
from ..fields.ratfunc import RatFuncField

DEFAULT_SEED = 20260816
LAURENT_DEFAULT_PREC = 64

_GF_RE = re.compile(r"^gf\((\d+)\)$")
_LAU_RE = re.compile(r"^laurent\((\d+)(?:,(\d+))?\)$")
_RAT_RE = re.compile(r"^ratfunc\((\d+)\)$")


def _fq_from_q(q: int) -> FqField:
    if q < 2:
        raise UsageError(f"q={q} is not a prime power")
    ell = None
    for cand in range(2, q + 1):
        if q % cand == 0:
            ell = cand
            break
    assert ell is not None
    deg = 0
    n = q
    while n % ell == 0:
        n //= ell
        deg += 1
    if n != 1 or not is_prime(ell):
        raise UsageError(f"q={q} is not a prime power")
    return field_make(ell, deg)


@dataclass
class FieldContext:
    kind: str  # gf | laurent | ratfunc
    p: int
    fq: FqField
    laurent: Optional[LaurentField] = None
    ratfunc: Optional[RatFuncField] = None

    @property
    def descriptor(self) -> str:
        if self.kind == "gf":
            return f"gf({self.fq.q})"
        if self.kind == "laurent":
            return f"laurent({self.fq.q})"
        return f"ratfunc({self.fq.q})"

    @property
    def k(self) -> int:
        """Depth of p-power roots of unity in the constants: v_p(q-1)."""
        return vp(self.fq.q - 1, self.p)


def make_context(desc: str, p: int, prec: Optional[int] = None,
                 seed: int = DEFAULT_SEED) -> FieldContext:
    desc = desc.strip()
    if prec is None:
        prec = LAURENT_DEFAULT_PREC
    if not is_prime(p):
        raise UsageError(f"p={p} is not prime")
    m = _GF_RE.match(desc)
    if m:
        fq = _fq_from_q(int(m.group(1)))
        _need_mu(fq, p)
        return FieldContext("gf", p, fq)
    m = _LAU_RE.match(desc)
    if m:
        fq = _fq_from_q(int(m.group(1)))
        _need_mu(fq, p)
        use_prec = int(m.group(2)) if m.group(2) else prec
        return FieldContext("laurent", p, fq, laurent=LaurentField(fq, use_prec))
    m = _RAT_RE.match(desc)
    if m:
        fq = _fq_from_q(int(m.group(1)))
        _need_mu(fq, p)
        return FieldContext("ratfunc", p, fq, ratfunc=RatFuncField(fq, seed=seed))
    raise UsageError(
        f"unrecognized field descriptor {desc!r}; expected gf(q), laurent(q[,prec]), "
        "or ratfunc(q)"
    )


def _need_mu(fq: FqField, p: int) -> None:
    if (fq.q - 1) % p:
        raise UsageError(
            f"p={p} must divide q-1={fq.q - 1}: the verdicts need mu_p in the constants"
        )
