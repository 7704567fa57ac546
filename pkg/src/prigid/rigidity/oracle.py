"""Independent norm-group enumeration for the ramified degree-p extension.

The verdict machinery decides norm membership through symbols.  This
module gets at the same answer the slow way: enumerate unit tails in the
extension F_q((s)) with s^p = t, push each through the explicit norm
x * sigma(x) * ... * sigma^(p-1)(x), and collect the classes that show
up downstairs.  Agreement between the two routes is what the tests pin.

Only the leading coefficient and the valuation of a norm can carry
class, and the leading coefficient of N(c0*(1 + ...)) is c0^p no matter
the tail, so a shallow tail enumeration already sees every class the
full norm group has.  The enumeration checks that claim instance by
instance instead of assuming it.
"""

from __future__ import annotations

from itertools import product

from ..errors import UsageError
from ..fields.fq import FqField, power_residue_class, zeta_p
from ..fields.laurent import LaurentField
from .symbols import laurent_class_coords, require_mu_p

ORACLE_PREC = 8


def _ramified_sigma(field: LaurentField, zeta):
    fq = field.fq
    p_order_cache = {}

    def apply(x):
        if x.is_exact_zero or x.is_unknown:
            return x
        coeffs = []
        for i, c in enumerate(x.coeffs):
            e = x.val + i
            z = p_order_cache.get(e)
            if z is None:
                z = fq.pow(zeta, e)
                p_order_cache[e] = z
            coeffs.append(fq.mul(c, z))
        return field.make(x.val, coeffs, x.exact, x.horizon)

    return apply


def norm_class_enumeration(fq: FqField, p: int, depth: int = 4,
                           prec: int = ORACLE_PREC) -> dict:
    """Classes of norms from F_q((s)), s^p = t, down to F_q((t)).

    Enumerates x = c0 * s^j * (1 + c1*s + ... + c_(depth-1)*s^(depth-1))
    over all unit c0, all tail coefficients, and all shifts j < p; the
    class of each norm is recorded along with the observed leading
    coefficients, which must all be p-th powers of the enumerated c0.
    """
    require_mu_p(fq, p)
    if depth < 2:
        raise UsageError("tail depth below 2 would not exercise the principal units")
    ext = LaurentField(fq, prec, var="s")
    down = LaurentField(fq, prec, var="t")
    zeta = zeta_p(fq, p)
    sigma = _ramified_sigma(ext, zeta)

    units = [u for u in fq.elements() if not fq.is_zero(u)]
    classes = set()
    count = 0
    leading_law_ok = True
    for c0 in units:
        for tail in product(fq.elements(), repeat=depth - 1):
            coeffs = (c0,) + tuple(fq.mul(c0, c) for c in tail)
            for j in range(p):
                x = ext.make(j, coeffs, True)
                n = x
                cur = x
                for _ in range(p - 1):
                    cur = sigma(cur)
                    n = n * cur
                down_elem = n.deflate(p, down)
                cls = laurent_class_coords(down_elem, p)
                classes.add(cls)
                count += 1
                if down_elem.leading() != fq.pow(c0, p) and j % p == 0:
                    leading_law_ok = False

    s_norm = ext.t()
    cur = s_norm
    n = s_norm
    for _ in range(p - 1):
        cur = sigma(cur)
        n = n * cur
    norm_of_s = laurent_class_coords(n.deflate(p, down), p)

    absent = sorted(
        (u, v)
        for u in range(p)
        for v in range(p)
        if (u, v) not in classes
    )
    return {
        "extension": f"{fq.descriptor} laurent, s^{p} = t",
        "p": p,
        "depth": depth,
        "prec": prec,
        "norms_enumerated": count,
        "classes": sorted(classes),
        "absent_classes": absent,
        "norm_of_s": list(norm_of_s),
        "uniformizer_class_generates": classes == {(0, j) for j in range(p)},
        "leading_law_ok": leading_law_ok,
    }


def norm_oracle_cross_check(fq: FqField, p: int, depth: int = 4,
                            prec: int = ORACLE_PREC) -> dict:
    """Enumeration versus symbols: b is a norm iff the symbol (t, b) dies.

    Checked for every constant class representative and for t itself.
    """
    from .symbols import laurent_symbol

    enum = norm_class_enumeration(fq, p, depth, prec)
    classes = {tuple(c) for c in enum["classes"]}
    field = LaurentField(fq, prec, var="t")
    t_elem = field.t()
    agreements = []
    ok = True
    for code in range(1, min(fq.q, 32)):
        b_val = fq.elem_from_code(code)
        cls = (power_residue_class(fq, b_val, p), 0)
        is_norm = cls in classes
        symbol = laurent_symbol(t_elem, field.constant(b_val), p)
        match = is_norm == (symbol == 0)
        ok = ok and match
        agreements.append(
            {"b": code, "class": list(cls), "is_norm": is_norm, "symbol": symbol, "match": match}
        )
    sym_t = laurent_symbol(t_elem, t_elem, p)
    t_is_norm = tuple(enum["norm_of_s"]) in classes
    agreements.append(
        {
            "b": "t",
            "class": enum["norm_of_s"],
            "is_norm": t_is_norm,
            "symbol": sym_t,
            "match": t_is_norm == (sym_t == 0),
        }
    )
    ok = ok and agreements[-1]["match"]
    return {"enumeration": enum, "checks": agreements, "all_match": ok}
