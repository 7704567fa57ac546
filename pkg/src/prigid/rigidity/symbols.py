"""Tame symbols with values in Z/p.

For K = F_q(t) the symbol at a place pi is the class of the residue of
(-1)^(v(a)v(b)) a^v(b) b^(-v(a)); residues at higher-degree places are
normed down to F_q before taking the power-residue character, which is
what makes the local values sum to zero (Weil reciprocity).  For the
local field F_q((t)) the same residue formula needs only the leading
coefficients, because principal units are p-divisible there.

p must divide q - 1 throughout: without the p-th roots of unity in the
constants the symbol does not take values in Z/p at all.
"""

from __future__ import annotations

from ..errors import UsageError, VerificationError
from ..fields.fq import FqField, Value, power_residue_class
from ..fields.laurent import LaurentElem
from ..fields.poly import ResidueField, pdeg
from ..fields.ratfunc import INF, Place, RatFuncElem, RatFuncField


def require_mu_p(fq: FqField, p: int) -> None:
    if (fq.q - 1) % p:
        raise UsageError(
            f"symbols need the p-th roots of unity: p={p} does not divide q-1={fq.q - 1}"
        )


def residue_class(fq: FqField, p: int, rep: Value) -> int:
    return power_residue_class(fq, rep, p)


def tame_symbol_local(K: RatFuncField, p: int, a: RatFuncElem, b: RatFuncElem,
                      place: Place) -> int:
    """Symbol value of (a, b) at one place of F_q(t), as an exponent of zeta_p."""
    fq = K.fq
    require_mu_p(fq, p)
    K.check_place(place)
    if a.is_zero or b.is_zero:
        raise UsageError("symbols are defined on nonzero elements")
    va = a.valuation(place)
    vb = b.valuation(place)
    unit = (a**vb) * (b ** (-va))
    if va * vb % 2:
        unit = -unit
    rep = unit.unit_residue(place)
    if place == INF:
        return residue_class(fq, p, rep[0] if rep else fq.zero)
    rf = ResidueField(fq, place)
    return residue_class(fq, p, rf.norm_to_base(rep))


def symbol_vector(K: RatFuncField, p: int, a: RatFuncElem, b: RatFuncElem) -> dict:
    """All local symbols of (a, b) over supp(a) u supp(b) u {inf}.

    Every place outside the joint support gives zero (both entries are
    units with trivial residue pairing there), so this vector is the whole
    symbol.  The reciprocity sum is asserted, not assumed.
    """
    places: list[Place] = []
    seen = set()
    for elem in (a, b):
        for pl in elem.support_places():
            key = K.place_str(pl)
            if key not in seen:
                seen.add(key)
                places.append(pl)
    if INF not in [pl for pl in places if isinstance(pl, str)]:
        places.append(INF)
    finite = [pl for pl in places if pl != INF]
    finite.sort(key=lambda pi: (pdeg(pi), tuple(K.fq.code_of(c) for c in pi)))
    ordered: list[Place] = finite + [INF]
    values = {K.place_str(pl): tame_symbol_local(K, p, a, b, pl) for pl in ordered}
    if sum(values.values()) % p:
        raise VerificationError(
            f"reciprocity failed: local symbols {values} do not sum to 0 mod {p}"
        )
    return {
        "p": p,
        "places": [K.place_str(pl) for pl in ordered],
        "values": values,
        "is_zero": all(v == 0 for v in values.values()),
    }


def steinberg_vector(K: RatFuncField, p: int, x: RatFuncElem) -> dict:
    """Symbol vector of the pair (x, 1-x); must vanish identically."""
    one = K.one()
    if x.is_zero or (one - x).is_zero:
        raise UsageError("need x with x != 0 and x != 1")
    return symbol_vector(K, p, x, one - x)


# -- local field F_q((t))

def laurent_class_coords(elem: LaurentElem, p: int) -> tuple[int, int]:
    """Coordinates of the class of elem in the rank-2 group F*/F*^p.

    Basis order: (unit-class, valuation mod p).  Principal units carry no
    class, so only the leading coefficient and the valuation matter.
    """
    fq = elem.field.fq
    require_mu_p(fq, p)
    v = elem.valuation()
    return (power_residue_class(fq, elem.leading(), p), v % p)


def laurent_symbol(a: LaurentElem, b: LaurentElem, p: int) -> int:
    """Tame symbol on F_q((t)): residue class of (-1)^(vw) a^w b^(-v)."""
    fq = a.field.fq
    require_mu_p(fq, p)
    va = a.valuation()
    vb = b.valuation()
    rep = fq.mul(fq.pow(a.leading(), vb), fq.pow(b.leading(), -va))
    if va * vb % 2:
        rep = fq.neg(rep)
    return power_residue_class(fq, rep, p)


def laurent_symbol_matrix(field, p: int) -> dict:
    """The pairing on the basis {u*, t} of F_q((t))*/(F_q((t))*)^p.

    u* is the canonical scalar nonresidue.  The off-diagonal entry is the
    class of u* itself and is nonzero, so the pairing is nondegenerate.
    """
    from ..fields.fq import canonical_nonresidue

    fq = field.fq
    require_mu_p(fq, p)
    ustar = field.constant(canonical_nonresidue(fq, p))
    t = field.t()
    basis = [("u*", ustar), ("t", t)]
    matrix = [[laurent_symbol(x, y, p) for _, y in basis] for _, x in basis]
    nondegenerate = matrix[0][1] % p != 0
    return {
        "p": p,
        "basis": [name for name, _ in basis],
        "ustar_code": fq.code_of(canonical_nonresidue(fq, p)),
        "matrix": matrix,
        "nondegenerate": nondegenerate,
    }
