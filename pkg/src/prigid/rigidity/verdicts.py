"""Rigidity verdicts: is the multiplicative pairing as degenerate as it can be?

An element a outside the p-th powers is rigid when everything orthogonal
to it under the symbol pairing already lies in the span of a and the p-th
powers; the field is rigid when every such a is.  Wherever the class group
F*/(F*)^p is finite (gf, laurent) the verdict is complete.  For ratfunc the
class group is infinite: a failed kernel check is a definitive "not rigid"
with an explicit witness, while a clean kernel on the probed subspace only
reports "undetermined".

Verdict dicts always carry `status` in {"rigid", "not_rigid", "undetermined",
"inapplicable"} and `complete` saying whether the status is definitive.
"""

from __future__ import annotations

from typing import Optional, Sequence

from ..errors import UsageError
from ..fields.fq import Value, canonical_nonresidue, power_residue_class
from ..fields.laurent import LaurentElem
from ..fields.linalg import nullspace_mod, rank_mod
from ..fields.ratfunc import RatFuncElem, RatFuncField
from .context import FieldContext
from .symbols import (
    laurent_class_coords,
    laurent_symbol_matrix,
    require_mu_p,
    symbol_vector,
)


# -- ratfunc subspace scaffolding

def default_basis(K: RatFuncField, p: int,
                  extra: Sequence[RatFuncElem] = ()) -> list[tuple[str, RatFuncElem]]:
    """Basis of a probing subspace of K*/(K*)^p: u*, then t + c, then extras.

    Distinct monic irreducibles and the scalar nonresidue are independent
    classes (unique factorization), so these really are a basis of their
    span.  The t + c sweep is capped so large constant fields stay cheap;
    the support of every extra element is always included.
    """
    fq = K.fq
    ustar = canonical_nonresidue(fq, p)
    basis: list[tuple[str, RatFuncElem]] = [(f"u*={fq.code_of(ustar)}", K.constant(ustar))]
    names = set()
    for c in range(min(fq.q, 16)):
        pi = (fq.elem_from_code(c), fq.one)
        elem = K.from_poly(pi)
        name = K.place_str(pi)
        basis.append((name, elem))
        names.add(name)
    for elem in extra:
        for pi in elem.factor_support():
            name = K.place_str(pi)
            if name not in names:
                names.add(name)
                basis.append((name, K.from_poly(pi)))
    return basis


def support_basis(K: RatFuncField, p: int,
                  elems: Sequence[RatFuncElem]) -> list[tuple[str, RatFuncElem]]:
    """Minimal basis: u* plus exactly the support places of the given elements."""
    fq = K.fq
    ustar = canonical_nonresidue(fq, p)
    basis: list[tuple[str, RatFuncElem]] = [(f"u*={fq.code_of(ustar)}", K.constant(ustar))]
    names = set()
    for elem in elems:
        for pi in sorted(elem.factor_support(),
                         key=lambda q: (len(q), tuple(fq.code_of(c) for c in q))):
            name = K.place_str(pi)
            if name not in names:
                names.add(name)
                basis.append((name, K.from_poly(pi)))
    return basis


def class_coords_ratfunc(K: RatFuncField, p: int, a: RatFuncElem,
                         basis: list[tuple[str, RatFuncElem]]) -> list[int]:
    """Coordinates of [a] in the basis span; fails if a leaves the span."""
    fq = K.fq
    coords = [0] * len(basis)
    coords[0] = power_residue_class(fq, a.leading_unit(), p)
    index = {name: i for i, (name, _) in enumerate(basis)}
    for pi, e in a.factor_support().items():
        name = K.place_str(pi)
        if e % p == 0:
            continue
        if name not in index:
            raise UsageError(f"support place {name} missing from the probe basis")
        coords[index[name]] = e % p
    return coords


def realize_coords(K: RatFuncField, basis: list[tuple[str, RatFuncElem]],
                   coords: Sequence[int]) -> RatFuncElem:
    out = K.one()
    for (_, elem), c in zip(basis, coords):
        if c:
            out = out * elem**c
    return out


def _pairing_columns(K: RatFuncField, p: int, a: RatFuncElem,
                     basis: list[tuple[str, RatFuncElem]]) -> tuple[list[str], list[list[int]]]:
    """Rows = places, columns = basis elements; entry = symbol of (a, b_j)."""
    vectors = [symbol_vector(K, p, a, elem) for _, elem in basis]
    place_names: list[str] = []
    for vec in vectors:
        for name in vec["places"]:
            if name not in place_names:
                place_names.append(name)
    rows = [[vec["values"].get(name, 0) for vec in vectors] for name in place_names]
    return place_names, rows


# -- element verdicts

def is_element_rigid(ctx: FieldContext, a) -> dict:
    if ctx.kind == "gf":
        return _element_gf(ctx, a)
    if ctx.kind == "laurent":
        return _element_laurent(ctx, a)
    return _element_ratfunc(ctx, a)


def _element_gf(ctx: FieldContext, a: Value) -> dict:
    fq, p = ctx.fq, ctx.p
    require_mu_p(fq, p)
    if fq.is_zero(a):
        raise UsageError("rigidity is about nonzero elements")
    cls = power_residue_class(fq, a, p)
    if cls == 0:
        return {"status": "inapplicable", "complete": True,
                "reason": "a is already a p-th power", "class": cls}
    # F_q*/(F_q*)^p is cyclic of order p, so the span of a is everything
    return {"status": "rigid", "complete": True, "class": cls,
            "reason": "class group has rank 1; the span of a is the whole group"}


def _element_laurent(ctx: FieldContext, a: LaurentElem) -> dict:
    p = ctx.p
    coords = laurent_class_coords(a, p)
    if coords == (0, 0):
        return {"status": "inapplicable", "complete": True,
                "reason": "a is already a p-th power", "coords": list(coords)}
    pairing = laurent_symbol_matrix(ctx.laurent, p)
    if not pairing["nondegenerate"]:
        raise UsageError("degenerate local pairing; q, p combination out of scope")
    # kernel of <coords, .> under the symplectic form c*(x1 y2 - x2 y1) is
    # exactly the line through coords, which is the span of a
    return {
        "status": "rigid",
        "complete": True,
        "coords": list(coords),
        "pairing": pairing,
        "reason": "nondegenerate rank-2 pairing: the orthogonal of a is its own span",
    }


def _element_ratfunc(ctx: FieldContext, a: RatFuncElem) -> dict:
    K, p = ctx.ratfunc, ctx.p
    basis = default_basis(K, p, extra=[a])
    a_coords = class_coords_ratfunc(K, p, a, basis)
    if all(c == 0 for c in a_coords):
        return {"status": "inapplicable", "complete": True,
                "reason": "a is already a p-th power"}
    place_names, rows = _pairing_columns(K, p, a, basis)
    kernel = nullspace_mod(rows, p)
    basis_names = [name for name, _ in basis]
    extra_vecs = [v for v in kernel if rank_mod([a_coords, list(v)], p) > 1]
    if extra_vecs:
        wit_coords = extra_vecs[0]
        witness = realize_coords(K, basis, wit_coords)
        wit_vec = symbol_vector(K, p, a, witness)
        assert wit_vec["is_zero"]
        return {
            "status": "not_rigid",
            "complete": True,
            "basis": basis_names,
            "a_coords": a_coords,
            "kernel_dim": len(kernel),
            "witness": repr(witness),
            "witness_coords": list(wit_coords),
            "witness_symbols": wit_vec["values"],
            "reason": "an element orthogonal to a is independent of a mod p-th powers",
        }
    return {
        "status": "undetermined",
        "complete": False,
        "basis": basis_names,
        "a_coords": a_coords,
        "kernel_dim": len(kernel),
        "places": place_names,
        "reason": "orthogonal of a meets the probed subspace only in the span of a",
    }


# -- field verdicts

def is_field_rigid(ctx: FieldContext) -> dict:
    p = ctx.p
    if ctx.kind == "gf":
        return {
            "status": "rigid",
            "complete": True,
            "descriptor": ctx.descriptor,
            "reason": "class group has rank 1, every eligible element is rigid",
        }
    if ctx.kind == "laurent":
        pairing = laurent_symbol_matrix(ctx.laurent, p)
        return {
            "status": "rigid" if pairing["nondegenerate"] else "not_rigid",
            "complete": True,
            "descriptor": ctx.descriptor,
            "pairing": pairing,
            "reason": "rank-2 class group with nondegenerate pairing",
        }
    wit = steinberg_witness(ctx)
    return {
        "status": "not_rigid",
        "complete": True,
        "descriptor": ctx.descriptor,
        "witness": wit,
        "reason": "t is orthogonal to 1-t, which is independent of t mod p-th powers",
    }


def steinberg_witness(ctx: FieldContext) -> dict:
    """The pair (t, 1-t): orthogonal yet independent, so t is not rigid.

    Only the rational function field has such a pair; asking for one in a
    rigid context is an error by definition.
    """
    if ctx.kind != "ratfunc":
        raise UsageError(
            f"{ctx.descriptor} is rigid; no orthogonal independent pair exists"
        )
    K, p = ctx.ratfunc, ctx.p
    t = K.t()
    b = K.one() - t
    vec = symbol_vector(K, p, t, b)
    basis = support_basis(K, p, [t, b])
    ct = class_coords_ratfunc(K, p, t, basis)
    cb = class_coords_ratfunc(K, p, b, basis)
    independent = rank_mod([ct, cb], p) == 2
    if not vec["is_zero"] or not independent:
        raise UsageError("witness construction failed; q, p combination out of scope")
    return {
        "a": "t",
        "b": repr(b),
        "symbols": vec["values"],
        "a_coords": ct,
        "b_coords": cb,
        "independent": independent,
        "basis": [name for name, _ in basis],
    }


# -- wedge-square injectivity and the group bridge

def lambda2_injectivity(ctx: FieldContext, basis_elems: Optional[list] = None) -> dict:
    """Does the pairing kill any wedge of independent classes?

    The map sends e_i ^ e_j to the symbol vector of (b_i, b_j).  A nonzero
    kernel vector is a definitive failure; an injective restriction is only
    definitive when the basis spans the whole class group (gf, laurent).
    """
    p = ctx.p
    if ctx.kind == "gf":
        return {"injective": True, "complete": True, "kernel_dim": 0,
                "reason": "rank 1: the wedge square is zero"}
    if ctx.kind == "laurent":
        pairing = laurent_symbol_matrix(ctx.laurent, p)
        inj = pairing["nondegenerate"]
        return {"injective": inj, "complete": True,
                "kernel_dim": 0 if inj else 1, "pairing": pairing,
                "reason": "rank 2: one wedge generator, paired value is the u* class"}
    K = ctx.ratfunc
    basis = default_basis(K, p) if basis_elems is None else basis_elems
    names = [name for name, _ in basis]
    pair_cols = []
    pair_names = []
    place_names: list[str] = []
    vectors = {}
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            vec = symbol_vector(K, p, basis[i][1], basis[j][1])
            vectors[(i, j)] = vec
            pair_names.append(f"{names[i]}^{names[j]}")
            for nm in vec["places"]:
                if nm not in place_names:
                    place_names.append(nm)
    for (i, j) in sorted(vectors):
        pair_cols.append([vectors[(i, j)]["values"].get(nm, 0) for nm in place_names])
    rows = [[col[r] for col in pair_cols] for r in range(len(place_names))]
    kernel = nullspace_mod(rows, p)
    result = {
        "injective": not kernel,
        "complete": bool(kernel),  # failure is definitive, success is not
        "kernel_dim": len(kernel),
        "wedge_basis": pair_names,
        "basis": names,
    }
    if kernel:
        vec = kernel[0]
        support = [pair_names[i] for i, c in enumerate(vec) if c]
        result["kernel_vector"] = list(vec)
        result["kernel_support"] = support
    return result


def rigidity_profile(ctx: FieldContext) -> dict:
    """Field verdict, wedge injectivity, and the predicted group property.

    Rigid fields must have a powerful maximal pro-p quotient; the group
    route is exercised on the concrete tower model so the two sides are
    computed independently.  Three-valued: rigid / not_rigid / undetermined.
    """
    from ..groups.subgroups import full_group, is_powerful, tower_group_model

    field_verdict = is_field_rigid(ctx)
    wedge = lambda2_injectivity(ctx)
    status = field_verdict["status"]
    out = {
        "descriptor": ctx.descriptor,
        "p": ctx.p,
        "field": field_verdict,
        "wedge_injective": wedge,
        "status": status,
        "group_powerful_predicted": status == "rigid",
    }
    if ctx.kind in ("gf", "laurent"):
        n = max(2, min(ctx.k + 2, 4))
        model = tower_group_model(ctx.p, ctx.k if ctx.kind == "laurent" else None, n)
        pw = is_powerful(model, full_group(model))
        out["group_model"] = model.descriptor
        out["group_powerful"] = pw["powerful"]
        out["consistent"] = pw["powerful"] == out["group_powerful_predicted"]
    else:
        out["group_powerful"] = None
        out["consistent"] = None if status == "undetermined" else True
    return out
