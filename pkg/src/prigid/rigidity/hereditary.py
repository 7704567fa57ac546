"""Degree-p radical steps above a base field, with the verdict at every level.

The p+1 lines of the plane spanned by the classes of u* and t give the
degree-p Kummer steps F(a^(1/p)) for a = u^i t^j.  What they normalize to
depends on the base:

Over F_q((t)) every step is a local field of the same shape again, and the
normalization is computed honestly by `extend_by_pth_root`:

  a = t, u t^j:  F_q((s)) with s^p an explicit unit multiple of t
  a = u:         F_(q^p)((t))

so rigidity regenerates at every level.  Over F_q(t) every step is a
rational function field again, by explicit reparametrization:

  a = t:        t = s^p                      (same constants)
  a = u:        constants grow to F_(q^p)    (t untouched)
  a = u t^j:    t = u^alpha s^p with 1 + alpha*j = 0 mod p

and there the non-rigidity witness (s, 1-s) regenerates instead.  The
probe reports the whole tree either way.
"""

from __future__ import annotations

from ..errors import UsageError
from ..fields.fq import canonical_nonresidue, field_make
from ..fields.ratfunc import RatFuncField
from .context import FieldContext
from .extensions import extend_by_pth_root
from .verdicts import is_field_rigid


def line_reps(p: int) -> list[tuple[int, int]]:
    """Canonical generators of the p+1 lines in (Z/p)^2: (0,1) then (1,j)."""
    return [(0, 1)] + [(1, j) for j in range(p)]


def _step_ratfunc(ctx: FieldContext, rep: tuple[int, int]) -> tuple[FieldContext, str]:
    """Child context for one Kummer step, plus the embedding description."""
    p, fq = ctx.p, ctx.fq
    i, j = rep
    ustar_code = fq.code_of(canonical_nonresidue(fq, p))
    if rep == (1, 0):
        fq2 = field_make(fq.ell, fq.deg * p)
        child = FieldContext("ratfunc", p, fq2,
                             ratfunc=RatFuncField(fq2, seed=ctx.ratfunc.seed))
        return child, f"constants gf({fq.q}) -> gf({fq2.q}); t -> t"
    child = FieldContext("ratfunc", p, fq,
                         ratfunc=RatFuncField(fq, seed=ctx.ratfunc.seed))
    if rep == (0, 1):
        return child, "t -> s^p"
    alpha = next(a for a in range(p) if (1 + a * j) % p == 0)
    return child, f"t -> u^{alpha}*s^{p} with u = {ustar_code}; root = u^{(1 + alpha * j) // p}*s^{j}"


def _step_laurent(ctx: FieldContext, rep: tuple[int, int]) -> tuple[FieldContext, str]:
    """Normalize one Kummer step of F_q((t)) back to a Laurent field."""
    p, fq, L = ctx.p, ctx.fq, ctx.laurent
    i, j = rep
    ustar = canonical_nonresidue(fq, p)
    a = L.constant(fq.pow(ustar, i)) * L.t() ** j if (i or j) else L.one()
    ext = extend_by_pth_root(L, a, p)
    child = FieldContext("laurent", p, ext.ext.fq, laurent=ext.ext)
    if ext.kind == "unramified":
        emb = f"constants gf({fq.q}) -> gf({ext.ext.fq.q}); t -> t"
    else:
        emb = f"{ext.data['relation']}; t -> {ext.data['t_image']}"
    return child, emb


def hereditary_probe(ctx: FieldContext, depth: int = 2) -> dict:
    """Rigidity verdicts down a tree of degree-p radical steps.

    depth counts levels including the base; each inner node branches into
    the p+1 line representatives u^i t^j.  Laurent bases stay rigid down
    the tree, rational function fields stay non-rigid.
    """
    if ctx.kind not in ("ratfunc", "laurent"):
        raise UsageError("the hereditary probe needs a field with a uniformizer")
    if not 1 <= depth <= 3:
        raise UsageError("probe depth must be between 1 and 3")
    return _node(ctx, depth, "base", None)


def _node(ctx: FieldContext, depth: int, rep_label: str, embedding) -> dict:
    verdict = is_field_rigid(ctx)
    node = {
        "field": ctx.descriptor,
        "rep": rep_label,
        "status": verdict["status"],
        "complete": verdict["complete"],
    }
    if embedding:
        node["embedding"] = embedding
    if depth > 1:
        fq = ctx.fq
        ustar_code = fq.code_of(canonical_nonresidue(fq, ctx.p))
        step = _step_laurent if ctx.kind == "laurent" else _step_ratfunc
        children = []
        for rep in line_reps(ctx.p):
            child_ctx, emb = step(ctx, rep)
            i, j = rep
            label = "t" if rep == (0, 1) else (
                f"u*={ustar_code}" if rep == (1, 0) else f"u*^{i}*t^{j}"
            )
            children.append(_node(child_ctx, depth - 1, label, emb))
        node["children"] = children
        want = "not_rigid" if ctx.kind == "ratfunc" else "rigid"
        node["all_children_" + want] = all(c["status"] == want for c in children)
    return node
