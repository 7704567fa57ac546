"""Report assembly: stable JSON records for every front-door command.

One rule keeps criterion-grade determinism: a report is a pure function of
(kind, inputs, seed).  Wall-clock timing therefore never enters the JSON;
dispatchers print it to stderr.  Keys beginning with an underscore hold
live objects for in-process reuse and are stripped before serialization.

`reverify` replays a serialized report from its own echoed inputs: the
body is recomputed and compared byte-for-byte, and the witness classes
that admit a direct check (symbol witnesses, valuation certificates,
group elements outside a subgroup) are re-checked from the stored strings
before the recompute, so a tampered report fails even when the tampering
is internally consistent.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .errors import UsageError, VerificationError

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# canonical serialization


def strip_private(obj):
    """Drop underscore-keyed entries and normalize containers for JSON."""
    if isinstance(obj, dict):
        return {str(k): strip_private(v) for k, v in obj.items()
                if not str(k).startswith("_")}
    if isinstance(obj, (list, tuple)):
        return [strip_private(v) for v in obj]
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, int):
        return int(obj)
    if hasattr(obj, "item") and hasattr(obj, "dtype"):
        return strip_private(obj.item())
    if isinstance(obj, float):
        raise UsageError("floating-point values do not belong in reports")
    raise UsageError(f"cannot serialize {type(obj).__name__} into a report")


def canonical_json(obj) -> str:
    return json.dumps(strip_private(obj), sort_keys=True, indent=2,
                      ensure_ascii=True) + "\n"


def make_report(kind: str, inputs: dict, body: dict,
                notes: Optional[list] = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "inputs": strip_private(inputs),
        "body": body,
        "notes": notes or [],
    }


def load_report(path: str) -> dict:
    with open(path, "r", encoding="ascii") as fh:
        report = json.load(fh)
    for key in ("schema_version", "kind", "inputs", "body"):
        if key not in report:
            raise UsageError(f"not a report file: missing {key!r}")
    if report["schema_version"] != SCHEMA_VERSION:
        raise UsageError(
            f"schema version {report['schema_version']} is not supported")
    return report


# ---------------------------------------------------------------------------
# discrepancy notes (carried on the reports that touch them)


def note_tower_abelian(bounds: dict) -> Optional[dict]:
    if bounds.get("warn") is None:
        return None
    return {
        "level": "WARN",
        "topic": "tower-abelian-bound",
        "stated_bound": bounds["stated_bound"],
        "computed_bound": bounds["computed_bound"],
        "detail": bounds["warn"],
    }


def note_dimension_rank(stated: int, computed: int, at_n: int) -> dict:
    return {
        "level": "WARN",
        "topic": "dimension-quotient-rank",
        "stated_rank": stated,
        "computed_rank": computed,
        "at_n": at_n,
        "detail": (
            f"the quotient D_{at_n}/D_{at_n + 1} has computed rank {computed}; "
            f"the stated closed form predicts rank {stated}; the computed "
            "orders are what the verdicts use"),
    }


# ---------------------------------------------------------------------------
# the compute dispatcher: one pure function per report kind


def _group_model(descriptor: str):
    from .groups.models import parse_group_descriptor
    return parse_group_descriptor(descriptor)


def _field_ctx(inputs: dict):
    from .rigidity.context import DEFAULT_SEED, make_context
    seed = inputs.get("seed")
    return make_context(inputs["descriptor"], inputs["p"],
                        prec=inputs.get("prec"),
                        seed=DEFAULT_SEED if seed is None else seed)


def _compute_group_series(inputs: dict):
    from .groups.subgroups import (full_group, gamma_series, lambda_series,
                                   series_orders)
    model = _group_model(inputs["descriptor"])
    g = full_group(model, inputs.get("bound"))
    lam = lambda_series(model, g, inputs.get("bound"))
    gam = gamma_series(model, g, inputs.get("bound"))
    body = {
        "descriptor": model.descriptor,
        "order": model.order,
        "lambda_orders": series_orders(lam),
        "gamma_orders": series_orders(gam),
    }
    return body, []


def _compute_group_dimension(inputs: dict):
    from .groups.subgroups import (dimension_subgroups, full_group,
                                   power_subgroup, series_orders)
    model = _group_model(inputs["descriptor"])
    nmax = inputs.get("nmax", 10)
    bound = inputs.get("bound")
    g = full_group(model, bound)
    dims = dimension_subgroups(model, g, nmax, bound)
    p = model.p
    closed = []
    agree = []
    for n in range(1, nmax + 1):
        h = 0
        step = 1
        while step < n:
            step *= p
            h += 1
        gp = power_subgroup(model, g, p ** h, bound)
        closed.append(gp.order)
        agree.append(gp.codes == dims[n - 1].codes)
    orders = series_orders(dims)
    ranks = []
    for n in range(len(orders) - 1):
        q = orders[n] // orders[n + 1]
        r = 0
        while q > 1:
            q //= p
            r += 1
        ranks.append(r)
    body = {
        "descriptor": model.descriptor,
        "order": model.order,
        "orders": orders,
        "closed_form_orders": closed,
        "closed_form_exponent": "ceil(log_p n)",
        "agree_per_n": agree,
        "quotient_ranks": ranks,
    }
    notes = []
    stated = getattr(model, "spec", None)
    if stated is not None and hasattr(stated, "nI") and p <= len(ranks):
        computed = ranks[p - 1]
        if computed != stated.nI:
            notes.append(note_dimension_rank(stated.nI, computed, p))
    return body, notes


def _compute_group_powerful(inputs: dict):
    from .groups.subgroups import full_group, is_powerful, rank, uniform_check
    model = _group_model(inputs["descriptor"])
    bound = inputs.get("bound")
    g = full_group(model, bound)
    body = {
        "descriptor": model.descriptor,
        "order": model.order,
        "powerful": is_powerful(model, g, bound),
        "rank": rank(model, g, bound),
        "uniform": uniform_check(model, g, bound),
    }
    return body, []


def _compute_group_theoremA(inputs: dict):
    from .groups.subgroups import theorem_A_group_test
    model = _group_model(inputs["descriptor"])
    return theorem_A_group_test(model, bound=inputs.get("bound")), []


def _compute_group_jmodule(inputs: dict):
    from .groups.subgroups import full_group, j_module_test
    model = _group_model(inputs["descriptor"])
    bound = inputs.get("bound")
    body = dict(j_module_test(model, full_group(model, bound), bound))
    body["descriptor"] = model.descriptor
    return body, []


def _compute_group_maximal(inputs: dict):
    from .groups.subgroups import full_group, maximal_subgroups, rank
    model = _group_model(inputs["descriptor"])
    bound = inputs.get("bound")
    subs = maximal_subgroups(model, full_group(model, bound), bound)
    items = []
    for item in subs:
        sub = item["subgroup"]
        items.append({
            "normal": list(item["normal"]),
            "order": sub.order,
            "index": model.order // sub.order,
            "gens": sub.gen_labels(),
            "rank": rank(model, sub, bound),
        })
    return {"descriptor": model.descriptor, "order": model.order,
            "count": len(items), "subgroups": items}, []


def _compute_group_tower(inputs: dict):
    from .groups.subgroups import tower_group
    k = inputs.get("k")
    body = tower_group(inputs["p"], k, inputs["n"])
    return body, []


def _compute_rigidity_check(inputs: dict):
    from .rigidity.verdicts import is_field_rigid, lambda2_injectivity
    ctx = _field_ctx(inputs)
    body = dict(is_field_rigid(ctx))
    body["wedge"] = lambda2_injectivity(ctx)
    return body, []


def _compute_rigidity_element(inputs: dict):
    from .exprparse import parse_element
    from .rigidity.verdicts import is_element_rigid
    ctx = _field_ctx(inputs)
    a = parse_element(ctx, inputs["a"])
    body = dict(is_element_rigid(ctx, a))
    body["a"] = inputs["a"]
    body["descriptor"] = ctx.descriptor
    return body, []


def _compute_rigidity_hereditary(inputs: dict):
    from .rigidity.hereditary import hereditary_probe
    ctx = _field_ctx(inputs)
    return hereditary_probe(ctx, inputs.get("depth", 2)), []


def _compute_rigidity_steinberg(inputs: dict):
    from .rigidity.verdicts import steinberg_witness
    ctx = _field_ctx(inputs)
    body = dict(steinberg_witness(ctx))
    body["descriptor"] = ctx.descriptor
    return body, []


def _compute_tower(inputs: dict):
    from .rigidity.towers import kummer_tower, tower_galois_group
    ctx = _field_ctx(inputs)
    n = inputs["n"]
    tower = kummer_tower(ctx, n)
    galois = tower_galois_group(ctx, n)
    notes = []
    warn = note_tower_abelian(galois["abelian_bounds"])
    if warn:
        notes.append(warn)
    return {"tower": tower, "galois": galois}, notes


def _compute_witness(inputs: dict):
    from .rigidity.witness import hilbert90_witness
    ctx = _field_ctx(inputs)
    return hilbert90_witness(ctx, seed=inputs.get("seed")), []


def _compute_solve(inputs: dict):
    from .exprparse import parse_poly
    from .puiseux import (as_nonnested_radicals, newton_polygon, puiseux_roots,
                          splitting_descriptor, verify_root)
    ctx = _field_ctx(inputs)
    if ctx.kind != "laurent":
        raise UsageError("solve works over a Laurent series field")
    coeffs = parse_poly(ctx, inputs["poly"])
    p = inputs["p"]
    precision = inputs.get("solve_prec", 8)
    tame = inputs.get("tame_bound", 27)
    polygon = [[str(mu), length] for mu, length in newton_polygon(coeffs)]
    roots = puiseux_roots(coeffs, p, precision, tame)
    out = []
    for root in roots:
        out.append({
            "root": root.to_json(),
            "radicals": as_nonnested_radicals(root, p),
            "residual": verify_root(coeffs, root),
        })
    body = {
        "poly": inputs["poly"],
        "descriptor": ctx.descriptor,
        "degree": len(coeffs) - 1,
        "polygon": polygon,
        "roots": out,
        "splitting": splitting_descriptor(coeffs, p, precision, tame),
    }
    return body, []


_DISPATCH = {
    "group.series": _compute_group_series,
    "group.dimension": _compute_group_dimension,
    "group.powerful": _compute_group_powerful,
    "group.theoremA": _compute_group_theoremA,
    "group.jmodule": _compute_group_jmodule,
    "group.maximal": _compute_group_maximal,
    "group.tower": _compute_group_tower,
    "rigidity.check": _compute_rigidity_check,
    "rigidity.element": _compute_rigidity_element,
    "rigidity.hereditary": _compute_rigidity_hereditary,
    "rigidity.steinberg": _compute_rigidity_steinberg,
    "tower": _compute_tower,
    "witness": _compute_witness,
    "solve": _compute_solve,
}


def compute_report(kind: str, inputs: dict) -> dict:
    if kind == "accept":
        from .acceptance import run_all
        return run_all(quick=bool(inputs.get("quick")), seed=inputs.get("seed"))
    if kind not in _DISPATCH:
        raise UsageError(f"unknown report kind {kind!r}")
    body, notes = _DISPATCH[kind](inputs)
    return make_report(kind, inputs, strip_private(body), notes)


# ---------------------------------------------------------------------------
# replay


def _recheck_symbol_witness(report: dict) -> list:
    """Stored witness pair must still pair to zero with independent classes."""
    from .exprparse import parse_element
    from .rigidity.symbols import symbol_vector
    body = report["body"]
    witness = body.get("witness") if "witness" in body else body
    if not (isinstance(witness, dict) and "a" in witness and "b" in witness
            and "symbols" in witness):
        return []
    inputs = dict(report["inputs"])
    ctx = _field_ctx(inputs)
    if ctx.kind != "ratfunc":
        return []
    a = parse_element(ctx, witness["a"])
    b = parse_element(ctx, witness["b"])
    vec = symbol_vector(ctx.ratfunc, inputs["p"], a, b)["values"]
    if any(vec.values()):
        raise VerificationError("stored witness pair no longer pairs to zero")
    if {str(k): v for k, v in vec.items()} != dict(witness["symbols"]):
        raise VerificationError("stored witness symbols do not match replay")
    return ["witness-pair-symbols-zero"]


def _recheck_group_witness(report: dict) -> list:
    """A stored non-powerful witness must still lie outside the power subgroup."""
    body = report["body"]
    detail = None
    for cand in (body.get("powerful_detail"), body.get("powerful")):
        if isinstance(cand, dict) and cand.get("witness_element"):
            detail = cand
            break
    if detail is None:
        return []
    from .groups.subgroups import commutator_subgroup, full_group, power_subgroup
    model = _group_model(body["descriptor"])
    g = full_group(model)
    gp = power_subgroup(model, g, model.p)
    com = commutator_subgroup(model, g, g)
    label_of = {model.element_label(c): c for c in com.codes}
    code = label_of.get(detail["witness_element"])
    if code is None:
        raise VerificationError("stored witness element is not a commutator")
    if code in gp.codes:
        raise VerificationError(
            "stored witness element lies inside the power subgroup after all")
    return ["group-witness-outside-powers"]


def _recheck_certificate(report: dict) -> list:
    """Stored branch expansion must still show the stated valuations."""
    body = report["body"]
    cert = body.get("certificate")
    if not (isinstance(cert, dict) and "branch" in cert):
        return []
    from .exprparse import parse_element
    from .rigidity.context import make_context

    inputs = report["inputs"]
    q = inputs["descriptor"].split("(")[1].rstrip(")")
    ctx = make_context(f"laurent({q})", inputs["p"], prec=32)
    branch = parse_element(ctx, cert["branch"].replace("y", "t"))
    p = inputs["p"]
    v_delta = (ctx.laurent.one() - branch).valuation()
    if v_delta != cert["v_delta"]:
        raise VerificationError("stored branch does not show the stated v_delta")
    v_beta = v_delta - 1
    if v_beta != cert["v_beta"] or v_beta % p != cert["v_beta_mod_p"]:
        raise VerificationError("stored certificate valuations do not replay")
    if cert["v_beta_mod_p"] == 0:
        raise VerificationError("certificate valuation is divisible by p")
    return ["certificate-valuations"]


def reverify(report: dict) -> dict:
    """Replay a serialized report from its echoed inputs alone."""
    kind = report.get("kind")
    checks = []
    checks += _recheck_symbol_witness(report)
    checks += _recheck_group_witness(report)
    checks += _recheck_certificate(report)
    fresh = compute_report(kind, report["inputs"])
    if kind == "accept":
        stored_body = report.get("body")
        if canonical_json(fresh["body"]) != canonical_json(stored_body):
            raise VerificationError("acceptance replay differs from the stored report")
        checks.append("acceptance-recompute-identical")
    else:
        if canonical_json(fresh["body"]) != canonical_json(report["body"]):
            raise VerificationError(
                f"recomputed {kind} body differs from the stored report")
        if canonical_json(fresh.get("notes", [])) != canonical_json(report.get("notes", [])):
            raise VerificationError("recomputed notes differ from the stored report")
        checks.append("recompute-identical")
    return {"reverified": True, "kind": kind, "checks": checks}
