"""Acceptance suite: twelve exact checks over the desk-scale instances.

Every criterion is an equality or containment in exact arithmetic, so each
either holds or does not; there are no tolerances.  The suite runs its core
twice and compares the serialized results byte for byte, which is itself
the final criterion.  Wall-clock budgets are reported as within_budget
booleans next to each timed criterion; they never enter the determinism
comparison, and the mathematical pass/fail is kept separate from them so a
loaded machine cannot flip a verdict.

Seeded randomness appears in exactly two places: the reciprocity sample of
symbol vectors and the solve round-trip sample of radical polynomials.
Both draw from random.Random(seed), so the report is a pure function of
(quick, seed).
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from typing import Optional

from .errors import UsageError, VerificationError
from .fields.laurent import LaurentField
from .reports import (canonical_json, make_report, note_dimension_rank,
                      note_tower_abelian, strip_private)
from .rigidity.context import DEFAULT_SEED, make_context

# seconds allowed per timed criterion; c01 is per group
_BUDGET = {
    "c01": 10,
    "c02": 10,
    "c04": 5,
    "c05": 5,
    "c06": 30,
    "c09": 5,
    "c10": 20,
}

_TITLES = {
    "c01": "powerful route equalities on theta(3,1,1,3) and theta(3,1,2,3)",
    "c02": "route separation on ut(4,3,1)",
    "c03": "dimension subgroup orders match the p-power closed form",
    "c04": "laurent(7) rigid at p=3, confirmed by the norm enumeration",
    "c05": "ratfunc(7) not rigid: Steinberg pair plus reciprocity sample",
    "c06": "rigidity persists down the radical extension tree",
    "c07": "tower constants, roots of unity, and class-group bases",
    "c08": "tower Galois groups: abelian at n=2, theta law at n=3",
    "c09": "norm witness with non-Galois valuation certificate",
    "c10": "radical solve anchors and seeded round-trips",
    "c11": "field verdicts agree with the group models",
    "c12": "double run serializes byte-identically",
}


# ---------------------------------------------------------------------------
# group-side criteria


def _c01(quick: bool, seed: int) -> dict:
    from .groups.models import parse_group_descriptor
    from .groups.subgroups import (frattini, full_group, lambda_series,
                                   power_subgroup, rank, theorem_A_group_test)
    descs = ["theta(3,1,1,3)"]
    if not quick:
        descs.append("theta(3,1,2,3)")
    groups = []
    seconds = []
    ok = True
    for desc in descs:
        t0 = time.monotonic()
        model = parse_group_descriptor(desc)
        g = full_group(model)
        lam3 = lambda_series(model, g)[2]
        phi2 = frattini(model, frattini(model, g))
        gp2 = power_subgroup(model, g, model.p ** 2)
        d = rank(model, g)
        same_subgroup = phi2.codes == lam3.codes and lam3.codes == gp2.codes
        index = g.order // lam3.order
        index_ok = index == model.p ** (2 * d)
        ta = theorem_A_group_test(model)
        seconds.append(time.monotonic() - t0)
        entry = {
            "descriptor": desc,
            "order": model.order,
            "rank": d,
            "phi_phi_order": phi2.order,
            "lambda3_order": lam3.order,
            "power_p2_order": gp2.order,
            "same_subgroup": same_subgroup,
            "index_lambda3": index,
            "index_is_p_2d": index_ok,
            "theorem_route_passes": ta["passes"],
        }
        groups.append(entry)
        ok = ok and same_subgroup and index_ok and ta["passes"]
    return {"passed": ok, "groups": groups, "_seconds_parts": seconds}


def _c02(quick: bool, seed: int) -> dict:
    from .groups.models import parse_group_descriptor
    from .groups.subgroups import (frattini, full_group, j_module_test,
                                   lambda_series)
    model = parse_group_descriptor("ut(4,3,1)")
    g = full_group(model)
    lam3 = lambda_series(model, g)[2]
    phi2 = frattini(model, frattini(model, g))
    strict = phi2.codes < lam3.codes
    jm = j_module_test(model, g)
    ok = (phi2.order == 1 and lam3.order == 3 and strict
          and jm["index_phi_phi2"] == 27 and jm["index_phi_lambda3"] == 9
          and not jm["holds"])
    return {
        "passed": ok,
        "descriptor": model.descriptor,
        "phi_phi_order": phi2.order,
        "lambda3_order": lam3.order,
        "strictly_inside": strict,
        "index_phi_phi2": jm["index_phi_phi2"],
        "index_phi_lambda3": jm["index_phi_lambda3"],
        "routes_agree_on_failure": not jm["holds"],
    }


def _c03(quick: bool, seed: int) -> dict:
    from .groups.models import parse_group_descriptor
    from .groups.subgroups import (dimension_subgroups, full_group,
                                   power_subgroup, series_orders)
    model = parse_group_descriptor("theta(3,1,1,3)")
    p = model.p
    g = full_group(model)
    dims = dimension_subgroups(model, g, 10)
    orders = series_orders(dims)
    expected = [729, 81, 81, 9, 9, 9, 9, 9, 9, 1]
    agree = []
    for n in range(1, 11):
        h = 0
        step = 1
        while step < n:
            step *= p
            h += 1
        agree.append(power_subgroup(model, g, p ** h).codes == dims[n - 1].codes)
    # rank of D_p / D_{p+1}, kept for the discrepancy note
    quo = orders[p - 1] // orders[p]
    computed_rank = 0
    while quo > 1:
        quo //= p
        computed_rank += 1
    ok = orders == expected and all(agree)
    return {
        "passed": ok,
        "descriptor": model.descriptor,
        "orders": orders,
        "expected_orders": expected,
        "closed_form_agrees_per_n": agree,
        "computed_rank_at_p": computed_rank,
        "stated_rank_at_p": model.spec.nI,
    }


# ---------------------------------------------------------------------------
# field-side criteria


def _c04(quick: bool, seed: int) -> dict:
    from .rigidity.oracle import norm_class_enumeration, norm_oracle_cross_check
    from .rigidity.verdicts import is_field_rigid, lambda2_injectivity
    ctx = make_context("laurent(7)", 3)
    verdict = is_field_rigid(ctx)
    wedge = lambda2_injectivity(ctx)
    pairing = verdict["pairing"]
    enum = norm_class_enumeration(ctx.fq, 3)
    classes = {tuple(c) for c in enum["classes"]}
    t_span = {(0, j) for j in range(3)}
    cross = norm_oracle_cross_check(ctx.fq, 3)
    ok = (verdict["status"] == "rigid" and verdict["complete"]
          and wedge["injective"] and wedge["kernel_dim"] == 0
          and pairing["nondegenerate"] and pairing["matrix"][0][1] == 1
          and classes == t_span and (1, 0) not in classes
          and enum["leading_law_ok"] and cross["all_match"])
    return {
        "passed": ok,
        "descriptor": ctx.descriptor,
        "status": verdict["status"],
        "wedge_injective": wedge["injective"],
        "wedge_symbol": pairing["matrix"][0][1],
        "norm_classes": sorted(list(c) for c in classes),
        "ustar_class_is_norm": (1, 0) in classes,
        "norms_enumerated": enum["norms_enumerated"],
        "oracle_cross_check": cross["all_match"],
    }


def _rand_ratfunc(K, fq, rng: random.Random):
    # nonzero polynomial of degree <= 3 with random coefficients
    while True:
        coeffs = [fq.constant(rng.randrange(fq.q)) for _ in range(rng.randrange(1, 5))]
        a = K.from_poly(coeffs)
        if not a.is_zero:
            return a


def _c05(quick: bool, seed: int) -> dict:
    from .rigidity.symbols import symbol_vector
    from .rigidity.verdicts import steinberg_witness
    ctx = make_context("ratfunc(7)", 3)
    wit = steinberg_witness(ctx)
    all_zero = not any(wit["symbols"].values())
    samples = 10 if quick else 100
    rng = random.Random(seed)
    K, fq = ctx.ratfunc, ctx.fq
    balanced = 0
    for _ in range(samples):
        a = _rand_ratfunc(K, fq, rng)
        b = _rand_ratfunc(K, fq, rng)
        vec = symbol_vector(K, 3, a, b)
        if sum(vec["values"].values()) % 3 == 0:
            balanced += 1
    ok = (all_zero and wit["independent"] and wit["a"] == "t"
          and balanced == samples)
    return {
        "passed": ok,
        "witness_a": wit["a"],
        "witness_b": wit["b"],
        "symbols_all_zero": all_zero,
        "classes_independent": wit["independent"],
        "reciprocity_samples": samples,
        "reciprocity_balanced": balanced,
    }


def _c06(quick: bool, seed: int) -> dict:
    from .rigidity.hereditary import hereditary_probe
    ctx = make_context("laurent(7)", 3)
    depth = 2 if quick else 3
    tree = hereditary_probe(ctx, depth)
    level1 = tree.get("children", [])
    level2 = [g for c in level1 for g in c.get("children", [])]
    statuses = [c["status"] for c in level1] + [g["status"] for g in level2]
    want2 = 0 if quick else 16
    ok = (tree["status"] == "rigid" and len(level1) == 4
          and len(level2) == want2 and all(s == "rigid" for s in statuses))
    return {
        "passed": ok,
        "base": tree["field"],
        "depth": depth,
        "extensions_checked": [len(level1), len(level2)],
        "all_rigid": all(s == "rigid" for s in statuses),
        "child_fields": sorted({c["field"] for c in level1 + level2}),
    }


def _c07(quick: bool, seed: int) -> dict:
    from .rigidity.towers import kummer_tower
    ctx = make_context("laurent(7)", 3)
    levels = []
    ok = True
    tw2 = None
    for n, zeta_order, constants in ((2, 9, "gf(343)"), (3, 27, "gf(40353607)")):
        tw = kummer_tower(ctx, n)
        if n == 2:
            tw2 = tw
        cg = tw["class_group"]
        want_basis = [f"zeta[{zeta_order}]", f"t^(1/{3 ** (n - 1)})"]
        good = (cg["dim"] == 2 and cg["basis"] == want_basis
                and tw["zeta_order"] == zeta_order
                and tw["constants"] == constants
                and tw["ramification"] == 3 ** (n - 1))
        ok = ok and good
        levels.append({
            "n": n,
            "class_dim": cg["dim"],
            "class_basis": cg["basis"],
            "zeta_order": tw["zeta_order"],
            "constants": tw["constants"],
            "ramification": tw["ramification"],
            "as_stated": good,
        })
    # zeta_9 lives in F_343 and is not a cube there: zeta^((343-1)/3) != 1
    f343 = tw2["_constants"]
    zeta9 = tw2["_zeta_top"]
    in_f343 = f343.q == 343
    power = f343.pow(zeta9, (f343.q - 1) // 3)
    noncube = power != f343.one
    ok = ok and in_f343 and noncube
    return {
        "passed": ok,
        "levels": levels,
        "zeta9_in_f343": in_f343,
        "zeta9_noncube_exponent": (f343.q - 1) // 3,
        "zeta9_is_cube": not noncube,
    }


def _c08(quick: bool, seed: int) -> dict:
    from .rigidity.towers import tower_galois_group
    ctx = make_context("laurent(7)", 3)
    g2 = tower_galois_group(ctx, 2)
    g3 = tower_galois_group(ctx, 3)
    act = g3["action"]
    bounds = g3["abelian_bounds"]
    ok = (g2["abelian"] and g2["order"] == 9
          and not g3["abelian"] and g3["order"] == 81
          and act["relation"] == "rho^sigma = rho^4"
          and act["relation_ok"] and act["hom_ok"] and act["faithful"]
          and bounds["warn"] is not None)
    return {
        "passed": ok,
        "n2": {"abelian": g2["abelian"], "order": g2["order"]},
        "n3": {
            "abelian": g3["abelian"],
            "order": g3["order"],
            "descriptor": g3["descriptor"],
            "relation": act["relation"],
            "relation_ok": act["relation_ok"],
            "relation_checked_on": act["relation_checked_on"],
        },
        "abelian_bound_stated": bounds["stated_bound"],
        "abelian_bound_computed": bounds["computed_bound"],
        "_bounds": bounds,
    }


def _c09(quick: bool, seed: int) -> dict:
    from .rigidity.witness import hilbert90_witness
    ctx = make_context("ratfunc(7)", 3)
    wit = hilbert90_witness(ctx)
    cert = wit["certificate"]
    ok = (wit["resolvent_ok"] and wit["norm_delta_ok"] and wit["norm_beta_ok"]
          and cert["v_beta"] == 2 and cert["v_beta_mod_p"] == 2
          and wit["galois"]["verdict"] == "non-Galois certified")
    return {
        "passed": ok,
        "resolvent_ok": wit["resolvent_ok"],
        "norm_delta_ok": wit["norm_delta_ok"],
        "norm_beta_ok": wit["norm_beta_ok"],
        "certificate_place": cert["place"],
        "v_beta": cert["v_beta"],
        "verdict": wit["galois"]["verdict"],
    }


# ---------------------------------------------------------------------------
# solve criteria


def _poly_mul(L: LaurentField, f: list, g: list) -> list:
    out = [L.zero() for _ in range(len(f) + len(g) - 1)]
    for i, fi in enumerate(f):
        for j, gj in enumerate(g):
            out[i + j] = out[i + j] + fi * gj
    return out


def _binomial(L: LaurentField, fq, e: int, c: int, a: int, d: int = 0) -> list:
    # X^e - c * t^a * (1 + d*t)
    u = L.constant(fq.constant(c)) * L.t() ** a
    if d:
        u = u * (L.one() + L.constant(fq.constant(d)) * L.t())
    coeffs = [L.zero() for _ in range(e + 1)]
    coeffs[0] = -u
    coeffs[e] = L.one()
    return coeffs


def _random_radical_poly(L: LaurentField, fq, rng: random.Random) -> list:
    shape = rng.randrange(4)
    c = rng.randrange(1, 7)
    a = rng.randrange(5)
    if shape == 0:
        return _binomial(L, fq, 3, c, a)
    if shape == 1:
        return _binomial(L, fq, 3, c, a, d=rng.randrange(1, 7))
    if shape == 2:
        return _binomial(L, fq, 9, c, a)
    c2 = rng.randrange(1, 7)
    a2 = rng.randrange(5)
    if (c2, a2) == (c, a):
        a2 = (a2 + 1) % 5
    return _poly_mul(L, _binomial(L, fq, 3, c, a), _binomial(L, fq, 3, c2, a2))


def _c10(quick: bool, seed: int) -> dict:
    from .puiseux import puiseux_roots, splitting_descriptor, verify_root
    ctx = make_context("laurent(7,64)", 3)
    L, fq = ctx.laurent, ctx.fq

    # anchor: X^3 - (1+t) has the unit root 1 + 5t + 3t^2 + O(t^3)
    unit_poly = _binomial(L, fq, 3, 1, 0, d=1)
    roots = puiseux_roots(unit_poly, 3, 3)
    series = sorted(r.to_json()["literal"] for r in roots)
    anchor_root = "t^0*[1,5,3]+O(t^3)" in series
    residuals = [verify_root(unit_poly, r) for r in roots]
    anchor_resid = all(r["ok"] and Fraction(r["valuation"]) >= 3 for r in residuals)

    # anchor: X^9 - t splits at (r, s) = (1, 2) inside the level-3 tower
    nonic = _binomial(L, fq, 9, 1, 1)
    split = splitting_descriptor(nonic, 3, 4)
    anchor_split = (split["r"] == 1 and split["s"] == 2
                    and split["tower_level"] == 3 and split["contained"])

    trips = 10 if quick else 100
    rng = random.Random(seed)
    done = 0
    failures = 0
    while done < trips:
        coeffs = _random_radical_poly(L, fq, rng)
        try:
            rts = puiseux_roots(coeffs, 3, 4)
        except UsageError:
            continue  # squarefree collision in a product; redraw
        done += 1
        if len(rts) != len(coeffs) - 1:
            failures += 1
            continue
        if not all(verify_root(coeffs, r)["ok"] for r in rts):
            failures += 1

    ok = anchor_root and anchor_resid and anchor_split and failures == 0
    return {
        "passed": ok,
        "unit_root_series": series,
        "unit_root_found": anchor_root,
        "residual_valuations_ok": anchor_resid,
        "nonic_splitting": {k: split[k] for k in
                            ("r", "s", "tower_level", "contained")},
        "round_trips": done,
        "round_trip_failures": failures,
    }


def _c11(quick: bool, seed: int) -> dict:
    from .groups.models import parse_group_descriptor
    from .groups.subgroups import (full_group, is_powerful, maximal_subgroups,
                                   rank)
    from .rigidity.verdicts import rigidity_profile
    fields = []
    ok = True
    for desc in ("gf(7)", "laurent(7)", "laurent(343)"):
        prof = rigidity_profile(make_context(desc, 3))
        good = (prof["status"] == "rigid" and prof["group_powerful"] is True
                and prof["consistent"] is True)
        ok = ok and good
        fields.append({
            "descriptor": desc,
            "status": prof["status"],
            "group_model": prof["group_model"],
            "group_powerful": prof["group_powerful"],
        })
    rat = rigidity_profile(make_context("ratfunc(7)", 3))
    ok = ok and rat["status"] == "not_rigid" and rat["consistent"] is True
    fields.append({
        "descriptor": "ratfunc(7)",
        "status": rat["status"],
        "group_model": rat.get("group_model"),
        "group_powerful": rat["group_powerful"],
    })
    control = parse_group_descriptor("ut(4,3,1)")
    pw = is_powerful(control, full_group(control))
    ok = ok and pw["powerful"] is False
    model = parse_group_descriptor("theta(3,1,1,3)")
    subs = maximal_subgroups(model, full_group(model))
    ranks = [rank(model, item["subgroup"]) for item in subs]
    ok = ok and len(subs) == 4 and all(r == 2 for r in ranks)
    return {
        "passed": ok,
        "fields": fields,
        "control_group": control.descriptor,
        "control_powerful": pw["powerful"],
        "maximal_subgroup_count": len(subs),
        "maximal_subgroup_ranks": ranks,
    }


_CRITERIA = [
    ("c01", _c01), ("c02", _c02), ("c03", _c03), ("c04", _c04),
    ("c05", _c05), ("c06", _c06), ("c07", _c07), ("c08", _c08),
    ("c09", _c09), ("c10", _c10), ("c11", _c11),
]


def run_core(quick: bool, seed: int):
    """One pass over criteria 1..11: (criteria, notes, seconds per id)."""
    criteria = []
    notes = []
    timings = {}
    for cid, fn in _CRITERIA:
        t0 = time.monotonic()
        detail = fn(quick, seed)
        timings[cid] = time.monotonic() - t0
        entry = {"id": cid, "title": _TITLES[cid]}
        entry.update(detail)
        criteria.append(entry)
        if cid == "c03":
            notes.append(note_dimension_rank(
                detail["stated_rank_at_p"], detail["computed_rank_at_p"], 3))
        if cid == "c08":
            warn = note_tower_abelian(detail["_bounds"])
            if warn:
                notes.append(warn)
    return criteria, notes, timings


def run_all(quick: bool = False, seed: Optional[int] = None) -> dict:
    seed = DEFAULT_SEED if seed is None else seed
    first, notes, timings = run_core(quick, seed)
    second, notes2, _ = run_core(quick, seed)
    identical = (canonical_json(first) == canonical_json(second)
                 and canonical_json(notes) == canonical_json(notes2))
    c12 = {
        "id": "c12",
        "title": _TITLES["c12"],
        "passed": identical,
        "runs_compared": 2,
        "byte_identical": identical,
    }
    criteria = first + [c12]
    budgets_ok = True
    for entry in criteria:
        cid = entry["id"]
        if cid not in _BUDGET:
            continue
        limit = _BUDGET[cid]
        parts = entry.get("_seconds_parts") or [timings[cid]]
        within = all(s < limit for s in parts)
        entry["budget_seconds"] = limit
        entry["within_budget"] = within
        budgets_ok = budgets_ok and within
    body = {
        "quick": quick,
        "criteria": criteria,
        "all_passed": all(c["passed"] for c in criteria),
        "all_within_budget": budgets_ok,
    }
    return make_report("accept", {"quick": quick, "seed": seed},
                       strip_private(body), notes)
