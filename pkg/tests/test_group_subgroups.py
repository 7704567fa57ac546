"""Subgroup lattices of the finite models: series, powerfulness, dimension subgroups.

Expected orders were computed once by brute-force closure over all elements
and are frozen here; the suite must reproduce them exactly.
"""

import pytest

from prigid.errors import ResourceBoundError
from prigid.groups.models import parse_group_descriptor
from prigid.groups.subgroups import (
    commutator_subgroup,
    dimension_subgroups,
    frattini,
    full_group,
    gamma_series,
    is_powerful,
    j_module_test,
    lambda_series,
    locally_powerful_probe,
    maximal_subgroups,
    power_subgroup,
    rank,
    series_orders,
    subgroup_from_gens,
    theorem_A_group_test,
    tower_group,
    tower_group_model,
    trivial_subgroup,
    uniform_check,
)

SERIES_ORDERS = {
    # descriptor: (lambda orders, gamma orders, rank)
    "theta(3,1,1,3)": ([729, 81, 9, 1], [729, 9, 3, 1], 2),
    "theta(3,1,2,3)": ([19683, 729, 27, 1], [19683, 81, 9, 1], 3),
    "theta(3,1,1,4)": ([6561, 729, 81, 9, 1], [6561, 27, 9, 3, 1], 2),
    "ut(4,3,1)": ([729, 27, 3, 1], [729, 27, 3, 1], 3),
}


@pytest.mark.parametrize("desc", sorted(SERIES_ORDERS))
def test_series_orders(desc):
    lam_exp, gam_exp, rk = SERIES_ORDERS[desc]
    G = parse_group_descriptor(desc)
    g = full_group(G)
    assert series_orders(lambda_series(G, g)) == lam_exp
    assert series_orders(gamma_series(G, g)) == gam_exp
    assert rank(G, g) == rk


def test_dimension_subgroups_theta():
    G = parse_group_descriptor("theta(3,1,1,3)")
    g = full_group(G)
    dims = dimension_subgroups(G, g, 10)
    assert series_orders(dims) == [729, 81, 81, 9, 9, 9, 9, 9, 9, 1]
    # D_n jumps exactly at powers of p
    assert dims[0].codes == g.codes
    assert dims[2].codes == dims[1].codes
    assert dims[8].codes == dims[3].codes


def test_frattini_iterate_equals_lambda3():
    G = parse_group_descriptor("theta(3,1,1,3)")
    g = full_group(G)
    phi2 = frattini(G, frattini(G, g))
    lam3 = lambda_series(G, g)[2]
    gp2 = power_subgroup(G, g, G.p ** 2)
    assert phi2.codes == lam3.codes == gp2.codes


def test_powerful_verdicts():
    G = parse_group_descriptor("theta(3,1,1,3)")
    d = is_powerful(G, full_group(G))
    assert d["powerful"] and d["commutator_order"] == 9 and d["power_order"] == 81

    U = parse_group_descriptor("ut(4,3,1)")
    d = is_powerful(U, full_group(U))
    assert not d["powerful"]
    assert (d["commutator_order"], d["power_order"]) == (27, 3)
    assert d["witness_element"] == "u(0,1,0,0,0,0)"
    assert d["witness_pair"] == ["u(1,0,0,0,0,0)", "u(0,0,0,1,0,0)"]


def test_uniform_check_theta():
    G = parse_group_descriptor("theta(3,1,1,3)")
    d = uniform_check(G, full_group(G))
    assert d == {
        "powerful": True,
        "indices": [9, 9, 9],
        "constant_while_proper": True,
        "vacuous": False,
        "uniform_like": True,
    }


def test_j_module_split():
    U = parse_group_descriptor("ut(4,3,1)")
    d = j_module_test(U, full_group(U))
    assert not d["holds"]
    assert (d["index_phi_phi2"], d["index_phi_lambda3"]) == (27, 9)

    G = parse_group_descriptor("theta(3,1,1,3)")
    d = j_module_test(G, full_group(G))
    assert d["holds"] and d["phi2_equals_lambda3"]


def test_theorem_A_group_test():
    rec = theorem_A_group_test(parse_group_descriptor("theta(3,1,1,3)"))
    assert rec["passes"] and rec["powerful"] and rec["index_lambda3"] == 81
    assert rec["index_lambda3_is_p2d"] and rec["rank"] == 2
    rec = theorem_A_group_test(parse_group_descriptor("ut(4,3,1)"))
    assert not rec["passes"] and not rec["powerful"]


def test_maximal_subgroups_theta():
    G = parse_group_descriptor("theta(3,1,1,3)")
    ms = maximal_subgroups(G, full_group(G))
    assert len(ms) == 4
    seen = []
    for d in ms:
        h = d["subgroup"]
        assert h.order == 243
        assert rank(G, h) == 2
        seen.append((d["normal"], tuple(G.element_label(x) for x in h.gens)))
    assert ((0, 1), ("(0;1)", "(3;0)")) in seen
    assert ((1, 0), ("(0;3)", "(1;0)")) in seen


def test_locally_powerful_probe():
    G = parse_group_descriptor("theta(3,1,1,3)")
    d = locally_powerful_probe(G, full_group(G))
    assert d["powerful"] and d["all_maximal_powerful"]
    assert [m["order"] for m in d["maximal"]] == [243] * 4


def test_tower_group_records():
    assert tower_group(3, 1, 3) == {
        "descriptor": "theta(3,1,1,2)",
        "order": 81,
        "is_abelian": False,
        "exponent": 9,
        "derived_order": 3,
    }
    assert tower_group(3, None, 2) == {
        "descriptor": "theta(3,inf,1,1)",
        "order": 9,
        "is_abelian": True,
        "exponent": 3,
        "derived_order": 1,
    }
    assert tower_group_model(3, 1, 3).descriptor == "theta(3,1,1,2)"


def test_subgroup_primitives():
    G = parse_group_descriptor("theta(3,1,1,3)")
    g = full_group(G)
    t = trivial_subgroup(G)
    assert t.order == 1 and t.codes == {G.identity}
    der = commutator_subgroup(G, g, g)
    assert der.order == 9
    # the derived subgroup sits inside the Frattini subgroup
    assert der.codes <= frattini(G, g).codes
    cyc = subgroup_from_gens(G, [G.standard_generators()[0]])
    assert cyc.order == 27


def test_closure_bound_enforced():
    G = parse_group_descriptor("theta(3,1,2,3)")
    with pytest.raises(ResourceBoundError):
        full_group(G, bound=1000)
