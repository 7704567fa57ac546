"""Field-level rigidity verdicts across the supported field kinds."""

import pytest

from prigid.errors import UsageError
from prigid.rigidity.context import make_context
from prigid.rigidity.verdicts import (
    is_element_rigid,
    is_field_rigid,
    lambda2_injectivity,
    rigidity_profile,
    steinberg_witness,
)


def test_finite_field_rigid():
    d = is_field_rigid(make_context("gf(7)", 3))
    assert d["status"] == "rigid" and d["complete"]
    assert d["descriptor"] == "gf(7)"


def test_laurent_rigid_with_pairing(ctx_laurent):
    d = is_field_rigid(ctx_laurent)
    assert d["status"] == "rigid" and d["complete"]
    assert d["pairing"]["matrix"] == [[0, 1], [2, 0]]
    assert d["pairing"]["nondegenerate"]


def test_ratfunc_not_rigid_with_witness(ctx_ratfunc):
    d = is_field_rigid(ctx_ratfunc)
    assert d["status"] == "not_rigid" and d["complete"]
    w = d["witness"]
    assert w["a"] == "t" and w["b"] == "6*t+1"
    assert set(w["symbols"].values()) == {0}
    assert w["independent"]


def test_element_rigid_laurent(ctx_laurent):
    d = is_element_rigid(ctx_laurent, ctx_laurent.laurent.t())
    assert d["status"] == "rigid" and d["coords"] == [0, 1]
    u = ctx_laurent.laurent.constant(ctx_laurent.fq.constant(3))
    d = is_element_rigid(ctx_laurent, u)
    assert d["status"] == "rigid" and d["coords"] == [1, 0]


def test_element_rigid_trivial_class(ctx_laurent):
    L = ctx_laurent.laurent
    d = is_element_rigid(ctx_laurent, L.one())
    assert d["status"] == "inapplicable" and d["coords"] == [0, 0]
    with pytest.raises(UsageError):
        is_element_rigid(ctx_laurent, L.zero())


def test_lambda2_injectivity(ctx_laurent, ctx_ratfunc):
    d = lambda2_injectivity(ctx_laurent)
    assert d["injective"] and d["kernel_dim"] == 0

    d = lambda2_injectivity(ctx_ratfunc)
    assert not d["injective"]
    assert d["kernel_dim"] > 0
    assert d["kernel_support"] == ["t^t+1"]


def test_steinberg_witness_anchor(ctx_ratfunc):
    w = steinberg_witness(ctx_ratfunc)
    assert w["a"] == "t" and w["b"] == "6*t+1"
    assert w["symbols"] == {"t": 0, "t+6": 0, "inf": 0}
    assert w["a_coords"] == [0, 1, 0] and w["b_coords"] == [0, 0, 1]
    assert w["independent"]


def test_steinberg_witness_refused_on_rigid_field(ctx_laurent):
    with pytest.raises(UsageError):
        steinberg_witness(ctx_laurent)


def test_rigidity_profile_descriptors():
    for desc, model in (
        ("gf(7)", "theta(3,inf,1,2)"),
        ("laurent(7)", "theta(3,1,1,2)"),
        ("laurent(343)", "theta(3,2,1,3)"),
    ):
        d = rigidity_profile(make_context(desc, 3))
        assert d["status"] == "rigid"
        assert d["group_model"] == model
        assert d["group_powerful"] and d["consistent"]

    d = rigidity_profile(make_context("ratfunc(7)", 3))
    assert d["status"] == "not_rigid"
    assert "group_model" not in d
    assert d["group_powerful"] is None and d["consistent"]
