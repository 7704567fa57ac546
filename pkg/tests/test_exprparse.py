"""Expression parsing: the grammar the CLI accepts for elements and polynomials."""

import pytest

from prigid.errors import UsageError
from prigid.exprparse import parse_element, parse_poly
from prigid.rigidity.context import make_context


@pytest.fixture()
def lctx():
    return make_context("laurent(7,16)", 3)


@pytest.fixture()
def rctx():
    return make_context("ratfunc(7)", 3)


def test_laurent_literals_roundtrip(lctx):
    L = lctx.laurent
    for text in ("t", "t^2*[1,0,3]", "t^2*[1,0,3]+O(t^8)", "1+5*t+3*t^2",
                 "t^-2*[2]", "[1,2,3]+O(t^5)"):
        x = parse_element(lctx, text)
        assert parse_element(lctx, x.to_literal()) == x


def test_ratfunc_literals_roundtrip(rctx):
    for text in ("t", "6*t+1", "(t^2+1)/(t+6)", "t^3/(1-t)"):
        x = parse_element(rctx, text)
        assert parse_element(rctx, repr(x)) == x


def test_precedence_and_negation(rctx):
    K = rctx.ratfunc
    assert parse_element(rctx, "1-2*t^2") == K.one() - K.from_int(2) * K.t() ** 2
    assert parse_element(rctx, "-t+1") == K.one() - K.t()
    assert parse_element(rctx, "2^3") == K.from_int(1)  # 8 = 1 mod 7


def test_poly_parse_low_first(lctx):
    coeffs = parse_poly(lctx, "x^3-(1+t)")
    assert len(coeffs) == 4
    L = lctx.laurent
    assert coeffs[0] == -(L.one() + L.t())
    assert coeffs[1].is_exact_zero and coeffs[2].is_exact_zero
    assert coeffs[3] == L.one()


def test_poly_rejects_division_by_unknown(lctx):
    with pytest.raises(UsageError):
        parse_poly(lctx, "1/x")


def test_element_rejects_unknown(lctx):
    with pytest.raises(UsageError):
        parse_element(lctx, "x+1")


def test_gf_context_rejects_t():
    gctx = make_context("gf(7)", 3)
    assert parse_element(gctx, "3+1") == gctx.fq.constant(4)
    with pytest.raises(UsageError):
        parse_element(gctx, "t")


def test_malformed_inputs(lctx):
    for bad in ("", "t t", "[1,", "O(t)", "2t", "^3", "(1"):
        with pytest.raises(UsageError):
            parse_element(lctx, bad)
