"""Rational function field: valuations, supports, and the degree identity."""

import random

import pytest

from prigid.errors import UsageError
from prigid.fields.poly import pdeg, pfrom_int_coeffs
from prigid.fields.ratfunc import INF, RatFuncField


@pytest.fixture()
def K(f7):
    return RatFuncField(f7, seed=0)


def test_repr_anchor(K):
    t = K.t()
    b = K.one() - t
    assert repr(b) == "6*t+1"
    x = (t ** 2 + K.one()) / (t + K.from_int(6))
    assert repr(x) == "(t^2+1)/(t+6)"


def test_valuations_at_named_places(K, f7):
    t = K.t()
    place_t = pfrom_int_coeffs(f7, [0, 1])
    place_t1 = pfrom_int_coeffs(f7, [6, 1])  # t + 6 = t - 1
    x = t ** 2 / (K.one() - t)
    assert x.valuation(place_t) == 2
    assert x.valuation(place_t1) == -1
    assert x.valuation(INF) == -1  # deg num - deg den = 2 - 1


def test_degree_sum_is_zero(K, f7):
    # sum over all places of v_P(x) * deg(P) vanishes on nonzero functions
    rng = random.Random(9)
    for _ in range(40):
        num = pfrom_int_coeffs(f7, [rng.randrange(7) for _ in range(4)] + [1])
        den = pfrom_int_coeffs(f7, [rng.randrange(7) for _ in range(2)] + [1])
        x = K.make(num, den)
        total = sum(x.valuation(pi) * pdeg(pi) for pi in x.factor_support())
        total += x.valuation(INF)
        assert total == 0


def test_support_places_order(K, f7):
    t = K.t()
    x = t * (K.one() - t)
    names = [K.place_str(p) for p in x.support_places()]
    assert names == ["t", "t+6", "inf"]


def test_unit_residue_is_a_unit(K, f7):
    t = K.t()
    x = t ** 3 * (K.one() + t)
    place_t = pfrom_int_coeffs(f7, [0, 1])
    res = x.unit_residue(place_t)
    assert res == pfrom_int_coeffs(f7, [1])  # (1+t) mod t


def test_field_laws(K):
    rng = random.Random(4)
    f7 = K.fq
    for _ in range(30):
        a = K.from_poly(pfrom_int_coeffs(f7, [rng.randrange(7) for _ in range(3)]))
        b = K.from_poly(pfrom_int_coeffs(f7, [rng.randrange(7) for _ in range(3)]))
        assert a + b == b + a
        assert a * b == b * a
        if not b.is_zero:
            assert (a / b) * b == a


def test_place_validation(K, f7):
    with pytest.raises(UsageError):
        K.check_place(pfrom_int_coeffs(f7, [6, 0, 1]))  # t^2 - 1 splits
    with pytest.raises(UsageError):
        K.check_place(pfrom_int_coeffs(f7, [1, 2]))  # not monic
    K.check_place(INF)
    K.check_place(pfrom_int_coeffs(f7, [3, 1]))


def test_zero_division_rejected(K):
    with pytest.raises(UsageError):
        K.one() / K.zero()
    with pytest.raises(UsageError):
        K.zero().factor_support()
