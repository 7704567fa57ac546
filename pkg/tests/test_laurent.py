"""Truncated Laurent series: window semantics are the contract under test.

A series is either exact (all later coefficients known zero) or carries a
horizon; arithmetic must never claim knowledge past what the operands
determine, and must keep every coefficient they do determine.
"""

import pytest
from hypothesis import given, strategies as st

from prigid.errors import PrecisionError, UsageError
from prigid.fields.fq import field_make
from prigid.fields.laurent import LaurentField


@pytest.fixture()
def L(f7):
    return LaurentField(f7, 16)


def test_literal_anchor(L):
    x = L.from_int_coeffs(2, [1, 0, 3])
    assert x.to_literal() == "t^2*[1,0,3]"
    assert x.exact


def test_add_keeps_known_zeros_from_exact_operand(L):
    # t^2*(1+3t^2) is exact; adding an O(t^8) marker keeps exponents 5..7 known
    x = L.from_int_coeffs(2, [1, 0, 3])
    marker = L.make(8, [], False, 8)
    s = x + marker
    assert s.horizon == 8
    assert s.to_literal() == "t^2*[1,0,3]+O(t^8)"
    for m in (5, 6, 7):
        assert s.coefficient(m) == L.fq.zero


def test_display_trims_trailing_known_zeros(L):
    x = (L.from_int_coeffs(2, [1, 0, 3])) + L.make(8, [], False, 8)
    # parsing the trimmed literal reproduces the same element
    from prigid.exprparse import parse_element
    from prigid.rigidity.context import FieldContext
    ctx = FieldContext("laurent", 3, L.fq, laurent=L)
    assert parse_element(ctx, x.to_literal()) == x


def test_mul_and_valuation(L):
    a = L.from_int_coeffs(-1, [2])
    b = L.from_int_coeffs(3, [4])
    assert (a * b).valuation() == 2
    assert (a * b).leading() == L.fq.one  # 2*4 = 8 = 1 mod 7


def test_inverse_of_unit(L):
    u = L.from_int_coeffs(0, [1, 1])
    v = u.inverse()
    assert (u * v).known_equal(L.one())


def test_inverse_needs_nonzero(L):
    with pytest.raises((UsageError, PrecisionError)):
        L.zero().inverse()


def test_pow_negative_exponent(L):
    t = L.t()
    assert (t ** -2).valuation() == -2
    assert ((t ** -2) * t ** 2).known_equal(L.one())


def test_pth_root_of_cube(L):
    x = (L.one() + L.t()) ** 3
    r = x.pth_root(3)
    assert (r ** 3).known_equal(x)


def test_inflate_preserves_arithmetic(L, f7):
    L3 = LaurentField(f7, 48, var="z")
    a = L.one() + L.t()
    b = L.t() ** 2
    left = (a * b).inflate(3, L3)
    right = a.inflate(3, L3) * b.inflate(3, L3)
    assert left.known_equal(right)
    assert left.valuation() == 6


def test_derivative_leibniz(L):
    a = L.one() + L.t() ** 2
    b = L.from_int_coeffs(1, [3, 1])
    lhs = (a * b).derivative()
    rhs = a.derivative() * b + a * b.derivative()
    assert lhs.known_equal(rhs)


def test_compose_substitutes(L):
    # f(t) = 1 + t evaluated at t -> t^2 + t^3
    f = L.one() + L.t()
    g = L.t() ** 2 + L.t() ** 3
    assert f.compose(g).known_equal(L.one() + L.t() ** 2 + L.t() ** 3)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=5),
       st.lists(st.integers(0, 6), min_size=1, max_size=5),
       st.integers(-3, 3), st.integers(-3, 3))
def test_mul_commutes_and_distributes(av, bv, sa, sb):
    f7 = field_make(7, 1)
    L = LaurentField(f7, 24)
    a = L.from_int_coeffs(sa, av)
    b = L.from_int_coeffs(sb, bv)
    assert (a * b).known_equal(b * a)
    assert ((a + b) * a).known_equal(a * a + b * a)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=4).filter(lambda v: v[0] != 0))
def test_inverse_roundtrip(av):
    f7 = field_make(7, 1)
    L = LaurentField(f7, 24)
    u = L.from_int_coeffs(0, av)
    assert (u * u.inverse()).known_equal(L.one())
