"""Constants arithmetic: anchors enumerated by hand over F_7 plus random laws."""

import pytest
from hypothesis import given, strategies as st

from prigid.errors import UsageError
from prigid.fields.fq import (canonical_nonresidue, field_make,
                              power_residue_class, vp)


def test_f7_cube_classes(f7):
    # 1 and 6 are cubes, 3 and 4 sit in the u* class, 2 and 5 in its square
    assert {x: power_residue_class(f7, x, 3) for x in range(1, 7)} == {
        1: 0, 2: 2, 3: 1, 4: 1, 5: 2, 6: 0}


def test_f7_nonresidue(f7):
    assert canonical_nonresidue(f7, 3) == 3


def test_f343_modulus_and_class(f343):
    assert f343.q == 343
    assert tuple(f343.modulus) == (2, 0, 0, 1)
    assert power_residue_class(f343, f343.elem_from_code(7), 3) == 2


def test_f7_9_modulus():
    big = field_make(7, 9)
    assert big.q == 7 ** 9
    assert tuple(big.modulus) == (2, 0, 0, 0, 0, 0, 0, 0, 0, 1)


def test_zeta9_in_f343_not_a_cube(f343):
    # order-9 elements exist since 9 | 342; the cube test is an exponent check
    zeta = f343.elem_from_code(21)
    assert f343.pow(zeta, 9) == f343.one
    assert f343.pow(zeta, 3) != f343.one
    assert f343.pow(zeta, (f343.q - 1) // 3) != f343.one


def test_code_roundtrip(f343):
    for code in (0, 1, 7, 21, 342):
        assert f343.code_of(f343.elem_from_code(code)) == code


def test_constant_and_frobenius(f343):
    assert f343.constant(10) == f343.constant(3)
    x = f343.elem_from_code(7)
    assert f343.frobenius(x) == f343.pow(x, 7)


def test_vp():
    assert vp(342, 3) == 2
    assert vp(7 ** 9 - 1, 3) == 3
    assert vp(5, 3) == 0


def test_inverse_of_zero_rejected(f7):
    with pytest.raises(UsageError):
        f7.inv(f7.zero)


@given(st.integers(0, 342), st.integers(0, 342), st.integers(0, 342))
def test_f343_ring_laws(a, b, c):
    f = field_make(7, 3)
    x, y, z = (f.elem_from_code(v) for v in (a, b, c))
    assert f.add(x, y) == f.add(y, x)
    assert f.mul(x, y) == f.mul(y, x)
    assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
    assert f.add(x, f.neg(x)) == f.zero


@given(st.integers(1, 342))
def test_f343_inverse_law(a):
    f = field_make(7, 3)
    x = f.elem_from_code(a)
    assert f.mul(x, f.inv(x)) == f.one


@given(st.integers(1, 342), st.integers(0, 50))
def test_f343_pow_matches_repeated_mul(a, e):
    f = field_make(7, 3)
    x = f.elem_from_code(a)
    acc = f.one
    for _ in range(e):
        acc = f.mul(acc, x)
    assert f.pow(x, e) == acc
