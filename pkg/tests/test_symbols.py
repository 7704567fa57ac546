"""Tame symbol pairings over Laurent and rational function fields."""

import random

import pytest

from prigid.errors import UsageError
from prigid.fields.fq import field_make
from prigid.fields.ratfunc import INF
from prigid.rigidity.symbols import (
    laurent_class_coords,
    laurent_symbol,
    laurent_symbol_matrix,
    require_mu_p,
    residue_class,
    steinberg_vector,
    symbol_vector,
    tame_symbol_local,
)


def test_laurent_symbol_matrix(ctx_laurent):
    m = laurent_symbol_matrix(ctx_laurent.laurent, 3)
    assert m["p"] == 3
    assert m["basis"] == ["u*", "t"]
    assert m["ustar_code"] == 3
    assert m["matrix"] == [[0, 1], [2, 0]]
    assert m["nondegenerate"]


def test_laurent_symbol_anchors(ctx_laurent):
    L = ctx_laurent.laurent
    t = L.t()
    u = L.constant(L.fq.constant(3))  # fixed non-cube of F_7
    assert laurent_symbol(u, t, 3) == 1
    assert laurent_symbol(t, u, 3) == 2
    assert laurent_symbol(t, t, 3) == 0
    assert laurent_symbol(u, u, 3) == 0


def test_laurent_class_coords(ctx_laurent):
    L = ctx_laurent.laurent
    x = L.from_int_coeffs(2, [3])  # 3*t^2
    assert laurent_class_coords(x, 3) == (1, 2)
    assert laurent_class_coords(L.one(), 3) == (0, 0)
    assert laurent_class_coords(L.t(), 3) == (0, 1)


def test_laurent_symbol_is_alternating_pairing(ctx_laurent):
    L = ctx_laurent.laurent
    rng = random.Random(17)

    def rand_unit():
        v = rng.randrange(-3, 4)
        coeffs = [rng.randrange(1, 7)] + [rng.randrange(7) for _ in range(3)]
        return L.from_int_coeffs(v, coeffs)

    for _ in range(40):
        a, b, c = rand_unit(), rand_unit(), rand_unit()
        sab = laurent_symbol(a, b, 3)
        assert laurent_symbol(b, a, 3) == (-sab) % 3
        assert laurent_symbol(a * c, b, 3) == (sab + laurent_symbol(c, b, 3)) % 3
        assert laurent_symbol(a, a, 3) == 0  # p odd, so alternating


def test_laurent_steinberg_relation(ctx_laurent):
    # (a, 1-a) = 0 whenever both sides are defined
    L = ctx_laurent.laurent
    rng = random.Random(23)
    checked = 0
    for _ in range(60):
        v = rng.randrange(0, 3)
        coeffs = [rng.randrange(7) for _ in range(4)]
        a = L.from_int_coeffs(v, coeffs)
        one_minus = L.one() - a
        if a.is_exact_zero or one_minus.is_exact_zero:
            continue
        assert laurent_symbol(a, one_minus, 3) == 0
        checked += 1
    assert checked >= 40


def test_tame_symbol_local_values(ctx_ratfunc):
    K = ctx_ratfunc.ratfunc
    t = K.t()
    vec = symbol_vector(K, 3, t, K.one() - t)
    assert vec["is_zero"]
    vec = symbol_vector(K, 3, t, t)
    assert all(v == 0 for v in vec["values"].values())


def test_symbol_vector_reciprocity(ctx_ratfunc):
    K = ctx_ratfunc.ratfunc
    fq = K.fq
    rng = random.Random(31)

    def rand_elem():
        while True:
            coeffs = [fq.constant(rng.randrange(7)) for _ in range(rng.randrange(1, 4))]
            if any(not fq.is_zero(c) for c in coeffs):
                return K.from_poly(tuple(coeffs))

    for _ in range(30):
        a, b = rand_elem(), rand_elem()
        vec = symbol_vector(K, 3, a, b)  # raises if the sum law fails
        assert sum(vec["values"].values()) % 3 == 0


def test_steinberg_vector_anchor(ctx_ratfunc):
    K = ctx_ratfunc.ratfunc
    d = steinberg_vector(K, 3, K.t())
    assert d["places"] == ["t", "t+6", "inf"]
    assert d["is_zero"]
    assert set(d["values"].values()) == {0}


def test_steinberg_vector_rejects_fixed_points(ctx_ratfunc):
    K = ctx_ratfunc.ratfunc
    for bad in (K.zero(), K.one()):
        with pytest.raises(UsageError):
            steinberg_vector(K, 3, bad)


def test_residue_class_and_mu_p():
    f7 = field_make(7, 1)
    require_mu_p(f7, 3)  # fine: 3 | 6
    with pytest.raises(UsageError):
        require_mu_p(field_make(5, 1), 3)
    assert residue_class(f7, 3, f7.constant(1)) == 0
    assert residue_class(f7, 3, f7.constant(3)) == 1
    assert residue_class(f7, 3, f7.constant(2)) == 2


def test_tame_symbol_local_at_infinity(ctx_ratfunc):
    K = ctx_ratfunc.ratfunc
    t = K.t()
    # v_inf(t) = -1, v_inf(1) = 0: symbol at infinity picks up the sign twist
    s = tame_symbol_local(K, 3, t, K.one() - t, INF)
    vec = symbol_vector(K, 3, t, K.one() - t)
    assert s == vec["values"]["inf"]
