"""Group models: descriptor parsing, the twisted multiplication law, labels."""

import numpy as np
import pytest

from prigid.errors import UsageError
from prigid.groups import backend
from prigid.groups.models import parse_group_descriptor


def test_theta_descriptor_roundtrip():
    G = parse_group_descriptor("theta(3,1,1,3)")
    assert G.descriptor == "theta(3,1,1,3)"
    assert (G.p, G.nI, G.pm, G.order) == (3, 1, 27, 729)
    assert G.theta == 4  # (1 + 3^1) mod 27
    H = parse_group_descriptor("theta(3,inf,1,2)")
    assert H.theta == 1 and H.descriptor == "theta(3,inf,1,2)"


def test_theta_law_by_hand():
    # (s,v)(t,w) = (s+t, v + theta^s * w), components mod p^m
    G = parse_group_descriptor("theta(3,1,1,3)")
    a = G.encode(1, (2,))
    b = G.encode(2, (5,))
    assert G.decode(G.mul(a, b)) == (3, ((2 + 4 * 5) % 27,))
    # inverse: (-s, -theta^{-s} v); theta^{-1} = 7 mod 27
    assert G.decode(G.inv(a)) == (26, ((-2 * 7) % 27,))
    # a^3 = (3, v*(1 + theta + theta^2)) = (3, 2*21 mod 27)
    assert G.decode(G.pow(a, 3)) == (3, (15,))
    assert G.mul(a, G.inv(a)) == G.identity


def test_theta_abelian_iff_trivial_twist():
    G = parse_group_descriptor("theta(3,inf,1,2)")
    H = parse_group_descriptor("theta(3,1,1,2)")
    ga, gb = G.standard_generators()
    ha, hb = H.standard_generators()
    assert G.mul(ga, gb) == G.mul(gb, ga)
    assert H.mul(ha, hb) != H.mul(hb, ha)


def test_element_labels():
    G = parse_group_descriptor("theta(3,1,1,3)")
    assert [G.element_label(g) for g in G.standard_generators()] == ["(1;0)", "(0;1)"]
    U = parse_group_descriptor("ut(4,3,1)")
    assert [U.element_label(g) for g in U.standard_generators()] == [
        "u(1,0,0,0,0,0)",
        "u(0,0,0,1,0,0)",
        "u(0,0,0,0,0,1)",
    ]


def test_ut_matrix_law():
    U = parse_group_descriptor("ut(4,3,1)")
    assert U.order == 729
    x, y, z = U.standard_generators()
    # adjacent transvections do not commute, the far pair does
    assert U.mul(x, z) == U.mul(z, x)
    assert U.mul(x, y) != U.mul(y, x)
    # [x, y] lands in the second superdiagonal
    c = U.comm(x, y)
    assert U.element_label(c) == "u(0,1,0,0,0,0)"
    assert U.element_order(x) == 3


def test_element_orders_exponent():
    G = parse_group_descriptor("theta(3,1,1,3)")
    assert max(G.element_order(g) for g in G.elements()) == 27


def test_conj_definition():
    G = parse_group_descriptor("theta(3,1,2,3)")
    rng = np.random.default_rng(5)
    codes = rng.integers(0, G.order, size=12)
    for a, g in zip(codes[:6], codes[6:]):
        a, g = int(a), int(g)
        # conj(a, g) = g a g^-1, comm(a, b) = a b a^-1 b^-1
        assert G.conj(a, g) == G.mul(G.mul(g, a), G.inv(g))
        assert G.comm(a, g) == G.mul(G.mul(a, g), G.inv(G.mul(g, a)))


def test_descriptor_errors():
    for bad in ("theta(4,1,1,2)", "theta(3,1,1)", "ut(4,3)", "dihedral(8)",
                "theta(3,0,1,2)", "ut(1,3,1)", ""):
        with pytest.raises(UsageError):
            parse_group_descriptor(bad)


def test_vec_ops_match_scalar_ops():
    G = parse_group_descriptor("theta(3,1,1,3)")
    rng = np.random.default_rng(11)
    a = rng.integers(0, G.order, size=64, dtype=np.int64)
    b = rng.integers(0, G.order, size=64, dtype=np.int64)
    prod = G.mul_vec(a, b)
    inv = G.inv_vec(a)
    for i in range(64):
        assert int(prod[i]) == G.mul(int(a[i]), int(b[i]))
        assert int(inv[i]) == G.inv(int(a[i]))


def _parity_case(desc: str, size: int, seed: int):
    rng = np.random.default_rng(seed)
    here = backend.get().NAME
    try:
        backend.force("pure")
        Gp = parse_group_descriptor(desc)
        a = rng.integers(0, Gp.order, size=size, dtype=np.int64)
        b = rng.integers(0, Gp.order, size=size, dtype=np.int64)
        pure = (Gp.mul_vec(a, b), Gp.inv_vec(a))
        backend.force("compiled")
        Gc = parse_group_descriptor(desc)
        comp = (Gc.mul_vec(a, b), Gc.inv_vec(a))
    finally:
        backend.force(here)
    assert np.array_equal(pure[0], comp[0])
    assert np.array_equal(pure[1], comp[1])


def test_kernel_parity():
    try:
        backend.force("compiled")
    except UsageError:
        pytest.skip("compiled kernel not built")
    finally:
        backend.force("auto")
    _parity_case("theta(3,1,2,3)", 512, 3)
    _parity_case("ut(4,3,1)", 512, 4)
