"""Degree-p radical extensions of a Laurent series field.

One extension per nontrivial class coordinate pattern; each record carries an
embedding and a root, re-checked here by exact arithmetic in the larger field.
"""

import pytest

from prigid.fields.fq import field_make
from prigid.fields.laurent import LaurentField
from prigid.rigidity.extensions import extend_by_pth_root, scalar_root_extension


@pytest.fixture()
def L():
    return LaurentField(field_make(7, 1), 64)


def test_unramified_extension(L):
    u = L.constant(L.fq.constant(3))
    ext = extend_by_pth_root(L, u, 3)
    assert ext.kind == "unramified"
    assert ext.data["coords"] == [1, 0]
    assert ext.data["constants"] == "gf(343)"
    assert ext.data["modulus"] == [2, 0, 0, 1]
    assert ext.ext.fq.deg == 3 and ext.ext.var == "t"
    assert ext.verify()
    # the root really cubes to the image of u
    assert ext.root ** 3 == ext.embed(u)


def test_ramified_uniformizer(L):
    ext = extend_by_pth_root(L, L.t(), 3)
    assert ext.kind == "ramified"
    assert ext.data["coords"] == [0, 1]
    assert ext.data["relation"] == "s^3 = t*u^1"
    assert ext.ext.var == "s" and ext.ext.prec == 3 * L.prec
    assert ext.root.to_literal() == "s^1*[1]"
    assert ext.verify()
    assert ext.root ** 3 == ext.embed(L.t())


def test_ramified_mixed_classes(L):
    u = L.constant(L.fq.constant(3))
    t = L.t()
    ext = extend_by_pth_root(L, u * t, 3)
    assert ext.kind == "ramified" and ext.data["coords"] == [1, 1]
    assert (ext.data["x"], ext.data["y"]) == (1, 0)
    assert ext.verify()

    ext = extend_by_pth_root(L, u * t * t, 3)
    assert ext.kind == "ramified" and ext.data["coords"] == [1, 2]
    assert (ext.data["x"], ext.data["y"]) == (2, -1)
    assert ext.data["relation"] == "s^3 = t*u^2"
    assert ext.verify()
    assert ext.root ** 3 == ext.embed(u * t * t)


def test_embed_is_homomorphism(L):
    ext = extend_by_pth_root(L, L.t(), 3)
    a = L.from_int_coeffs(-1, [2, 0, 5])
    b = L.from_int_coeffs(1, [3, 1])
    assert ext.embed(a * b) == ext.embed(a) * ext.embed(b)
    assert ext.embed(a + b) == ext.embed(a) + ext.embed(b)


def test_trivial_class_degenerates(L):
    for a in (L.one(), L.t() ** 3):
        ext = extend_by_pth_root(L, a, 3)
        assert ext.kind == "trivial" and ext.data["coords"] == [0, 0]


def test_scalar_root_extension():
    f7 = field_make(7, 1)
    d = scalar_root_extension(f7, f7.constant(3), 3)
    assert d["kind"] == "unramified"
    assert d["constants"] == "gf(343)"
    assert d["modulus"] == [2, 0, 0, 1]
