"""Brute-force norm enumeration for the ramified cube-root extension.

This is the slow, assumption-free cross check: enumerate norms of truncated
series from the extension field, bucket them by class coordinates, and compare
against the symbol computation.  Counts are frozen from a full enumeration.
"""

from prigid.fields.fq import field_make
from prigid.rigidity.oracle import norm_class_enumeration, norm_oracle_cross_check


def test_norm_class_enumeration():
    d = norm_class_enumeration(field_make(7, 1), 3)
    assert d["extension"] == "gf(7) laurent, s^3 = t"
    assert d["norms_enumerated"] == 6174
    # norms of units fill exactly the classes with trivial u*-coordinate
    assert d["classes"] == [(0, 0), (0, 1), (0, 2)]
    assert (1, 0) in d["absent_classes"]
    assert d["norm_of_s"] == [0, 1]
    assert d["uniformizer_class_generates"]
    assert d["leading_law_ok"]


def test_norm_oracle_cross_check():
    c = norm_oracle_cross_check(field_make(7, 1), 3)
    assert c["all_match"]
    assert len(c["checks"]) == 7  # one per element of F_7, zero excluded -> 6 units + t
    for chk in c["checks"]:
        assert chk["match"]
        assert chk["is_norm"] == (chk["symbol"] == 0)


def test_enumeration_depth_monotone():
    # deeper truncations cannot shrink the class set
    f7 = field_make(7, 1)
    shallow = norm_class_enumeration(f7, 3, depth=2)
    deep = norm_class_enumeration(f7, 3, depth=4)
    assert set(shallow["classes"]) <= set(deep["classes"])
    assert deep["norms_enumerated"] > shallow["norms_enumerated"]
