"""Linear algebra mod ell: rank, nullspace, and solving small systems."""

from hypothesis import given, strategies as st

from prigid.fields.linalg import nullspace_mod, rank_mod, rref_mod, solve_mod


def test_rank_anchors():
    assert rank_mod([[0, 1], [2, 0]], 3) == 2
    assert rank_mod([[1, 2], [2, 4]], 7) == 1
    assert rank_mod([[0, 0], [0, 0]], 5) == 0


def test_nullspace_dimension():
    ker = nullspace_mod([[1, 2], [2, 4]], 7)
    assert len(ker) == 1
    v = ker[0]
    assert (v[0] + 2 * v[1]) % 7 == 0


def test_solve_roundtrip():
    rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    rhs = [2, 3, 4]
    x = solve_mod(rows, rhs, 7)
    assert x is not None
    for row, b in zip(rows, rhs):
        assert sum(r * xi for r, xi in zip(row, x)) % 7 == b % 7


def test_solve_reports_inconsistency():
    assert solve_mod([[1, 1], [2, 2]], [1, 3], 5) is None


def test_rref_idempotent():
    rows = [[2, 4, 1], [1, 0, 3], [0, 1, 1]]
    red, pivots = rref_mod(rows, 5)
    red2, pivots2 = rref_mod(red, 5)
    assert red == red2 and pivots == pivots2


@given(st.lists(st.lists(st.integers(0, 6), min_size=3, max_size=3),
                min_size=1, max_size=4))
def test_nullspace_vectors_annihilate(rows):
    for v in nullspace_mod(rows, 7):
        assert any(c % 7 for c in v)
        for row in rows:
            assert sum(r * c for r, c in zip(row, v)) % 7 == 0


@given(st.lists(st.lists(st.integers(0, 6), min_size=3, max_size=3),
                min_size=1, max_size=4))
def test_rank_nullity(rows):
    assert rank_mod(rows, 7) + len(nullspace_mod(rows, 7)) == 3
