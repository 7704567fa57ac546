"""Tiny exact linear algebra over Z/ell (ell prime).

Matrices are lists of lists of ints; everything is reduced mod ell.  Sizes
here are small (a handful of basis vectors, field degrees up to a few
dozen), so plain Gaussian elimination is the right tool.
"""

from __future__ import annotations

from typing import Optional


def rref_mod(rows: list[list[int]], ell: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot column indices."""
    m = [[c % ell for c in row] for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, ell)
        m[r] = [x * inv % ell for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % ell for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace_mod(rows: list[list[int]], ell: int) -> list[list[int]]:
    """Basis of the right kernel, one vector per free column."""
    if not rows:
        return []
    ncols = len(rows[0])
    r, pivots = rref_mod(rows, ell)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-r[i][fc]) % ell
        basis.append(v)
    return basis


def solve_mod(rows: list[list[int]], rhs: list[int], ell: int) -> Optional[list[int]]:
    """One solution of A x = b, or None."""
    if not rows:
        return [] if not any(c % ell for c in rhs) else None
    ncols = len(rows[0])
    aug = [row + [b] for row, b in zip(rows, rhs)]
    r, pivots = rref_mod(aug, ell)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = r[i][ncols]
    return x


def rank_mod(rows: list[list[int]], ell: int) -> int:
    return len(rref_mod(rows, ell)[1])
