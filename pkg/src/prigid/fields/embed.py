"""Embeddings between canonical finite fields.

An embedding F_{ell^f} -> F_{ell^g} (f | g) is pinned down by the image of
the source generator, chosen as the smallest-encoding root of the source
modulus in the target.  The embedding can be applied forward exactly and
inverted on its image by solving a small linear system over F_ell.
"""

from __future__ import annotations

import threading
from typing import Optional

from ..errors import UsageError
from . import poly
from .fq import FqField, Value
from .linalg import solve_mod


class FieldEmbedding:
    def __init__(self, src: FqField, dst: FqField, gen_image: Value):
        self.src = src
        self.dst = dst
        self.gen_image = gen_image
        self._solve_rows: Optional[list[list[int]]] = None

    def apply(self, x: Value) -> Value:
        """Image of x, evaluating its coefficient polynomial at gen_image."""
        coeffs = [x] if self.src.deg == 1 else list(x)
        acc = self.dst.zero
        for c in reversed(coeffs):
            acc = self.dst.add(self.dst.mul(acc, self.gen_image), self.dst.constant(c))
        return acc

    def _rows(self) -> list[list[int]]:
        if self._solve_rows is None:
            cols = []
            g = self.dst.one
            for _ in range(self.src.deg):
                vec = [g] if self.dst.deg == 1 else list(g)
                cols.append(list(vec))
                g = self.dst.mul(g, self.gen_image)
            # transpose: one row per target coordinate
            self._solve_rows = [
                [cols[j][i] for j in range(self.src.deg)] for i in range(self.dst.deg)
            ]
        return self._solve_rows

    def preimage(self, y: Value) -> Optional[Value]:
        """The source element mapping to y, or None when y is outside the image."""
        rhs = [y] if self.dst.deg == 1 else list(y)
        sol = solve_mod(self._rows(), list(rhs), self.src.ell)
        if sol is None:
            return None
        x = sol[0] if self.src.deg == 1 else tuple(sol)
        if self.apply(x) != y:
            return None
        return x

    def __repr__(self) -> str:
        return f"FieldEmbedding({self.src!r} -> {self.dst!r})"


_EMBED_CACHE: dict[tuple[int, int, int], FieldEmbedding] = {}
_EMBED_LOCK = threading.Lock()


def embed_field(src: FqField, dst: FqField, seed: int = 0) -> FieldEmbedding:
    """Canonical embedding: smallest-encoding root of the source modulus."""
    if src.ell != dst.ell:
        raise UsageError("embeddings require equal characteristic")
    if dst.deg % src.deg:
        raise UsageError(
            f"no embedding F_{src.q} -> F_{dst.q}: {src.deg} does not divide {dst.deg}"
        )
    key = (src.ell, src.deg, dst.deg)
    with _EMBED_LOCK:
        cached = _EMBED_CACHE.get(key)
    if cached is not None:
        return cached
    if src.deg == 1:
        emb = FieldEmbedding(src, dst, dst.zero)
    else:
        mod_coeffs = poly.pfrom_int_coeffs(dst, list(src.modulus))
        roots = poly.find_roots(dst, mod_coeffs, seed)
        if not roots:
            raise UsageError("source modulus has no root in target field")
        emb = FieldEmbedding(src, dst, roots[0])
    with _EMBED_LOCK:
        _EMBED_CACHE.setdefault(key, emb)
        return _EMBED_CACHE[key]
