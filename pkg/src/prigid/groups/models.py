"""Concrete finite p-group models with integer-coded elements.

Three families cover everything the verdicts need:

* theta(p, k, nI, m): the semidirect product (Z/p^m)^nI  x| Z/p^m where the
  distinguished generator acts as multiplication by 1 + p^k.  k = "inf"
  makes the action trivial (the abelian degenerate case).
* ut(n, p, e): upper unitriangular n x n matrices over Z/p^e.
* table:<path>: an explicit multiplication table from a JSON file, for
  ad-hoc counterexample hunting.

Every element is a code in range(order); code 0 is the identity.  Scalar
mul/inv here are the pure reference semantics; batch operations dispatch
to the selected kernel backend (see backend.py) and are tested against
the scalar path.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from ..errors import OutOfScopeError, UsageError, VerificationError
from ..fields.fq import is_prime
from . import backend as _backend


def _check_p(p: int) -> None:
    if not is_prime(p):
        raise UsageError(f"p={p} is not prime")
    if p == 2:
        raise OutOfScopeError("p=2 is outside scope; the criteria here need p odd")


class GroupModel:
    """Shared scaffolding; subclasses fix mul/inv and the batch kernels."""

    p: int
    order: int
    descriptor: str

    identity = 0

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def inv_vec(self, a: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def element_label(self, code: int) -> str:
        raise NotImplementedError

    def elements(self) -> Iterable[int]:
        return range(self.order)

    def pow_vec(self, codes: np.ndarray, e: int) -> np.ndarray:
        """codes**e elementwise, square and multiply via the batch kernel."""
        codes = np.ascontiguousarray(codes, dtype=np.int64)
        if e < 0:
            return self.pow_vec(self.inv_vec(codes), -e)
        out = np.zeros_like(codes)
        acc = codes.copy()
        while e:
            if e & 1:
                out = self.mul_vec(out, acc)
            e >>= 1
            if e:
                acc = self.mul_vec(acc, acc)
        return out

    def pow(self, a: int, e: int) -> int:
        return int(self.pow_vec(np.array([a], dtype=np.int64), e)[0])

    def conj(self, a: int, g: int) -> int:
        """g a g^-1."""
        return self.mul(self.mul(g, a), self.inv(g))

    def conj_vec(self, a: np.ndarray, g: np.ndarray) -> np.ndarray:
        return self.mul_vec(self.mul_vec(g, a), self.inv_vec(g))

    def comm(self, a: int, b: int) -> int:
        """[a, b] = a b a^-1 b^-1."""
        return self.mul(self.mul(a, b), self.inv(self.mul(b, a)))

    def comm_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.mul_vec(self.mul_vec(a, b), self.inv_vec(self.mul_vec(b, a)))

    def element_order(self, a: int) -> int:
        n = 1
        x = a
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
            if n > self.order:
                raise VerificationError("element order exceeds group order")
        return n

    def validate(self, samples: int = 1000) -> None:
        """Deterministic sanity sweep: identity, inverses, associativity."""
        rng = random.Random(0xC0DE ^ self.order)
        small = self.order <= 64
        pool = list(range(self.order)) if small else [
            rng.randrange(self.order) for _ in range(samples)
        ]
        for a in pool:
            if self.mul(a, self.identity) != a or self.mul(self.identity, a) != a:
                raise VerificationError(f"identity fails at {a}")
            ia = self.inv(a)
            if self.mul(a, ia) != self.identity or self.mul(ia, a) != self.identity:
                raise VerificationError(f"inverse fails at {a}")
        for _ in range(samples):
            a = rng.randrange(self.order)
            b = rng.randrange(self.order)
            c = rng.randrange(self.order)
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise VerificationError(f"associativity fails at ({a},{b},{c})")
        n = self.order
        while n % self.p == 0:
            n //= self.p
        if n != 1:
            raise VerificationError(f"order {self.order} is not a power of p={self.p}")


@dataclass(frozen=True)
class ThetaSpec:
    p: int
    k: Optional[int]  # None encodes "inf" (trivial action)
    nI: int
    m: int


class ThetaModel(GroupModel):
    """(s, v) with s in Z/p^m, v in (Z/p^m)^nI and (s,v)(t,w) = (s+t, v + theta^s w).

    theta = 1 + p^k; conjugation sends each module generator rho to rho^theta,
    so [sigma, rho] = rho^(p^k).  Code layout: low nI base-p^m digits hold v,
    the top digit holds s.
    """

    def __init__(self, spec: ThetaSpec):
        _check_p(spec.p)
        if spec.m < 1 or spec.nI < 1:
            raise UsageError("theta model needs m >= 1 and nI >= 1")
        if spec.k is not None and spec.k < 1:
            raise UsageError("theta model needs k >= 1 or k = inf")
        self.spec = spec
        self.p = spec.p
        self.pm = spec.p**spec.m
        self.nI = spec.nI
        self.order = self.pm ** (spec.nI + 1)
        theta = 1 if spec.k is None else (1 + spec.p**spec.k) % self.pm
        pows = [1] * self.pm
        for i in range(1, self.pm):
            pows[i] = pows[i - 1] * theta % self.pm
        self.theta = theta
        self.theta_pows = np.array(pows, dtype=np.int64)
        k_str = "inf" if spec.k is None else str(spec.k)
        self.descriptor = f"theta({spec.p},{k_str},{spec.nI},{spec.m})"
        self._kern = _backend.get()

    def decode(self, code: int) -> tuple[int, tuple[int, ...]]:
        v = []
        for _ in range(self.nI):
            v.append(code % self.pm)
            code //= self.pm
        return code, tuple(v)

    def encode(self, s: int, v: Iterable[int]) -> int:
        code = s % self.pm
        for vi in reversed(list(v)):
            code = code * self.pm + vi % self.pm
        return code

    def mul(self, a: int, b: int) -> int:
        s1, v1 = self.decode(a)
        s2, v2 = self.decode(b)
        th = int(self.theta_pows[s1])
        return self.encode(s1 + s2, [x + th * y for x, y in zip(v1, v2)])

    def inv(self, a: int) -> int:
        s, v = self.decode(a)
        th = int(self.theta_pows[(-s) % self.pm])
        return self.encode(-s, [-th * x for x in v])

    def mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self._kern.theta_mul(
            np.ascontiguousarray(a, np.int64), np.ascontiguousarray(b, np.int64), self.pm, self.nI, self.theta_pows
        )

    def inv_vec(self, a: np.ndarray) -> np.ndarray:
        return self._kern.theta_inv(np.ascontiguousarray(a, np.int64), self.pm, self.nI, self.theta_pows)

    def element_label(self, code: int) -> str:
        s, v = self.decode(code)
        return f"({s};{','.join(str(x) for x in v)})"

    def sigma(self) -> int:
        return self.encode(1, [0] * self.nI)

    def rho(self, i: int = 0) -> int:
        v = [0] * self.nI
        v[i] = 1
        return self.encode(0, v)

    def standard_generators(self) -> tuple[int, ...]:
        return (self.sigma(),) + tuple(self.rho(i) for i in range(self.nI))


@dataclass(frozen=True)
class UtSpec:
    n: int
    p: int
    e: int


class UtModel(GroupModel):
    """Upper unitriangular n x n matrices over Z/p^e.

    Strictly upper entries are coded row-major as base-p^e digits, the (0,1)
    entry lowest.
    """

    def __init__(self, spec: UtSpec):
        _check_p(spec.p)
        if spec.n < 2 or spec.e < 1:
            raise UsageError("ut model needs n >= 2 and e >= 1")
        if spec.n > 8:
            raise UsageError("ut model caps n at 8")
        self.spec = spec
        self.p = spec.p
        self.n = spec.n
        self.pe = spec.p**spec.e
        self.positions = [(i, j) for i in range(spec.n) for j in range(i + 1, spec.n)]
        self.order = self.pe ** len(self.positions)
        self.descriptor = f"ut({spec.n},{spec.p},{spec.e})"
        self._kern = _backend.get()

    def decode(self, code: int) -> list[list[int]]:
        mat = [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        for i, j in self.positions:
            mat[i][j] = code % self.pe
            code //= self.pe
        return mat

    def encode(self, mat: list[list[int]]) -> int:
        code = 0
        for i, j in reversed(self.positions):
            code = code * self.pe + mat[i][j] % self.pe
        return code

    def elementary(self, i: int, j: int, a: int = 1) -> int:
        """The transvection with entry a at (i, j), zero-based, i < j."""
        if not (0 <= i < j < self.n):
            raise UsageError("elementary position needs 0 <= i < j < n")
        mat = self.decode(0)
        mat[i][j] = a % self.pe
        return self.encode(mat)

    def standard_generators(self) -> tuple[int, ...]:
        return tuple(self.elementary(i, i + 1) for i in range(self.n - 1))

    def mul(self, a: int, b: int) -> int:
        ma, mb = self.decode(a), self.decode(b)
        n = self.n
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            for k in range(i, n):
                aik = ma[i][k]
                if aik:
                    row = mb[k]
                    for j in range(k, n):
                        out[i][j] = (out[i][j] + aik * row[j]) % self.pe
        return self.encode(out)

    def inv(self, a: int) -> int:
        # (I + N)^-1 = I - N + N^2 - ...; N strictly upper so the series stops
        mat = self.decode(a)
        n = self.n
        nil = [[mat[i][j] if i < j else 0 for j in range(n)] for i in range(n)]
        acc = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        term = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for _ in range(n - 1):
            nxt = [[0] * n for _ in range(n)]
            for i in range(n):
                for k in range(n):
                    tik = term[i][k]
                    if tik:
                        for j in range(n):
                            nxt[i][j] = (nxt[i][j] - tik * nil[k][j]) % self.pe
            term = nxt
            for i in range(n):
                for j in range(n):
                    acc[i][j] = (acc[i][j] + term[i][j]) % self.pe
        return self.encode(acc)

    def mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self._kern.ut_mul(np.ascontiguousarray(a, np.int64), np.ascontiguousarray(b, np.int64), self.n, self.pe)

    def inv_vec(self, a: np.ndarray) -> np.ndarray:
        return self._kern.ut_inv(np.ascontiguousarray(a, np.int64), self.n, self.pe)

    def element_label(self, code: int) -> str:
        mat = self.decode(code)
        entries = ",".join(str(mat[i][j]) for i, j in self.positions)
        return f"u({entries})"


class SemidirectModel(GroupModel):
    """(s, v) in Z/ms x Z/mv with (s,v)(t,w) = (s+t, v + theta^s w).

    Unlike the theta family the two cyclic factors may have different
    orders, which is what an actual radical-tower Galois group looks like:
    the constant-field part is usually shorter than the Kummer part.
    Needs theta^ms = 1 mod mv so the action factors through Z/ms.  These
    groups stay small, so the batch operations just loop over the scalar
    law.
    """

    def __init__(self, p: int, ms: int, mv: int, theta: int, label: Optional[str] = None):
        _check_p(p)
        if ms < 1 or mv < 1:
            raise UsageError("semidirect model needs positive cyclic orders")
        if pow(theta, ms, mv) != 1 % mv:
            raise UsageError("action must have order dividing the acting cycle")
        self.p = p
        self.ms = ms
        self.mv = mv
        self.theta = theta % mv
        self.order = ms * mv
        self.descriptor = label or f"semidirect({p},{ms},{mv},{theta})"
        pows = [1 % mv] * ms
        for i in range(1, ms):
            pows[i] = pows[i - 1] * self.theta % mv
        self._pows = pows

    def decode(self, code: int) -> tuple[int, int]:
        return code // self.mv, code % self.mv

    def encode(self, s: int, v: int) -> int:
        return (s % self.ms) * self.mv + (v % self.mv)

    def mul(self, a: int, b: int) -> int:
        s1, v1 = self.decode(a)
        s2, v2 = self.decode(b)
        return self.encode(s1 + s2, v1 + self._pows[s1] * v2)

    def inv(self, a: int) -> int:
        s, v = self.decode(a)
        th = self._pows[(-s) % self.ms]
        return self.encode(-s, -th * v)

    def mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.array([self.mul(int(x), int(y)) for x, y in zip(a, b)], dtype=np.int64)

    def inv_vec(self, a: np.ndarray) -> np.ndarray:
        return np.array([self.inv(int(x)) for x in a], dtype=np.int64)

    def element_label(self, code: int) -> str:
        s, v = self.decode(code)
        return f"({s};{v})"

    def sigma(self) -> int:
        return self.encode(1, 0)

    def tau(self) -> int:
        return self.encode(0, 1)

    def standard_generators(self) -> tuple[int, ...]:
        return (self.sigma(), self.tau())


class TableModel(GroupModel):
    """Explicit multiplication table, loaded from JSON.

    Expected shape: {"p": int, "table": [[int]]}, optional "labels".
    Row and column 0 must realize the identity.
    """

    def __init__(self, p: int, table: list[list[int]], labels: Optional[list[str]] = None,
                 source: str = "table:<inline>"):
        _check_p(p)
        order = len(table)
        if order == 0 or any(len(row) != order for row in table):
            raise UsageError("table must be square and nonempty")
        for row in table:
            for x in row:
                if not isinstance(x, int) or not (0 <= x < order):
                    raise UsageError("table entries must be codes in range(order)")
        self.p = p
        self.order = order
        self.table = table
        self.labels = labels
        self.descriptor = source
        self._flat = np.array(table, dtype=np.int64).reshape(-1)
        inv = [-1] * order
        for a in range(order):
            if table[0][a] != a or table[a][0] != a:
                raise UsageError("code 0 must be the identity")
            for b in range(order):
                if table[a][b] == 0:
                    inv[a] = b
            if inv[a] < 0:
                raise UsageError(f"element {a} has no inverse")
        self._inv = np.array(inv, dtype=np.int64)
        self._kern = _backend.get()

    @classmethod
    def load(cls, path: str) -> "TableModel":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot load table model from {path}: {exc}") from exc
        if not isinstance(data, dict) or "p" not in data or "table" not in data:
            raise UsageError(f"{path}: expected keys 'p' and 'table'")
        return cls(data["p"], data["table"], data.get("labels"), source=f"table:{path}")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return int(self._inv[a])

    def mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self._kern.table_mul(
            np.ascontiguousarray(a, np.int64), np.ascontiguousarray(b, np.int64), self._flat, self.order
        )

    def inv_vec(self, a: np.ndarray) -> np.ndarray:
        return self._inv[np.ascontiguousarray(a, np.int64)]

    def element_label(self, code: int) -> str:
        if self.labels:
            return self.labels[code]
        return str(code)

    def validate(self, samples: int = 1000) -> None:
        if self.order <= 512:
            # exhaustive associativity, chunked over the first operand
            t = self._flat.reshape(self.order, self.order)
            for a in range(self.order):
                left = t[t[a, :], :]
                right = t[a, t]
                if not np.array_equal(left, right):
                    raise VerificationError(f"associativity fails in row {a}")
            n = self.order
            while n % self.p == 0:
                n //= self.p
            if n != 1:
                raise VerificationError(f"order {self.order} is not a power of p={self.p}")
            return
        super().validate(samples)


_THETA_RE = re.compile(r"^theta\((\d+),(\d+|inf),(\d+),(\d+)\)$")
_UT_RE = re.compile(r"^ut\((\d+),(\d+),(\d+)\)$")


def parse_group_descriptor(desc: str) -> GroupModel:
    desc = desc.strip()
    m = _THETA_RE.match(desc)
    if m:
        k = None if m.group(2) == "inf" else int(m.group(2))
        return ThetaModel(ThetaSpec(int(m.group(1)), k, int(m.group(3)), int(m.group(4))))
    m = _UT_RE.match(desc)
    if m:
        return UtModel(UtSpec(int(m.group(1)), int(m.group(2)), int(m.group(3))))
    if desc.startswith("table:"):
        return TableModel.load(desc[len("table:"):])
    raise UsageError(
        f"unrecognized group descriptor {desc!r}; expected theta(p,k,nI,m), "
        "ut(n,p,e), or table:<path>"
    )
