"""Pure numpy batch kernels for the group models.

Every function maps int64 code arrays to an int64 code array of the same
length.  The compiled extension (_ckern) exposes the same five entry points;
backend.py picks one at import time and the test suite checks they agree.
"""

from __future__ import annotations

import numpy as np

NAME = "pure"


def theta_mul(a: np.ndarray, b: np.ndarray, pm: int, nI: int, theta_pows: np.ndarray) -> np.ndarray:
    mod = pm**nI
    s1, r1 = a // mod, a % mod
    s2, r2 = b // mod, b % mod
    th = theta_pows[s1]
    out = ((s1 + s2) % pm) * mod
    base = 1
    for _ in range(nI):
        v1 = (r1 // base) % pm
        v2 = (r2 // base) % pm
        out = out + ((v1 + th * v2) % pm) * base
        base *= pm
    return out


def theta_inv(a: np.ndarray, pm: int, nI: int, theta_pows: np.ndarray) -> np.ndarray:
    mod = pm**nI
    s, r = a // mod, a % mod
    th = theta_pows[(-s) % pm]
    out = ((-s) % pm) * mod
    base = 1
    for _ in range(nI):
        v = (r // base) % pm
        out = out + ((-th * v) % pm) * base
        base *= pm
    return out


def _ut_decode(a: np.ndarray, n: int, pe: int) -> np.ndarray:
    mats = np.zeros((len(a), n, n), dtype=np.int64)
    idx = np.arange(n)
    mats[:, idx, idx] = 1
    code = a.copy()
    for i in range(n):
        for j in range(i + 1, n):
            mats[:, i, j] = code % pe
            code //= pe
    return mats


def _ut_encode(mats: np.ndarray, n: int, pe: int) -> np.ndarray:
    out = np.zeros(mats.shape[0], dtype=np.int64)
    base = 1
    for i in range(n):
        for j in range(i + 1, n):
            out += (mats[:, i, j] % pe) * base
            base *= pe
    return out


def ut_mul(a: np.ndarray, b: np.ndarray, n: int, pe: int) -> np.ndarray:
    ma = _ut_decode(a, n, pe)
    mb = _ut_decode(b, n, pe)
    return _ut_encode(np.matmul(ma, mb) % pe, n, pe)


def ut_inv(a: np.ndarray, n: int, pe: int) -> np.ndarray:
    mats = _ut_decode(a, n, pe)
    eye = np.zeros_like(mats)
    idx = np.arange(n)
    eye[:, idx, idx] = 1
    nil = mats - eye
    acc = eye.copy()
    term = eye.copy()
    for _ in range(n - 1):
        term = (-np.matmul(term, nil)) % pe
        acc = (acc + term) % pe
    return _ut_encode(acc, n, pe)


def table_mul(a: np.ndarray, b: np.ndarray, flat_table: np.ndarray, order: int) -> np.ndarray:
    return flat_table[a * order + b]
