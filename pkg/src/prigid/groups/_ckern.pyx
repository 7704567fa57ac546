# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled batch kernels; same contract as pykern.py.

Plain typed memoryviews only, so no numpy headers are needed at build time.
cdivision stays off: Python floor/mod semantics must match the pure kernel
on negative intermediates.
"""

import numpy as np

NAME = "compiled"

ctypedef long long i64


def theta_mul(a_in, b_in, long long pm, long long nI, pows_in):
    cdef i64[:] a = a_in
    cdef i64[:] b = b_in
    cdef i64[:] pows = pows_in
    cdef Py_ssize_t size = a.shape[0], idx
    cdef i64 mod = 1
    cdef long long i
    for i in range(nI):
        mod *= pm
    out_arr = np.empty(size, dtype=np.int64)
    cdef i64[:] out = out_arr
    cdef i64 s1, s2, r1, r2, th, acc, base, v1, v2
    for idx in range(size):
        s1 = a[idx] // mod
        r1 = a[idx] % mod
        s2 = b[idx] // mod
        r2 = b[idx] % mod
        th = pows[s1]
        acc = ((s1 + s2) % pm) * mod
        base = 1
        for i in range(nI):
            v1 = (r1 // base) % pm
            v2 = (r2 // base) % pm
            acc += ((v1 + th * v2) % pm) * base
            base *= pm
        out[idx] = acc
    return out_arr


def theta_inv(a_in, long long pm, long long nI, pows_in):
    cdef i64[:] a = a_in
    cdef i64[:] pows = pows_in
    cdef Py_ssize_t size = a.shape[0], idx
    cdef i64 mod = 1
    cdef long long i
    for i in range(nI):
        mod *= pm
    out_arr = np.empty(size, dtype=np.int64)
    cdef i64[:] out = out_arr
    cdef i64 s, r, th, acc, base, v
    for idx in range(size):
        s = a[idx] // mod
        r = a[idx] % mod
        th = pows[(-s) % pm]
        acc = ((-s) % pm) * mod
        base = 1
        for i in range(nI):
            v = (r // base) % pm
            acc += ((-th * v) % pm) * base
            base *= pm
        out[idx] = acc
    return out_arr


def ut_mul(a_in, b_in, long long n, long long pe):
    cdef i64[:] a = a_in
    cdef i64[:] b = b_in
    cdef Py_ssize_t size = a.shape[0], idx
    cdef i64 ma[64]
    cdef i64 mb[64]
    cdef i64 mc[64]
    cdef long long i, j, k, code
    cdef i64 acc, base
    if n > 8:
        raise ValueError("compiled ut kernel caps n at 8")
    out_arr = np.empty(size, dtype=np.int64)
    cdef i64[:] out = out_arr
    for idx in range(size):
        _ut_decode_one(a[idx], n, pe, ma)
        _ut_decode_one(b[idx], n, pe, mb)
        for i in range(n):
            for j in range(n):
                acc = 0
                for k in range(i, j + 1):
                    acc += ma[i * n + k] * mb[k * n + j]
                mc[i * n + j] = acc % pe
        out[idx] = _ut_encode_one(n, pe, mc)
    return out_arr


def ut_inv(a_in, long long n, long long pe):
    cdef i64[:] a = a_in
    cdef Py_ssize_t size = a.shape[0], idx
    cdef i64 mat[64]
    cdef i64 nil[64]
    cdef i64 term[64]
    cdef i64 nxt[64]
    cdef i64 acc[64]
    cdef long long i, j, k, step
    cdef i64 s
    if n > 8:
        raise ValueError("compiled ut kernel caps n at 8")
    out_arr = np.empty(size, dtype=np.int64)
    cdef i64[:] out = out_arr
    for idx in range(size):
        _ut_decode_one(a[idx], n, pe, mat)
        for i in range(n):
            for j in range(n):
                nil[i * n + j] = mat[i * n + j] if i < j else 0
                term[i * n + j] = 1 if i == j else 0
                acc[i * n + j] = 1 if i == j else 0
        for step in range(n - 1):
            for i in range(n):
                for j in range(n):
                    s = 0
                    for k in range(n):
                        s -= term[i * n + k] * nil[k * n + j]
                    nxt[i * n + j] = s % pe
            for i in range(n * n):
                term[i] = nxt[i]
                acc[i] = (acc[i] + term[i]) % pe
        out[idx] = _ut_encode_one(n, pe, acc)
    return out_arr


cdef inline void _ut_decode_one(i64 code, long long n, long long pe, i64 *mat):
    cdef long long i, j
    for i in range(n):
        for j in range(n):
            mat[i * n + j] = 1 if i == j else 0
    for i in range(n):
        for j in range(i + 1, n):
            mat[i * n + j] = code % pe
            code //= pe


cdef inline i64 _ut_encode_one(long long n, long long pe, i64 *mat):
    cdef i64 code = 0, base = 1
    cdef long long i, j
    for i in range(n):
        for j in range(i + 1, n):
            code += (mat[i * n + j] % pe) * base
            base *= pe
    return code


def table_mul(a_in, b_in, flat_in, long long order):
    cdef i64[:] a = a_in
    cdef i64[:] b = b_in
    cdef i64[:] flat = flat_in
    cdef Py_ssize_t size = a.shape[0], idx
    out_arr = np.empty(size, dtype=np.int64)
    cdef i64[:] out = out_arr
    for idx in range(size):
        out[idx] = flat[a[idx] * order + b[idx]]
    return out_arr
