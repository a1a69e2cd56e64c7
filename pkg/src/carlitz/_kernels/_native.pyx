# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pure``; same signatures and results."""

import numpy as np
cimport numpy as cnp

ctypedef long long i64


def rref_modp(rows, Py_ssize_t ncols, i64 p):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return [], []
    arr = np.asarray(rows, dtype=np.int64).reshape(nrows, ncols) % p
    cdef i64[:, ::1] m = np.ascontiguousarray(arr)
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 inv, f, tmp
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = tmp
        inv = _inv_mod(m[r, c], p)
        if inv != 1:
            for j in range(c, ncols):
                m[r, j] = m[r, j] * inv % p
        for i in range(nrows):
            if i != r:
                f = m[i, c]
                if f != 0:
                    f = p - f
                    for j in range(c, ncols):
                        if m[r, j] != 0:
                            m[i, j] = (m[i, j] + f * m[r, j]) % p
        pivots.append(c)
        r += 1
    return np.asarray(m[:r]).tolist(), pivots


cdef i64 _inv_mod(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, rr = p, newr = a % p, q, tmp
    while newr != 0:
        q = rr // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = rr - q * newr
        rr = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_table(rows, Py_ssize_t ncols, add, mul, neg, inv):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return [], []
    cdef i64[:, ::1] m = np.ascontiguousarray(np.asarray(rows, dtype=np.int64).reshape(nrows, ncols))
    cdef i64[:, ::1] A = np.ascontiguousarray(np.asarray(add, dtype=np.int64))
    cdef i64[:, ::1] M = np.ascontiguousarray(np.asarray(mul, dtype=np.int64))
    cdef i64[::1] N = np.ascontiguousarray(np.asarray(neg, dtype=np.int64))
    cdef i64[::1] I = np.ascontiguousarray(np.asarray([0 if v is None else v for v in inv], dtype=np.int64))
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef i64 s, f, tmp
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = tmp
        s = I[m[r, c]]
        if s != 1:
            for j in range(c, ncols):
                m[r, j] = M[s, m[r, j]]
        for i in range(nrows):
            if i != r:
                f = m[i, c]
                if f != 0:
                    f = N[f]
                    for j in range(c, ncols):
                        if m[r, j] != 0:
                            m[i, j] = A[m[i, j], M[f, m[r, j]]]
        pivots.append(c)
        r += 1
    return np.asarray(m[:r]).tolist(), pivots


def conv_modp(a, b, i64 p):
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef i64[::1] x = np.asarray(a, dtype=np.int64)
    cdef i64[::1] y = np.asarray(b, dtype=np.int64)
    out_arr = np.zeros(la + lb - 1, dtype=np.int64)
    cdef i64[::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef i64 xi
    # reduce periodically so the accumulator never overflows
    cdef i64 bound = (<i64>1 << 62) // ((p - 1) * (p - 1) + 1)
    cdef i64 count = 0
    for i in range(la):
        xi = x[i]
        if xi == 0:
            continue
        for j in range(lb):
            out[i + j] += xi * y[j]
        count += 1
        if count >= bound:
            for j in range(la + lb - 1):
                out[j] %= p
            count = 0
    for j in range(la + lb - 1):
        out[j] %= p
    return out_arr.tolist()
