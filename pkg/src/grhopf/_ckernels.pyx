# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``; same signatures."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef long long _inv_mod(long long a, long long p):
    cdef long long result = 1, base = a % p, e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rref_mod_p(rows, Py_ssize_t ncols, long long p):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return [], []
    arr = np.asarray(rows, dtype=np.int64).reshape(nrows, ncols) % p
    cdef long long[:, ::1] w = np.ascontiguousarray(arr)
    cdef Py_ssize_t r = 0, col, i, j, pivot
    cdef long long inv, f, tmp
    pivots = []
    for col in range(ncols):
        if r == nrows:
            break
        pivot = -1
        for i in range(r, nrows):
            if w[i, col] != 0:
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
            for j in range(col, ncols):
                tmp = w[r, j]
                w[r, j] = w[pivot, j]
                w[pivot, j] = tmp
        inv = _inv_mod(w[r, col], p)
        if inv != 1:
            for j in range(col, ncols):
                w[r, j] = w[r, j] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            f = w[i, col]
            if f != 0:
                for j in range(col, ncols):
                    if w[r, j] != 0:
                        w[i, j] = (w[i, j] - f * w[r, j]) % p
                        if w[i, j] < 0:
                            w[i, j] += p
        pivots.append(col)
        r += 1
    out = np.asarray(w)[:r].tolist()
    return out, pivots


def sparse_mul_mod_p(list u, list v, list table, long long p):
    cdef Py_ssize_t n = len(u), i, j, idx, k
    cdef long long a, b, c, t
    cdef list out_py
    cdef list row
    cdef tuple cell
    out = np.zeros(n, dtype=np.int64)
    cdef long long[::1] o = out
    nz_j = [j for j in range(len(v)) if v[j]]
    if not nz_j:
        return [0] * n
    for i in range(n):
        a = u[i]
        if a == 0:
            continue
        row = table[i]
        for j in nz_j:
            b = v[j]
            c = a * b % p
            cell = row[j]
            for idx in range(len(cell)):
                k, t = cell[idx]
                o[k] = (o[k] + c * t) % p
    out_py = out.tolist()
    return out_py
