# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled column reduction over GF(p).

Same contract as ``ripsnerve._reduce_py.reduce_lows``.
"""

from libcpp.vector cimport vector
from libc.stdint cimport int64_t

import numpy as np


cdef int64_t _inv(int64_t a, int64_t p):
    # Fermat inverse, p prime
    cdef int64_t result = 1, base = a % p, e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


cdef void _axpy(vector[int64_t]& rows, vector[int64_t]& vals,
                const vector[int64_t]& orows, const vector[int64_t]& ovals,
                int64_t factor, int64_t p,
                vector[int64_t]& out_rows, vector[int64_t]& out_vals):
    # out = (rows, vals) - factor * (orows, ovals), both sorted by row
    cdef size_t i = 0, k = 0
    cdef size_t n = rows.size(), m = orows.size()
    cdef int64_t v
    out_rows.clear()
    out_vals.clear()
    while i < n or k < m:
        if k >= m or (i < n and rows[i] < orows[k]):
            out_rows.push_back(rows[i])
            out_vals.push_back(vals[i])
            i += 1
        elif i >= n or orows[k] < rows[i]:
            v = (p - factor * ovals[k] % p) % p
            if v:
                out_rows.push_back(orows[k])
                out_vals.push_back(v)
            k += 1
        else:
            v = (vals[i] - factor * ovals[k] % p) % p
            if v < 0:
                v += p
            if v:
                out_rows.push_back(rows[i])
                out_vals.push_back(v)
            i += 1
            k += 1


cdef void _xor(vector[int64_t]& rows, const vector[int64_t]& orows, vector[int64_t]& out_rows):
    cdef size_t i = 0, k = 0
    cdef size_t n = rows.size(), m = orows.size()
    out_rows.clear()
    while i < n or k < m:
        if k >= m or (i < n and rows[i] < orows[k]):
            out_rows.push_back(rows[i])
            i += 1
        elif i >= n or orows[k] < rows[i]:
            out_rows.push_back(orows[k])
            k += 1
        else:
            i += 1
            k += 1


def reduce_lows(indptr, indices, data, Py_ssize_t n_rows, int64_t p):
    """Left-to-right reduction; returns the pivot row of each column or -1."""
    cdef int64_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef int64_t[::1] ix = np.ascontiguousarray(indices, dtype=np.int64)
    cdef int64_t[::1] dv = np.ascontiguousarray(data, dtype=np.int64) if len(data) else np.zeros(1, dtype=np.int64)
    cdef Py_ssize_t n_cols = ip.shape[0] - 1
    cdef vector[int64_t] pivot_of_row = vector[int64_t](n_rows, -1)
    cdef vector[vector[int64_t]] store_rows = vector[vector[int64_t]](n_cols)
    cdef vector[vector[int64_t]] store_vals = vector[vector[int64_t]](n_cols)
    cdef vector[int64_t] rows, vals, tmp_rows, tmp_vals
    cdef int64_t low, other, factor, v
    cdef Py_ssize_t j, t
    lows = np.full(n_cols, -1, dtype=np.int64)
    cdef int64_t[::1] lw = lows

    for j in range(n_cols):
        rows.clear()
        vals.clear()
        for t in range(ip[j], ip[j + 1]):
            v = dv[t] % p
            if v < 0:
                v += p
            if v:
                rows.push_back(ix[t])
                vals.push_back(v)
        while rows.size() > 0:
            low = rows.back()
            other = pivot_of_row[low]
            if other < 0:
                break
            if p == 2:
                _xor(rows, store_rows[other], tmp_rows)
                rows.swap(tmp_rows)
            else:
                factor = vals.back() * _inv(store_vals[other].back(), p) % p
                _axpy(rows, vals, store_rows[other], store_vals[other], factor, p, tmp_rows, tmp_vals)
                rows.swap(tmp_rows)
                vals.swap(tmp_vals)
        if rows.size() > 0:
            low = rows.back()
            pivot_of_row[low] = j
            lw[j] = low
            store_rows[j] = rows
            if p != 2:
                store_vals[j] = vals
    return lows.tolist()
