# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; see _pykernels for the reference semantics."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef long long i64


def codeword_weights(i64[:, ::1] rows, i64[::1] weights, i64[:, ::1] add, i64[:, ::1] mul, int q):
    cdef Py_ssize_t k = rows.shape[0]
    cdef Py_ssize_t n = weights.shape[0]
    cdef Py_ssize_t total = q ** k
    cdef Py_ssize_t idx, j, i, lvl
    cdef i64 s
    out = np.empty(total, dtype=np.int64)
    cdef i64[::1] o = out
    cdef i64[:, ::1] part = np.zeros((k + 1, n), dtype=np.int64)
    cdef i64[::1] digit = np.zeros(max(k, 1), dtype=np.int64)
    # scaled[j, c, i] = c * rows[j, i]
    cdef i64[:, :, ::1] scaled = np.empty((max(k, 1), q, max(n, 1)), dtype=np.int64)
    for j in range(k):
        for s in range(q):
            for i in range(n):
                scaled[j, s, i] = mul[s, rows[j, i]]

    lvl = 0
    for idx in range(total):
        for j in range(lvl, k):
            for i in range(n):
                part[j + 1, i] = add[part[j, i], scaled[j, digit[j], i]]
        s = 0
        for i in range(n):
            if part[k, i] != 0:
                s += weights[i]
        o[idx] = s
        j = k - 1
        while j >= 0:
            digit[j] += 1
            if digit[j] < q:
                break
            digit[j] = 0
            j -= 1
        lvl = j if j >= 0 else 0
    return out


def multiset_sums(i64[::1] values, i64[::1] maxcounts):
    cdef Py_ssize_t d = values.shape[0]
    cdef Py_ssize_t total = 1
    cdef Py_ssize_t v, t, size
    cdef i64 c
    for v in range(d):
        total *= maxcounts[v] + 1
    out = np.empty(total, dtype=np.int64)
    cdef i64[::1] o = out
    o[0] = 0
    size = 1
    for v in range(d):
        for c in range(1, maxcounts[v] + 1):
            for t in range(size):
                o[c * size + t] = o[t] + c * values[v]
        size *= maxcounts[v] + 1
    return out


cdef bint _next_permutation(i64[::1] a):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t i = n - 2, j
    cdef i64 tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    i += 1
    j = n - 1
    while i < j:
        tmp = a[i]; a[i] = a[j]; a[j] = tmp
        i += 1
        j -= 1
    return True


def count_monomial_matches(i64[::1] alpha, i64[::1] beta, i64[::1] weights, i64[:, ::1] mul, int q):
    cdef Py_ssize_t n = alpha.shape[0]
    cdef Py_ssize_t i
    cdef i64 tested = 0, matches = 0
    cdef bint preserves, ok, more = True
    cdef i64[::1] perm = np.arange(n, dtype=np.int64)
    cdef i64[::1] scal = np.ones(max(n, 1), dtype=np.int64)
    while more:
        preserves = True
        for i in range(n):
            if weights[i] != weights[perm[i]]:
                preserves = False
                break
        for i in range(n):
            scal[i] = 1
        while True:
            tested += 1
            if preserves:
                ok = True
                for i in range(n):
                    if mul[alpha[i], scal[i]] != beta[perm[i]]:
                        ok = False
                        break
                if ok:
                    matches += 1
            i = n - 1
            while i >= 0:
                scal[i] += 1
                if scal[i] < q:
                    break
                scal[i] = 1
                i -= 1
            if i < 0:
                break
        more = _next_permutation(perm) if n > 1 else False
    return tested, matches
