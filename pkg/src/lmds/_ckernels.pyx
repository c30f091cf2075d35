# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled enumeration kernels.

Field elements are C ints.  Addition goes through XOR in characteristic 2
and through a q x q table otherwise; multiplication uses log/antilog tables.
"""

import numpy as np

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy


cdef inline int _add(int a, int b, bint use_xor, const unsigned short[:, ::1] addt) noexcept nogil:
    if use_xor:
        return a ^ b
    return addt[a, b]


def span_weight_hist(const int[:, :, ::1] mult, const unsigned short[:, ::1] addt,
                     bint use_xor, const int[::1] base):
    """Weight histogram of ``base + sum_l mult[l, d_l]`` over all digit tuples."""
    cdef Py_ssize_t m = mult.shape[0]
    cdef Py_ssize_t q = mult.shape[1]
    cdef Py_ssize_t n = base.shape[0]
    hist_arr = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] hist = hist_arr
    cdef Py_ssize_t j, c, lvl, i
    cdef int w
    if m == 0:
        w = 0
        for j in range(n):
            if base[j] != 0:
                w += 1
        hist[w] += 1
        return hist_arr

    cdef int *partial = <int *> malloc(m * n * sizeof(int))
    cdef Py_ssize_t *digits = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    cdef int *leaf
    if partial == NULL or digits == NULL:
        free(partial)
        free(digits)
        raise MemoryError()
    with nogil:
        # partial[lvl] = base + rows < lvl at their current digits
        for lvl in range(m):
            digits[lvl] = 0
            for j in range(n):
                partial[lvl * n + j] = base[j]
        leaf = partial + (m - 1) * n
        while True:
            for c in range(q):
                w = 0
                for j in range(n):
                    if _add(leaf[j], mult[m - 1, c, j], use_xor, addt) != 0:
                        w += 1
                hist[w] += 1
            lvl = m - 2
            while lvl >= 0 and digits[lvl] == q - 1:
                lvl -= 1
            if lvl < 0:
                break
            digits[lvl] += 1
            for j in range(n):
                partial[(lvl + 1) * n + j] = _add(partial[lvl * n + j],
                                                  mult[lvl, digits[lvl], j], use_xor, addt)
            for i in range(lvl + 1, m - 1):
                digits[i] = 0
                memcpy(partial + (i + 1) * n, partial + i * n, n * sizeof(int))
    free(partial)
    free(digits)
    return hist_arr


def span_collect(const int[:, :, ::1] mult, const unsigned short[:, ::1] addt,
                 bint use_xor, const int[::1] base, int target):
    """Support bitmasks of every span word of weight ``target``."""
    cdef Py_ssize_t m = mult.shape[0]
    cdef Py_ssize_t q = mult.shape[1]
    cdef Py_ssize_t n = base.shape[0]
    cdef Py_ssize_t j, c, lvl, i
    cdef int w
    cdef unsigned long long mask
    out = []
    if n > 64:
        raise ValueError("support masks need n <= 64")
    if m == 0:
        mask = 0
        w = 0
        for j in range(n):
            if base[j] != 0:
                w += 1
                mask |= (<unsigned long long> 1) << j
        if w == target:
            out.append(mask)
        return out

    cdef int *partial = <int *> malloc(m * n * sizeof(int))
    cdef Py_ssize_t *digits = <Py_ssize_t *> malloc(m * sizeof(Py_ssize_t))
    cdef int *leaf
    cdef int v
    if partial == NULL or digits == NULL:
        free(partial)
        free(digits)
        raise MemoryError()
    for lvl in range(m):
        digits[lvl] = 0
        for j in range(n):
            partial[lvl * n + j] = base[j]
    leaf = partial + (m - 1) * n
    while True:
        for c in range(q):
            w = 0
            mask = 0
            for j in range(n):
                v = _add(leaf[j], mult[m - 1, c, j], use_xor, addt)
                if v != 0:
                    w += 1
                    mask |= (<unsigned long long> 1) << j
            if w == target:
                out.append(mask)
        lvl = m - 2
        while lvl >= 0 and digits[lvl] == q - 1:
            lvl -= 1
        if lvl < 0:
            break
        digits[lvl] += 1
        for j in range(n):
            partial[(lvl + 1) * n + j] = _add(partial[lvl * n + j],
                                              mult[lvl, digits[lvl], j], use_xor, addt)
        for i in range(lvl + 1, m - 1):
            digits[i] = 0
            memcpy(partial + (i + 1) * n, partial + i * n, n * sizeof(int))
    free(partial)
    free(digits)
    return out


cdef int _rank(int *buf, Py_ssize_t rows, Py_ssize_t cols,
               const long long[::1] exp, const long long[::1] log, long long order,
               const long long[::1] neg, bint use_xor,
               const unsigned short[:, ::1] addt) noexcept nogil:
    cdef Py_ssize_t r = 0, col, i, j, piv
    cdef int tmp, a, f
    cdef long long lp
    for col in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if buf[i * cols + col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = buf[r * cols + j]
                buf[r * cols + j] = buf[piv * cols + j]
                buf[piv * cols + j] = tmp
        lp = log[buf[r * cols + col]]
        for i in range(r + 1, rows):
            a = buf[i * cols + col]
            if a == 0:
                continue
            # factor f = a / pivot; row_i -= f * row_r
            f = <int> exp[log[a] - lp + order]
            for j in range(col, cols):
                if buf[r * cols + j] != 0:
                    tmp = <int> exp[log[f] + log[buf[r * cols + j]]]
                    buf[i * cols + j] = _add(buf[i * cols + j], <int> neg[tmp], use_xor, addt)
        r += 1
    return <int> r


def deficient_subsets(const int[:, ::1] P, int d,
                      const long long[::1] exp, const long long[::1] log,
                      const long long[::1] neg, bint use_xor,
                      const unsigned short[:, ::1] addt):
    """Bitmasks of all ``d``-subsets of columns of ``P`` with rank below ``d``."""
    cdef Py_ssize_t rows = P.shape[0]
    cdef Py_ssize_t n = P.shape[1]
    cdef long long order = exp.shape[0] // 2
    cdef Py_ssize_t i, j, t
    cdef unsigned long long mask
    out = []
    if n > 64:
        raise ValueError("support masks need n <= 64")
    if d <= 0 or d > n:
        return out
    cdef Py_ssize_t *idx = <Py_ssize_t *> malloc(d * sizeof(Py_ssize_t))
    cdef int *buf = <int *> malloc((rows * d + 1) * sizeof(int))
    if idx == NULL or buf == NULL:
        free(idx)
        free(buf)
        raise MemoryError()
    for i in range(d):
        idx[i] = i
    while True:
        for i in range(rows):
            for j in range(d):
                buf[i * d + j] = P[i, idx[j]]
        if _rank(buf, rows, d, exp, log, order, neg, use_xor, addt) < d:
            mask = 0
            for j in range(d):
                mask |= (<unsigned long long> 1) << idx[j]
            out.append(mask)
        t = d - 1
        while t >= 0 and idx[t] == n - d + t:
            t -= 1
        if t < 0:
            break
        idx[t] += 1
        for j in range(t + 1, d):
            idx[j] = idx[j - 1] + 1
    free(idx)
    free(buf)
    return out
