# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled row-echelon kernel over F_p.

Operates in place on a C-contiguous int64 matrix.  For small p the
elimination is lazy: non-pivot rows accumulate unreduced sums and are only
reduced when read, which keeps the inner loop free of divisions.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()

cdef inline int64_t _inv(int64_t a, int64_t p) noexcept nogil:
    cdef int64_t t = 0, nt = 1, r = p, nr = a, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


cdef Py_ssize_t _echelon(int64_t[:, ::1] a, int64_t p, bint lazy) noexcept nogil:
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t f, inv, tmp
    cdef int64_t* prow
    cdef int64_t* irow
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if lazy:
                a[i, c] %= p
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                tmp = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = tmp
        prow = &a[r, 0]
        inv = _inv(prow[c], p)
        for j in range(c, cols):
            prow[j] = (prow[j] % p) * inv % p
        for i in range(r + 1, rows):
            irow = &a[i, 0]
            f = irow[c] % p
            if f == 0:
                irow[c] = 0
                continue
            f = p - f
            if lazy:
                for j in range(c, cols):
                    irow[j] += f * prow[j]
            else:
                for j in range(c, cols):
                    irow[j] = (irow[j] + f * prow[j]) % p
        r += 1
    return r


def echelon_inplace(cnp.ndarray a, long long p):
    """Row-reduce ``a`` in place (int64, C order, entries in [0, p)); return the rank.

    The first ``rank`` rows span the row space afterwards.  Rows below the
    rank are left unreduced.
    """
    cdef int64_t[:, ::1] view = a
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1]
    cdef Py_ssize_t r
    # lazy sums stay below 2**62: each entry gains at most (p-1)^2 per pivot
    cdef bint lazy = (int(min(rows, cols)) + 1) * (int(p) - 1) ** 2 + int(p) < 2**62
    with nogil:
        r = _echelon(view, p, lazy)
    return r
