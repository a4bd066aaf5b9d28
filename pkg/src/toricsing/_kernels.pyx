# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled box-minimum kernels.  Same contract as ``_kernels_py``.

Inputs must satisfy ``|n_i| < 2**28`` and ``d <= 64`` so that every product
formed below fits in a signed 64-bit integer; ``kernels.py`` checks this and
routes larger inputs to the pure-Python twin.
"""

from libc.stdlib cimport malloc, free

from .errors import InternalConsistencyError

ctypedef long long i64


def box_min_blowup(n):
    cdef Py_ssize_t d = len(n)
    cdef i64 *w = <i64 *> malloc(d * sizeof(i64))
    cdef i64 *rem = <i64 *> malloc(d * sizeof(i64))
    cdef i64 *quo = <i64 *> malloc(d * sizeof(i64))
    cdef Py_ssize_t i, j
    cdef i64 nj, k, num, b, m_i
    cdef i64 best_num = -1, best_den = 1, best_j = 0, best_k = 0
    cdef bint bad = 0
    if w == NULL or rem == NULL or quo == NULL:
        free(w); free(rem); free(quo)
        raise MemoryError()
    try:
        for i in range(d):
            w[i] = n[i]
        for j in range(d):
            nj = w[j]
            if nj < 2:
                continue
            for i in range(d):
                rem[i] = 0
                quo[i] = 0
            for k in range(1, nj):
                num = k
                for i in range(d):
                    if i == j:
                        continue
                    rem[i] += w[i]
                    while rem[i] >= nj:
                        rem[i] -= nj
                        quo[i] += 1
                    if rem[i]:
                        b = nj - rem[i]
                        m_i = quo[i] + 1
                    else:
                        b = 0
                        m_i = quo[i]
                    if m_i * nj - k * w[i] != b:
                        bad = 1
                        break
                    num += b
                if bad:
                    raise InternalConsistencyError(
                        f"box point of cone {j + 1} at k={k} fails recomposition")
                if best_num < 0 or num * best_den < best_num * nj:
                    best_num = num
                    best_den = nj
                    best_j = j + 1
                    best_k = k
    finally:
        free(w); free(rem); free(quo)
    if best_num < 0:
        return None
    return (best_num, best_den, best_j, best_k)


def box_min_fibration(n):
    cdef Py_ssize_t d = len(n)
    cdef i64 big_n = n[0]
    if big_n < 2:
        return None
    cdef i64 *w = <i64 *> malloc(d * sizeof(i64))
    cdef i64 *rem = <i64 *> malloc(d * sizeof(i64))
    cdef Py_ssize_t i, t, label
    cdef i64 k, num, b0, c, mt
    cdef i64 best_num = -1, best_label = 0, best_k = 0
    cdef bint bad = 0
    if w == NULL or rem == NULL:
        free(w); free(rem)
        raise MemoryError()
    try:
        for i in range(d):
            w[i] = n[i]
        for label in range(d):
            # label 0 drops u_0; label t (1..d-1 here, reported as t+1) drops e_{t+1}
            for i in range(d):
                rem[i] = 0
            for k in range(1, big_n):
                for i in range(1, d):
                    rem[i] = (rem[i] + w[i]) % big_n
                    if rem[i] < 0:
                        rem[i] += big_n
                num = k
                if label == 0:
                    for i in range(1, d):
                        c = (big_n - rem[i]) % big_n
                        if (k * w[i] + c) % big_n != 0:
                            bad = 1
                        num += c
                else:
                    t = label
                    b0 = rem[t]
                    num += b0
                    if (k * w[t] - b0) % big_n != 0:
                        bad = 1
                    for i in range(1, d):
                        if i == t:
                            continue
                        c = (rem[t] - rem[i]) % big_n
                        if c < 0:
                            c += big_n
                        if (k * w[i] - b0 + c) % big_n != 0:
                            bad = 1
                        num += c
                if bad:
                    raise InternalConsistencyError(
                        f"box point of cone {label + 1 if label else 0} at k={k} is not integral")
                if best_num < 0 or num < best_num:
                    best_num = num
                    best_label = label + 1 if label else 0
                    best_k = k
    finally:
        free(w); free(rem)
    return (best_num, big_n, best_label, best_k)
