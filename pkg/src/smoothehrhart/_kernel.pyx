# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""int64 lattice-point counting kernel.

Callers must certify that no intermediate value can overflow int64; see
``counting._fits_int64``.
"""

import numpy as np

from libc.stdint cimport int64_t


cdef inline int64_t _fdiv(int64_t a, int64_t b) noexcept nogil:
    cdef int64_t q = a / b
    if (a % b != 0) and ((a < 0) != (b < 0)):
        q -= 1
    return q


cdef int64_t _count(
    const int64_t[:, ::1] A,
    const int64_t[::1] rhs,
    const int64_t[::1] lo,
    const int64_t[::1] hi,
    const int64_t[:, ::1] tailmin,
    int64_t first_lo,
    int64_t first_hi,
    int64_t budget,
    int64_t[:, ::1] slack,
    int64_t[::1] cur,
    int64_t[::1] top,
    int64_t* nodes_out,
) noexcept nogil:
    cdef Py_ssize_t m = A.shape[0]
    cdef Py_ssize_t n = A.shape[1]
    cdef Py_ssize_t r, j = 0
    cdef int64_t total = 0, nodes = 0
    cdef int64_t l, h, a, c, q
    cdef bint descend = True

    for r in range(m):
        slack[0, r] = rhs[r]

    while j >= 0:
        if descend:
            nodes += 1
            if nodes > budget:
                nodes_out[0] = nodes
                return -1
            l = lo[j]
            h = hi[j]
            if j == 0:
                if first_lo > l:
                    l = first_lo
                if first_hi < h:
                    h = first_hi
            for r in range(m):
                a = A[r, j]
                c = slack[j, r] - tailmin[r, j]
                if a > 0:
                    q = _fdiv(c, a)
                    if q < h:
                        h = q
                elif a < 0:
                    q = -_fdiv(c, -a)
                    if q > l:
                        l = q
                elif c < 0:
                    h = l - 1
                if h < l:
                    break
            if j == n - 1:
                if h >= l:
                    total += h - l + 1
                j -= 1
                descend = False
            elif h < l:
                j -= 1
                descend = False
            else:
                cur[j] = l
                top[j] = h
                for r in range(m):
                    slack[j + 1, r] = slack[j, r] - A[r, j] * l
                j += 1
        else:
            cur[j] += 1
            if cur[j] > top[j]:
                j -= 1
                continue
            for r in range(m):
                slack[j + 1, r] -= A[r, j]
            j += 1
            descend = True

    nodes_out[0] = nodes
    return total


def count_range(A, rhs, lo, hi, tailmin, first_lo, first_hi, budget):
    """Count lattice points with the first coordinate in ``[first_lo, first_hi]``.

    Returns ``(count, nodes)``; ``count`` is ``None`` if the node budget ran out.
    The GIL is released while counting.
    """
    cdef const int64_t[:, ::1] A_ = np.ascontiguousarray(A, dtype=np.int64)
    cdef const int64_t[::1] rhs_ = np.ascontiguousarray(rhs, dtype=np.int64)
    cdef const int64_t[::1] lo_ = np.ascontiguousarray(lo, dtype=np.int64)
    cdef const int64_t[::1] hi_ = np.ascontiguousarray(hi, dtype=np.int64)
    cdef const int64_t[:, ::1] tm_ = np.ascontiguousarray(tailmin, dtype=np.int64)
    cdef Py_ssize_t m = A_.shape[0], n = A_.shape[1]
    cdef int64_t[:, ::1] slack = np.zeros((n + 1, m), dtype=np.int64)
    cdef int64_t[::1] cur = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] top = np.zeros(n, dtype=np.int64)
    cdef int64_t flo = first_lo, fhi = first_hi, bud = budget
    cdef int64_t nodes = 0, total
    with nogil:
        total = _count(A_, rhs_, lo_, hi_, tm_, flo, fhi, bud, slack, cur, top, &nodes)
    if total < 0:
        return None, nodes
    return total, nodes
