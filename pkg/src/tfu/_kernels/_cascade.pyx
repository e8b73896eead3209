# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled reduction kernels.

Same operation trees as tfu._kernels._pure, so both backends produce
bit-identical doubles; see test_kernels.py for the cross-check.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


def cascade_sum(double[::1] values):
    """Pairwise cascade sum: zero-pad to a power of two, reduce adjacent pairs."""
    cdef Py_ssize_t n = values.shape[0]
    if n == 0:
        return 0.0
    if n == 1:
        return values[0]
    cdef Py_ssize_t m = 1
    while m < n:
        m <<= 1
    cdef double* buf = <double*> PyMem_Malloc(m * sizeof(double))
    if buf == NULL:
        raise MemoryError
    cdef Py_ssize_t i
    cdef double out
    try:
        for i in range(n):
            buf[i] = values[i]
        for i in range(n, m):
            buf[i] = 0.0
        while m > 1:
            m >>= 1
            for i in range(m):
                buf[i] = buf[2 * i] + buf[2 * i + 1]
        out = buf[0]
    finally:
        PyMem_Free(buf)
    return out


def prefix_count(double[::1] masses, double threshold):
    """First prefix length whose running (left-to-right) sum reaches threshold.

    Returns -1 when even the full sum falls short.
    """
    if threshold <= 0.0:
        return 0
    cdef double acc = 0.0
    cdef Py_ssize_t i, n = masses.shape[0]
    for i in range(n):
        acc += masses[i]
        if acc >= threshold:
            return i + 1
    return -1
