# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled recurrence kernel.  See ``_kernels_py`` for the reference twin."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def parlett_fill(cnp.ndarray[cnp.complex128_t, ndim=2] tmat,
                 cnp.ndarray[cnp.complex128_t, ndim=1] fdiag,
                 cnp.ndarray[cnp.complex128_t, ndim=1] div):
    cdef Py_ssize_t n = tmat.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=2] f = np.zeros((n, n), dtype=np.complex128)
    cdef Py_ssize_t i, j, k, off
    cdef double complex s
    for i in range(n):
        f[i, i] = fdiag[i]
    for off in range(1, n):
        for i in range(n - off):
            j = i + off
            s = tmat[i, j] * (f[i, i] - f[j, j])
            for k in range(i + 1, j):
                s = s + f[i, k] * tmat[k, j] - tmat[i, k] * f[k, j]
            f[i, j] = s / (div[i] - div[j])
    return f
