"""Pure-Python twin of the compiled recurrence kernel in ``_core.pyx``.

Both backends implement the same sweep: given an upper-triangular ``tmat``,
the diagonal values ``fdiag`` of the matrix function, and separated divisor
values ``div`` (the diagonal of ``tmat`` after anti-confluence adjustment),
fill the strict upper triangle of ``f`` column-sweep by superdiagonals:

    f[i, j] = (t[i, j] * (f[i, i] - f[j, j])
               + sum_k (f[i, k] * t[k, j] - t[i, k] * f[k, j])) / (div_i - div_j)

The arithmetic order matches the compiled kernel so the two agree to the
last few ulps; exact bit-identity is not guaranteed across compilers.
"""

import numpy as np


def parlett_fill(tmat, fdiag, div):
    n = tmat.shape[0]
    f = np.zeros_like(tmat)
    for i in range(n):
        f[i, i] = fdiag[i]
    for off in range(1, n):
        for i in range(n - off):
            j = i + off
            s = tmat[i, j] * (f[i, i] - f[j, j])
            for k in range(i + 1, j):
                s += f[i, k] * tmat[k, j] - tmat[i, k] * f[k, j]
            f[i, j] = s / (div[i] - div[j])
    return f
