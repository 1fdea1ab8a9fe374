"""Compiled inner loops for the radial solvers.

All kernels work on a uniform grid ``r_i = i*h``; index 0 is the origin.
"""

import numba
import numpy as np

_RESCALE = 1e150


@numba.njit(cache=True, nogil=True)
def numerov_outward(f, h, stop):
    """Integrate u'' = f u from u(0) = 0, u(h) = h up to index ``stop``.

    Returns ``(u, nodes)`` where ``nodes`` counts sign changes on
    (0, r_stop].  The solution is rescaled whenever it grows past
    ``_RESCALE``; sign changes are unaffected by rescaling.
    """
    n = stop + 1
    u = np.zeros(n)
    k = h * h / 12.0
    u[1] = h
    nodes = 0
    for i in range(1, n - 1):
        c_prev = 0.0 if i == 1 else (1.0 - k * f[i - 1]) * u[i - 1]
        u[i + 1] = (2.0 * (1.0 + 5.0 * k * f[i]) * u[i] - c_prev) / (1.0 - k * f[i + 1])
        if (u[i + 1] < 0.0) != (u[i] < 0.0) and u[i] != 0.0:
            nodes += 1
        if abs(u[i + 1]) > _RESCALE:
            for j in range(i + 2):
                u[j] /= _RESCALE
    return u, nodes


@numba.njit(cache=True, nogil=True)
def numerov_inward(f, h, stop, seed):
    """Integrate u'' = f u inward from u(r_N) = 0, u(r_{N-1}) = seed down to index ``stop``."""
    n = f.shape[0]
    u = np.zeros(n)
    k = h * h / 12.0
    last = n - 1
    u[last - 1] = seed
    for i in range(last - 1, stop, -1):
        u[i - 1] = (2.0 * (1.0 + 5.0 * k * f[i]) * u[i] - (1.0 - k * f[i + 1]) * u[i + 1]) / (
            1.0 - k * f[i - 1]
        )
        if abs(u[i - 1]) > _RESCALE:
            for j in range(i - 1, n):
                u[j] /= _RESCALE
    return u


@numba.njit(cache=True, nogil=True)
def sturm_count(diag, off2, x):
    """Number of eigenvalues below ``x`` of the symmetric tridiagonal matrix.

    ``off2`` holds the squared off-diagonal entries (length n - 1).
    """
    n = diag.shape[0]
    count = 0
    d = diag[0] - x
    if d < 0.0:
        count += 1
    for i in range(1, n):
        if d == 0.0:
            d = 1e-300
        d = (diag[i] - x) - off2[i - 1] / d
        if d < 0.0:
            count += 1
    return count


@numba.njit(cache=True, nogil=True)
def sturm_bisect(diag, off2, lo, hi, index, width):
    """Bisect for the ``index``-th (0-based) eigenvalue inside [lo, hi]."""
    iterations = 0
    while hi - lo > width and iterations < 400:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if sturm_count(diag, off2, mid) > index:
            hi = mid
        else:
            lo = mid
        iterations += 1
    return 0.5 * (lo + hi), iterations
