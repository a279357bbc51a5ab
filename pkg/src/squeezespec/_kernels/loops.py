"""Scalar-loop kernels.

Written in the subset of Python that numba compiles in nopython mode.
They are only ever called through ``squeezespec._kernels``, which wraps
them with ``numba.njit`` when the numba backend is active.
"""
import cmath
import math

import numpy as np

from .constants import HALF_LOG_2PI, LANCZOS_COEF, LANCZOS_G, PI_M14


def loggamma(z):
    out = np.empty(z.shape[0], dtype=np.complex128)
    ncoef = LANCZOS_COEF.shape[0]
    for i in range(z.shape[0]):
        w = z[i]
        # upward recurrence keeps the principal branch; log(w+j) has its
        # cut on the negative real axis only
        shift = 0j
        while w.real < 0.5:
            shift += cmath.log(w)
            w += 1.0
        x = w - 1.0
        acc = LANCZOS_COEF[0] + 0j
        for k in range(1, ncoef):
            acc += LANCZOS_COEF[k] / (x + k)
        t = x + LANCZOS_G + 0.5
        out[i] = HALF_LOG_2PI + (x + 0.5) * cmath.log(t) - t + cmath.log(acc) - shift
    return out


def pollaczek_table(nmax, lam, b):
    # row by row, so the inner loop runs over contiguous memory
    m = lam.shape[0]
    out = np.empty((nmax + 1, m))
    for j in range(m):
        out[0, j] = 1.0
    if nmax >= 1:
        c_prev = 0.5 * math.sqrt(2.0 * b)
        for j in range(m):
            out[1, j] = lam[j] / c_prev
        for n in range(1, nmax):
            c = 0.5 * math.sqrt((n + 1.0) * (n + 2.0 * b))
            for j in range(m):
                out[n + 1, j] = (lam[j] * out[n, j] - c_prev * out[n - 1, j]) / c
            c_prev = c
    return out


def hermite_functions(nmax, q):
    m = q.shape[0]
    out = np.empty((nmax + 1, m))
    for j in range(m):
        out[0, j] = PI_M14 * math.exp(-0.5 * q[j] * q[j])
    if nmax >= 1:
        for j in range(m):
            out[1, j] = math.sqrt(2.0) * q[j] * out[0, j]
        for n in range(1, nmax):
            s1 = math.sqrt(2.0 / (n + 1.0))
            s0 = math.sqrt(n / (n + 1.0))
            for j in range(m):
                out[n + 1, j] = s1 * q[j] * out[n, j] - s0 * out[n - 1, j]
    return out


def laguerre_table(nmax, alpha, x):
    m = x.shape[0]
    out = np.empty((nmax + 1, m))
    for j in range(m):
        out[0, j] = 1.0
    if nmax >= 1:
        for j in range(m):
            out[1, j] = 1.0 + alpha - x[j]
        for n in range(1, nmax):
            for j in range(m):
                out[n + 1, j] = ((2.0 * n + 1.0 + alpha - x[j]) * out[n, j] - (n + alpha) * out[n - 1, j]) / (n + 1.0)
    return out


def hyp1f1_series(a, c, x, tol, max_terms):
    """Power series of 1F1(a; c; x) per element; returns (values, terms used).

    A term count of -1 marks an element that hit ``max_terms``.
    """
    m = x.shape[0]
    out = np.empty(m, dtype=np.complex128)
    used = np.empty(m, dtype=np.int64)
    for j in range(m):
        xj = x[j]
        ax = abs(xj)
        s = 1.0 + 0j
        t = 1.0 + 0j
        used[j] = -1
        for k in range(max_terms):
            t = t * (a + k) / (c + k) * xj / (k + 1.0)
            s += t
            if t == 0:
                used[j] = k + 1
                break
            if k + 1 > ax and abs(t) < tol * abs(s):
                used[j] = k + 1
                break
        out[j] = s
    return out, used


def bessel_i_series(nu, u, tol, max_terms):
    """sum_k u^k / (k! (nu+1)_k), the entire part of I_nu."""
    m = u.shape[0]
    out = np.empty(m, dtype=np.complex128)
    used = np.empty(m, dtype=np.int64)
    for j in range(m):
        uj = u[j]
        au = math.sqrt(abs(uj))
        s = 1.0 + 0j
        t = 1.0 + 0j
        used[j] = -1
        for k in range(max_terms):
            t = t * uj / ((k + 1.0) * (nu + k + 1.0))
            s += t
            if t == 0:
                used[j] = k + 1
                break
            if k + 1 > au and abs(t) < tol * abs(s):
                used[j] = k + 1
                break
        out[j] = s
    return out, used
