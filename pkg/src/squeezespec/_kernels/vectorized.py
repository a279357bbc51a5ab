"""Pure-numpy kernels, vectorized over the evaluation points.

Same signatures and results as ``loops``; used when numba is absent or
disabled through ``SQUEEZESPEC_BACKEND=numpy``.
"""
import numpy as np

from .constants import HALF_LOG_2PI, LANCZOS_COEF, LANCZOS_G, PI_M14


def loggamma(z):
    w = np.array(z, dtype=np.complex128)
    shift = np.zeros_like(w)
    low = w.real < 0.5
    while low.any():
        shift[low] += np.log(w[low])
        w[low] += 1.0
        low = w.real < 0.5
    x = w - 1.0
    acc = np.full_like(w, LANCZOS_COEF[0])
    for k in range(1, LANCZOS_COEF.shape[0]):
        acc += LANCZOS_COEF[k] / (x + k)
    t = x + LANCZOS_G + 0.5
    return HALF_LOG_2PI + (x + 0.5) * np.log(t) - t + np.log(acc) - shift


def pollaczek_table(nmax, lam, b):
    out = np.empty((nmax + 1, lam.shape[0]))
    out[0] = 1.0
    if nmax >= 1:
        c_prev = 0.5 * np.sqrt(2.0 * b)
        out[1] = lam / c_prev
        for n in range(1, nmax):
            c = 0.5 * np.sqrt((n + 1.0) * (n + 2.0 * b))
            out[n + 1] = (lam * out[n] - c_prev * out[n - 1]) / c
            c_prev = c
    return out


def hermite_functions(nmax, q):
    out = np.empty((nmax + 1, q.shape[0]))
    out[0] = PI_M14 * np.exp(-0.5 * q * q)
    if nmax >= 1:
        out[1] = np.sqrt(2.0) * q * out[0]
        for n in range(1, nmax):
            out[n + 1] = np.sqrt(2.0 / (n + 1.0)) * q * out[n] - np.sqrt(n / (n + 1.0)) * out[n - 1]
    return out


def laguerre_table(nmax, alpha, x):
    out = np.empty((nmax + 1, x.shape[0]))
    out[0] = 1.0
    if nmax >= 1:
        out[1] = 1.0 + alpha - x
        for n in range(1, nmax):
            out[n + 1] = ((2.0 * n + 1.0 + alpha - x) * out[n] - (n + alpha) * out[n - 1]) / (n + 1.0)
    return out


def _masked_series(ratio, x, scale, tol, max_terms):
    s = np.ones(x.shape[0], dtype=np.complex128)
    t = np.ones(x.shape[0], dtype=np.complex128)
    used = np.full(x.shape[0], -1, dtype=np.int64)
    active = np.ones(x.shape[0], dtype=bool)
    for k in range(max_terms):
        if not active.any():
            break
        idx = np.flatnonzero(active)
        t[idx] = t[idx] * ratio(k, x[idx])
        s[idx] += t[idx]
        tk = t[idx]
        done = (tk == 0) | ((k + 1 > scale[idx]) & (np.abs(tk) < tol * np.abs(s[idx])))
        used[idx[done]] = k + 1
        active[idx[done]] = False
    return s, used


def hyp1f1_series(a, c, x, tol, max_terms):
    return _masked_series(lambda k, xs: (a + k) / (c + k) * xs / (k + 1.0),
                          x, np.abs(x), tol, max_terms)


def bessel_i_series(nu, u, tol, max_terms):
    return _masked_series(lambda k, us: us / ((k + 1.0) * (nu + k + 1.0)),
                          u, np.sqrt(np.abs(u)), tol, max_terms)
