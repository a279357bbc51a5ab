"""Special functions used by the eigenfunction formulas.

Complex log-gamma, terminating 2F1, confluent 1F1, Hermite and Laguerre
polynomials, and modified Bessel functions I_nu and K_{i lambda}. Every
array-valued routine accepts scalars or array_like input and returns a
value of the same shape.
"""
import math
import warnings

import mpmath
import numpy as np
from scipy import integrate

from . import _kernels
from .errors import ConvergenceError, DomainError

HYP1F1_TOL = 1e-17
HYP1F1_MAX_TERMS = 10_000


def _flat(x, dtype):
    arr = np.asarray(x, dtype=dtype)
    return np.ascontiguousarray(arr.ravel()), arr.shape


def _shaped(values, shape):
    out = values.reshape(shape)
    return out[()] if shape == () else out


def log_gamma_complex(z):
    """Principal branch of log Gamma(z) for complex z.

    Lanczos approximation (g = 607/128) on Re z >= 1/2; smaller real
    parts are lifted with the recurrence log Gamma(z) = log Gamma(z+k) -
    sum log(z+j), which keeps the branch cut on the negative real axis.

    Raises
    ------
    DomainError
        If any z is a non-positive integer (a pole of Gamma).
    """
    flat, shape = _flat(z, np.complex128)
    poles = (flat.imag == 0) & (flat.real <= 0) & (flat.real == np.round(flat.real))
    if poles.any():
        raise DomainError(f"log_gamma_complex: pole at z = {flat[poles][0]}")
    return _shaped(_kernels.loggamma(flat), shape)


def log_gamma_real(x):
    return math.lgamma(x)


def log_pochhammer(a, m):
    """log (a)_m for real a > 0."""
    return math.lgamma(a + m) - math.lgamma(a)


def gamma_abs_sq(b, lam):
    """|Gamma(b + i lam)|^2 for b > 0, even in lam by construction."""
    if b <= 0:
        raise DomainError(f"gamma_abs_sq needs b > 0, got {b}")
    lam = np.abs(np.asarray(lam, dtype=float))
    return np.exp(2.0 * np.real(log_gamma_complex(b + 1j * lam)))


def gamma_arg(b, lam):
    """arg Gamma(b + i lam), continuous and odd in lam."""
    if b <= 0:
        raise DomainError(f"gamma_arg needs b > 0, got {b}")
    lam = np.asarray(lam, dtype=float)
    return np.sign(lam) * np.imag(log_gamma_complex(b + 1j * np.abs(lam)))


def hyp2f1_terminating(m, a, c, z):
    """F(-m, a; c; z) as the exact (m+1)-term polynomial.

    Well-conditioned sums are added with ``math.fsum``. When the terms are
    large compared with O(1) results (z = 2 gives terms of size ~3^m),
    the same term recurrence is run in mpmath at a precision chosen from
    the largest partial magnitude, so the returned double is correct
    to working precision.
    """
    m = int(m)
    if m < 0:
        raise DomainError("hyp2f1_terminating needs m >= 0")
    c = float(c)
    if c == round(c) and -m + 1 <= c <= 0:
        raise DomainError(f"hyp2f1_terminating: c = {c} hits a zero of (c)_k for k <= {m}")
    a = complex(a)
    z = complex(z)
    if m == 0 or z == 0:
        return 1.0 + 0j

    log_t = 0.0
    log_terms = [0.0]
    for k in range(m):
        r = abs((k - m) * (a + k) * z / ((c + k) * (k + 1)))
        if r == 0.0:
            break
        log_t += math.log(r)
        log_terms.append(log_t)
    top = max(log_terms)
    log10_size = (top + math.log(sum(math.exp(v - top) for v in log_terms))) / math.log(10.0)

    if log10_size <= 1.0:
        terms = [1.0 + 0j]
        t = 1.0 + 0j
        for k in range(m):
            t = t * (k - m) * (a + k) / (c + k) * z / (k + 1)
            terms.append(t)
        return complex(math.fsum(v.real for v in terms), math.fsum(v.imag for v in terms))

    dps = 25 + int(math.ceil(log10_size))
    with mpmath.workdps(dps):
        am, cm, zm = mpmath.mpc(a), mpmath.mpf(c), mpmath.mpc(z)
        s = mpmath.mpc(1)
        t = mpmath.mpc(1)
        for k in range(m):
            t = t * (k - m) * (am + k) / (cm + k) * zm / (k + 1)
            s += t
        return complex(s)


def hyp1f1(a, c, x, tol=HYP1F1_TOL, max_terms=HYP1F1_MAX_TERMS):
    """Kummer's confluent function 1F1(a; c; x) for complex a and x, real c.

    Power series summed until a term past the peak falls below ``tol``
    relative to the partial sum. For Re x < 0 Kummer's transformation
    e^x 1F1(c-a; c; -x) is summed instead to avoid cancellation.

    Raises
    ------
    DomainError
        If c is a non-positive integer.
    ConvergenceError
        If some element needs more than ``max_terms`` terms.
    """
    c = float(c)
    if c <= 0 and c == round(c):
        raise DomainError(f"hyp1f1: c = {c} is a non-positive integer")
    a = complex(a)
    flat, shape = _flat(x, np.complex128)
    out = np.empty_like(flat)
    neg = flat.real < 0
    for mask, a_eff, sign in ((~neg, a, 1.0), (neg, c - a, -1.0)):
        if not mask.any():
            continue
        vals, used = _kernels.hyp1f1_series(a_eff, c, sign * flat[mask], tol, max_terms)
        if (used < 0).any():
            bad = flat[mask][used < 0][0]
            raise ConvergenceError("hyp1f1 series did not converge", a=a, c=c, x=bad,
                                   max_terms=max_terms)
        out[mask] = vals if sign > 0 else np.exp(flat[mask]) * vals
    return _shaped(out, shape)


def hermite(n, y):
    """Physicists' Hermite polynomial H_n(y) via H_{k+1} = 2y H_k - 2k H_{k-1}."""
    n = int(n)
    if n < 0:
        raise DomainError("hermite needs n >= 0")
    y = np.asarray(y, dtype=float)
    h_prev = np.ones_like(y)
    if n == 0:
        return h_prev[()] if y.ndim == 0 else h_prev
    h = 2.0 * y
    for k in range(1, n):
        h_prev, h = h, 2.0 * y * h - 2.0 * k * h_prev
    return h[()] if y.ndim == 0 else h


def hermite_functions(nmax, q):
    """Table u_k(q) = N_k H_k(q) exp(-q^2/2) for k = 0..nmax.

    Uses the normalized three-term recursion, so no factorials appear and
    nothing overflows for large k. Shape is ``(nmax + 1,) + shape(q)``.
    """
    flat, shape = _flat(q, float)
    return _kernels.hermite_functions(int(nmax), flat).reshape((int(nmax) + 1,) + shape)


def log_hermite_norm(n):
    """log N_n with N_n = (sqrt(pi) 2^n n!)^(-1/2)."""
    return -0.5 * (0.5 * math.log(math.pi) + n * math.log(2.0) + math.lgamma(n + 1.0))


def laguerre_table(nmax, alpha, x):
    flat, shape = _flat(x, float)
    return _kernels.laguerre_table(int(nmax), float(alpha), flat).reshape((int(nmax) + 1,) + shape)


def laguerre(n, alpha, x):
    """Generalized Laguerre polynomial L_n^alpha(x) by forward recursion."""
    n = int(n)
    if n < 0:
        raise DomainError("laguerre needs n >= 0")
    return _shaped(laguerre_table(n, alpha, x)[n].ravel(), np.shape(x))


def bessel_i_entire(nu, u, tol=HYP1F1_TOL, max_terms=HYP1F1_MAX_TERMS):
    """sum_k u^k / (k! Gamma(nu+k+1)), so that I_nu(x) = (x/2)^nu * this(x^2/4).

    Entire in u, hence free of the branch of (x/2)^nu.
    """
    nu = float(nu)
    flat, shape = _flat(u, np.complex128)
    vals, used = _kernels.bessel_i_series(nu, flat, tol, max_terms)
    if (used < 0).any():
        raise ConvergenceError("bessel_i series did not converge", nu=nu, u=flat[used < 0][0])
    return _shaped(vals / math.gamma(nu + 1.0), shape)


def bessel_i(nu, x):
    """Modified Bessel function I_nu(x) from the ascending series, nu >= 0.

    Principal branch of (x/2)^nu for non-integer nu. Relative accuracy is
    near machine precision for |arg x| small; for strongly imaginary
    arguments the error is ~eps * I_nu(|x|) in absolute terms.
    """
    if nu < 0:
        raise DomainError("bessel_i needs nu >= 0")
    x = np.asarray(x, dtype=np.complex128)
    half = x / 2.0
    if float(nu) == int(nu):
        pref = half ** int(nu)
    else:
        pref = np.exp(nu * np.log(half)) if np.all(half != 0) else np.where(half == 0, 0.0, half ** nu)
    return pref * bessel_i_entire(nu, half * half)


K_SERIES_X = 1.0
K_SERIES_LAM = 0.1


def _k_imag_series(lam, x):
    # K_{i lam}(x) = -pi Im I_{i lam}(x) / sinh(pi lam); while x^2/4 <= max(1/4, lam)
    # the terms (x^2/4)^k / (k! (1 + i lam)_k) stay O(1), so nothing cancels
    u = x * x / 4.0
    t = 1.0 + 0j
    s = t
    k = 0
    while abs(t) > 1e-17 * abs(s):
        k += 1
        t = t * u / (k * (k + 1j * lam))
        s += t
    log_pref = 1j * lam * math.log(x / 2.0) - complex(_kernels.loggamma(np.array([1.0 + 1j * lam]))[0])
    return -math.pi * (np.exp(log_pref) * s).imag / math.sinh(math.pi * lam)


def _k_imag_quad(lam, x, epsrel):
    # integrand scaled by e^{x} so that its peak value is 1 at t = 0
    t_max = math.acosh(1.0 + 37.0 / x)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, _ = integrate.quad(lambda t: math.exp(-x * (math.cosh(t) - 1.0)) * math.cos(lam * t),
                                0.0, t_max, epsabs=1e-17, epsrel=epsrel, limit=2000)
    return math.exp(-x) * val


def bessel_k_imag(lam, x, epsrel=1e-13):
    """K_{i lam}(x) = int_0^inf exp(-x cosh t) cos(lam t) dt for x > 0.

    For |lam| >= 0.1 and x <= max(1, 2 sqrt|lam|) the ascending series
    -pi Im I_{i lam}(x) / sinh(pi lam) is summed, since the integral
    oscillates heavily there. Otherwise the integral is cut at T with
    x (cosh T - 1) = 37, where the integrand has dropped below 1e-16 of
    its peak, and done by adaptive quadrature.

    The error is about 1e-16 * max(|K|, e^{-x} min(1, sqrt(pi / (lam sinh(pi lam)))))
    for |lam| <= 10; beyond that, values near the turning point x ~ |lam|
    are exponentially small and only absolutely accurate.
    """
    flat, shape = _flat(x, float)
    if (flat <= 0).any():
        raise DomainError("bessel_k_imag needs x > 0")
    lam = abs(float(lam))
    use_series = lambda v: lam >= K_SERIES_LAM and v * v / 4.0 <= max(K_SERIES_X / 4.0, lam)
    out = np.array([_k_imag_series(lam, float(v)) if use_series(v)
                    else _k_imag_quad(lam, float(v), epsrel) for v in flat])
    return _shaped(out, shape)
