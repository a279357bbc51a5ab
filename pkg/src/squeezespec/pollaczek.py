"""Pollaczek polynomials P_n(lambda, b) with zero-diagonal Jacobi matrix.

P_0 = 1 and c_{n-1} P_{n-1} + c_n P_{n+1} = lambda P_n with
c_n = sqrt((n+1)(n+2b)) / 2. The polynomials are orthonormal on the real
line against

    rho_b(lambda) = 2^(2b-1) |Gamma(b + i lambda)|^2 / (pi Gamma(2b)).
"""
from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np
from scipy import integrate, linalg

from . import _kernels
from .errors import DomainError
from .specfun import gamma_arg, hyp2f1_terminating, log_gamma_complex, log_pochhammer


def _check_b(b):
    b = float(b)
    if not b > 0:
        raise DomainError(f"Pollaczek parameter b must be > 0, got {b}")
    return b


@dataclass(frozen=True)
class PollaczekWeight:
    """The weight rho_b; callable on lambda values."""

    b: float

    def __post_init__(self):
        _check_b(self.b)

    def __call__(self, lam):
        return weight(lam, self.b)


def _b_of(w):
    return _check_b(getattr(w, "b", w))


def log_weight(lam, b):
    b = _b_of(b)
    lam = np.abs(np.asarray(lam, dtype=float))
    lg = np.real(log_gamma_complex(b + 1j * lam))
    return (2 * b - 1) * math.log(2.0) + 2.0 * lg - math.log(math.pi) - math.lgamma(2 * b)


def weight(lam, b):
    """rho_b(lambda); ``b`` may be a float or a :class:`PollaczekWeight`."""
    return np.exp(log_weight(lam, b))


def recurrence_coefficients(M, b):
    """c_0, ..., c_{M-1}."""
    b = _check_b(b)
    n = np.arange(M, dtype=float)
    return 0.5 * np.sqrt((n + 1.0) * (n + 2.0 * b))


def pollaczek_table(nmax, lam, b):
    """Rows P_0..P_nmax evaluated at every lambda; shape (nmax+1,) + shape(lam)."""
    b = _check_b(b)
    nmax = int(nmax)
    if nmax < 0:
        raise DomainError("nmax must be >= 0")
    arr = np.asarray(lam, dtype=float)
    flat = np.ascontiguousarray(arr.ravel())
    return _kernels.pollaczek_table(nmax, flat, b).reshape((nmax + 1,) + arr.shape)


def pollaczek_eval(n, lam, b):
    """P_n(lambda, b) by forward three-term recursion."""
    tab = pollaczek_table(n, lam, b)
    out = tab[int(n)]
    return out[()] if out.ndim == 0 else out


def _log_norm_2f1(n, b):
    # log sqrt((2b)_n / n!)
    return 0.5 * (log_pochhammer(2 * b, n) - math.lgamma(n + 1.0))


def pollaczek_via_2f1(n, lam, b):
    """P_n from its hypergeometric form i^n sqrt((2b)_n/n!) F(-n, b+i lam; 2b; 2).

    Independent of the recursion in :func:`pollaczek_eval`; serves as its
    oracle. Returns the real part; the imaginary part vanishes up to
    rounding for real lambda.
    """
    b = _check_b(b)
    n = int(n)
    scale = math.exp(_log_norm_2f1(n, b)) * (1j ** n)

    def one(x):
        return (scale * hyp2f1_terminating(n, b + 1j * x, 2 * b, 2.0)).real

    lam = np.asarray(lam, dtype=float)
    if lam.ndim == 0:
        return one(float(lam))
    return np.array([one(float(x)) for x in lam.ravel()]).reshape(lam.shape)


# ---------------------------------------------------------------- moments


def _cosh_half_series(order):
    # coefficients of cosh(x/2) in powers of y = x^2: 1 / (4^k (2k)!)
    return [Fraction(1, 4 ** k * math.factorial(2 * k)) for k in range(order + 1)]


def moments_taylor(max_order, b):
    """Moments int lambda^k rho_b for k = 0..max_order, exactly from the series of sech^{2b}(x/2).

    The even moment of order 2m is (-1)^m times the 2m-th derivative at 0
    of cosh(x/2)^(-2b), read off the power series of G^alpha, G = cosh(x/2),
    alpha = -2b, built with the J.C.P. Miller recurrence in rational
    arithmetic (b is taken as the exact binary fraction of the float).
    """
    b = _check_b(b)
    max_order = int(max_order)
    half = max_order // 2
    g = _cosh_half_series(half)
    alpha = -2 * Fraction(b)
    f = [Fraction(1)]
    for k in range(1, half + 1):
        acc = sum(((alpha + 1) * j - k) * g[j] * f[k - j] for j in range(1, k + 1))
        f.append(acc / k)
    out = []
    for order in range(max_order + 1):
        if order % 2:
            out.append(0.0)
        else:
            m = order // 2
            out.append(float((-1) ** m * math.factorial(2 * m) * f[m]))
    return out


def moment(order, b):
    """int lambda^order rho_b(lambda) d lambda; odd orders are exactly 0."""
    order = int(order)
    if order < 0:
        raise DomainError("moment order must be >= 0")
    return moments_taylor(order, b)[order]


# ---------------------------------------------------------- Jacobi matrix


@dataclass(frozen=True)
class JacobiMatrix:
    """Truncated M x M Jacobi matrix; zero diagonal, off-diagonal c_0..c_{M-2}."""

    size: int
    offdiag: np.ndarray
    b: float

    def dense(self):
        return np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def eigh(self):
        if self.size == 1:
            return np.zeros(1), np.ones((1, 1))
        return linalg.eigh_tridiagonal(np.zeros(self.size), self.offdiag)


def jacobi_matrix(M, b):
    M = int(M)
    if M < 1:
        raise DomainError("Jacobi matrix size must be >= 1")
    off = recurrence_coefficients(M - 1, b)
    off.setflags(write=False)
    return JacobiMatrix(M, off, _check_b(b))


def gauss_nodes_weights(M, b):
    """Gauss rule for rho_b from the M x M Jacobi matrix (Golub-Welsch).

    Returns ``(nodes, weights)`` sorted by node; weights sum to 1.
    """
    nodes, vecs = jacobi_matrix(M, b).eigh()
    w = vecs[0] ** 2
    return nodes, w


# ------------------------------------------------------------ asymptotics


@dataclass(frozen=True)
class AsymptoticPhase:
    phi: float
    phi1: float


def asymptotic_phase(lam, b):
    """phi = arg Gamma(b + i lam), phi1 = arg Gamma(b + 1 + i lam) = phi + arctan(lam/b)."""
    b = _check_b(b)
    phi = float(gamma_arg(b, lam))
    return AsymptoticPhase(phi, phi + math.atan(lam / b))


def envelope_2f1(n, lam, b):
    """2 Gamma(2b) / |Gamma(b + i lam)| * (2n)^(-b)."""
    b = _check_b(b)
    lg = float(np.real(log_gamma_complex(b + 1j * abs(lam))))
    return 2.0 * math.exp(math.lgamma(2 * b) - lg - b * math.log(2.0 * n))


def asymptotic_2f1(n, lam, b, terms=2):
    """Large-n form of R_n, where F(-n, b+i lam; 2b; 2) = (-i)^n R_n with R_n real.

    ``terms=1`` keeps the leading cosine, ``terms=2`` adds the 1/n
    correction with amplitude b sqrt(b^2 + lam^2) and phase phi1.
    """
    n = int(n)
    if n < 1:
        raise DomainError("asymptotic_2f1 needs n >= 1")
    ph = asymptotic_phase(lam, b)
    # n*pi/2 reduced mod 2*pi before combining with the smooth part
    quarter = (n % 4) * math.pi / 2.0
    theta = lam * math.log(2.0 * n) - quarter
    bracket = math.cos(theta - ph.phi)
    if terms >= 2:
        bracket -= b * math.hypot(b, lam) / n * math.cos(theta - ph.phi1)
    return envelope_2f1(n, lam, b) * bracket


def scaled_2f1(n, lam, b):
    """R_n = i^n F(-n, b+i lam; 2b; 2) = P_n / sqrt((2b)_n / n!), via the recursion."""
    b = _check_b(b)
    return float(pollaczek_eval(n, lam, b)) * math.exp(-_log_norm_2f1(int(n), b))


# ------------------------------------------------------- Christoffel sum


def _table_with_derivative(M, lam, b):
    c = recurrence_coefficients(M + 1, b)
    p = np.empty(M + 2)
    d = np.empty(M + 2)
    p[0], d[0] = 1.0, 0.0
    p[1], d[1] = lam / c[0], 1.0 / c[0]
    for n in range(1, M + 1):
        p[n + 1] = (lam * p[n] - c[n - 1] * p[n - 1]) / c[n]
        d[n + 1] = (p[n] + lam * d[n] - c[n - 1] * d[n - 1]) / c[n]
    return p, d, c


def christoffel_sum(M, lam, lam2, b):
    """Both sides of c_M Delta_M = (lam - lam2) sum_{n<=M} P_n(lam) P_n(lam2).

    Returns ``(direct, closed)`` with ``direct`` the sum and ``closed``
    c_M Delta_M / (lam - lam2), Delta_M = P_M(lam2) P_{M+1}(lam) -
    P_{M+1}(lam2) P_M(lam). For lam == lam2 the closed side is the
    confluent form c_M (P'_{M+1} P_M - P'_M P_{M+1}) with derivatives from
    the differentiated recursion.
    """
    b = _check_b(b)
    M = int(M)
    if M < 0:
        raise DomainError("christoffel_sum needs M >= 0")
    if lam == lam2:
        p, d, c = _table_with_derivative(M, float(lam), b)
        direct = float(np.dot(p[: M + 1], p[: M + 1]))
        closed = c[M] * (d[M + 1] * p[M] - d[M] * p[M + 1])
        return direct, float(closed)
    tab = pollaczek_table(M + 1, np.array([lam, lam2], dtype=float), b)
    p, q = tab[:, 0], tab[:, 1]
    direct = float(np.dot(p[: M + 1], q[: M + 1]))
    c_m = 0.5 * math.sqrt((M + 1.0) * (M + 2.0 * b))
    delta = q[M] * p[M + 1] - q[M + 1] * p[M]
    return direct, float(c_m * delta / (lam - lam2))


def christoffel_delta(M, lam, lam2, b):
    """Delta_M(lam, lam2) = P_M(lam2) P_{M+1}(lam) - P_{M+1}(lam2) P_M(lam)."""
    tab = pollaczek_table(int(M) + 1, np.array([lam, lam2], dtype=float), b)
    return float(tab[M, 1] * tab[M + 1, 0] - tab[M + 1, 1] * tab[M, 0])


# ------------------------------------------------------------ quadrature


def quadrature_cutoff(b, eps=1e-12, n_max=0, power=0):
    """Half-width L such that the tail of int P_m P_n lambda^power rho_b beyond |lambda| > L is below eps/10.

    Starts from the weight decay |Gamma(b+i lam)|^2 ~ 2 pi |lam|^(2b-1)
    e^(-pi |lam|) and grows L until the envelope sum_m P_m(L)^2 L^power
    rho_b(L) is small and decreasing.
    """
    b = _check_b(b)
    k = 2 * n_max + power + 2 * b
    L = max(8.0, 2.0 * k / math.pi)
    while True:
        env = float(np.sum(pollaczek_table(n_max, L, b) ** 2)) * L ** power * float(weight(L, b))
        # tail <= env / (pi - k/L) <= 2 env / pi once L >= 2k/pi
        if env * L < eps / 10.0:
            return L
        L *= 1.1


def integrate_line(func, L, epsabs=1e-13, epsrel=0.0, limit=20_000):
    """int_{-L}^{L} func(lam) d lam for a vector-valued ``func``.

    Folded onto [0, L] as func(lam) + func(-lam), so odd components cancel
    exactly when ``func`` has exact parity. Adaptive Gauss-Kronrod
    (``scipy.integrate.quad_vec``).
    """
    res, err = integrate.quad_vec(lambda x: np.asarray(func(x)) + np.asarray(func(-x)),
                                  0.0, L, epsabs=epsabs, epsrel=epsrel, norm="max",
                                  limit=limit)
    return res, err


def gram_matrix(n_max, b, eps=1e-12):
    """G_mn = int P_m P_n rho_b over the real line, m, n <= n_max, by adaptive quadrature."""
    b = _check_b(b)
    L = quadrature_cutoff(b, eps, n_max)

    def integrand(x):
        p = pollaczek_table(n_max, x, b)
        return np.outer(p, p) * float(weight(x, b))

    res, _ = integrate_line(integrand, L, epsabs=eps / 10.0)
    return res


def quadrature_moment(order, b, eps=1e-13):
    """int lambda^order rho_b by adaptive quadrature; independent of the Taylor route."""
    b = _check_b(b)
    L = quadrature_cutoff(b, eps, 0, power=order)
    res, _ = integrate_line(lambda x: np.array([x ** order * float(weight(x, b))]), L,
                            epsabs=eps / 10.0, epsrel=1e-14)
    return float(res[0])
