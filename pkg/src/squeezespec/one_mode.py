"""One-mode generalized eigenfunctions of J2 = (a^+2 - a^2)/4i and K+ = (a + a^+)^2/4.

Number basis (n-rep), holomorphic Fock-Bargmann functions (z-rep) and
position-space distributions (q-rep). Each generator has a doubled
spectrum carried by the even and odd number states.
"""
from dataclasses import dataclass
from enum import Enum
import math

import numpy as np
from numpy.polynomial.hermite import hermgauss
from scipy import integrate

from .errors import DomainError
from .pollaczek import pollaczek_table, weight
from .specfun import gamma_arg, hermite_functions, hyp1f1

DEFAULT_N = 128
PI_M14 = math.pi ** -0.25


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"

    @property
    def offset(self):
        return 0 if self is Parity.EVEN else 1

    @property
    def sign(self):
        return 1 if self is Parity.EVEN else -1

    @property
    def pollaczek_b(self):
        """Pollaczek parameter of the J2 family: 1/4 (even) or 3/4 (odd)."""
        return 0.25 if self is Parity.EVEN else 0.75


class Generator(str, Enum):
    J2 = "j2"
    KPLUS = "kplus"


def _parity(p):
    return p if isinstance(p, Parity) else Parity(str(p).lower())


@dataclass(frozen=True)
class NRepEigenvector:
    """Truncated number-basis coefficients f_0..f_{N-1} of a generalized eigenvector.

    ``value`` is lambda for J2 and eta for K+. The coefficient array is
    read-only.
    """

    value: float
    parity: Parity
    generator: Generator
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs.setflags(write=False)

    @property
    def size(self):
        return self.coeffs.shape[0]

    def zrep(self, z):
        """sum_n f_n z^n / sqrt(n!) over the stored coefficients."""
        return nrep_to_zrep(self.coeffs, z)


def nrep_to_zrep(coeffs, z):
    """Map number-basis coefficients to the Bargmann function sum a_n z^n / sqrt(n!)."""
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    t = np.ones_like(z)
    for n, a in enumerate(coeffs):
        if n:
            t = t * z / math.sqrt(n)
        if a != 0:
            acc = acc + a * t
    return acc[()] if acc.ndim == 0 else acc


# ---------------------------------------------------------------- J2


def j2_nrep(lam, parity, N=DEFAULT_N):
    """f_{2m+s} = (-i)^m sqrt(rho_b(lam)) P_m(lam, b), b = 1/4 (s=0) or 3/4 (s=1)."""
    if N < 2:
        raise DomainError("j2_nrep needs N >= 2")
    parity = _parity(parity)
    b = parity.pollaczek_b
    idx = np.arange(parity.offset, N, 2)
    m = np.arange(idx.size)
    p = pollaczek_table(max(idx.size - 1, 0), float(lam), b)
    coeffs = np.zeros(N, dtype=complex)
    coeffs[idx] = (-1j) ** (m % 4) * math.sqrt(float(weight(lam, b))) * p[: idx.size]
    return NRepEigenvector(float(lam), parity, Generator.J2, coeffs)


def j2_zrep(lam, parity, z):
    """Closed-form Bargmann function of |lam, e/o>.

    even: sqrt(rho_{1/4}) e^{-z^2/2} 1F1(1/4 - i lam; 1/2; z^2)
    odd:  sqrt(rho_{3/4}) e^{-z^2/2} z 1F1(3/4 - i lam; 3/2; z^2)
    """
    parity = _parity(parity)
    z = np.asarray(z, dtype=complex)
    b = parity.pollaczek_b
    z2 = z * z
    f = hyp1f1(b - 1j * lam, 2 * b, z2)
    out = math.sqrt(float(weight(lam, b))) * np.exp(-z2 / 2.0) * f
    if parity is Parity.ODD:
        out = out * z
    return out


def j2_qrep_phase(lam, parity):
    """exp(i(arg Gamma(b + i lam) + lam ln 2)), fixing <0|lam,e> and <1|lam,o> real positive."""
    b = _parity(parity).pollaczek_b
    return np.exp(1j * (gamma_arg(b, lam) + lam * math.log(2.0)))


def j2_qrep(lam, parity, q):
    """<q|lam, e/o> = phase * (2 pi)^(-1/2) |q|^(-1/2 - 2i lam) (times sgn q for odd).

    Raises
    ------
    DomainError
        At q = 0, where the distribution is singular.
    """
    parity = _parity(parity)
    q = np.asarray(q, dtype=float)
    if np.any(q == 0):
        raise DomainError("j2_qrep is singular at q = 0")
    aq = np.abs(q)
    val = j2_qrep_phase(lam, parity) / math.sqrt(2 * math.pi) * np.exp(-(0.5 + 2j * lam) * np.log(aq))
    if parity is Parity.ODD:
        val = val * np.sign(q)
    return val


def j2_qrep_pair(lam, parity, f, phased=True, q_max=40.0, epsabs=1e-14):
    """int f(q) <q|lam> dq for a smooth, decaying test function f.

    Each half line is mapped through q = e^t, which turns the |q|^(-1/2)
    singularity and the log-periodic oscillation at q = 0 into the smooth
    factor e^{t/2 - 2 i lam t}. Bilinear: conjugate f yourself for an
    inner product. ``phased=False`` drops the constant phase factor.
    """
    parity = _parity(parity)
    s = parity.sign
    t_lo = -80.0
    t_hi = math.log(q_max)

    def integrand(t):
        q = math.exp(t)
        v = (f(q) + s * f(-q)) * math.exp(0.5 * t) * complex(math.cos(2 * lam * t), -math.sin(2 * lam * t))
        return np.array([v.real, v.imag])

    res, _ = integrate.quad_vec(integrand, t_lo, t_hi, epsabs=epsabs, epsrel=0.0, norm="max",
                                limit=20_000)
    val = complex(res[0], res[1]) / math.sqrt(2 * math.pi)
    if phased:
        val *= complex(j2_qrep_phase(lam, parity))
    return val


# ---------------------------------------------------------------- K+


@dataclass(frozen=True)
class DeltaPair:
    """(1 / (2 sqrt(2 eta))) [delta(q - sqrt(2 eta)) + sign delta(q + sqrt(2 eta))]."""

    eta: float
    sign: int

    def __post_init__(self):
        if not self.eta > 0:
            raise DomainError("DeltaPair needs eta > 0")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def amplitude(self):
        return 1.0 / (2.0 * math.sqrt(2.0 * self.eta))

    @property
    def locations(self):
        x = math.sqrt(2.0 * self.eta)
        return (x, -x)

    def pair(self, f):
        """Action on a test function: amplitude * (f(x0) + sign f(-x0))."""
        x0, x1 = self.locations
        return self.amplitude * (f(x0) + self.sign * f(x1))

    def as_dict(self):
        return {"eta": self.eta, "locations": list(self.locations),
                "amplitude": self.amplitude, "signs": [1, self.sign]}


def _check_eta(eta):
    eta = float(eta)
    if not eta > 0:
        raise DomainError(f"K+ eigenvalue must be > 0 (eta = 0 is the spectral endpoint), got {eta}")
    return eta


def kplus_qrep(eta, parity):
    return DeltaPair(_check_eta(eta), _parity(parity).sign)


def kplus_nrep(eta, parity, N=DEFAULT_N):
    """g_n(eta) = (2 eta)^(-1/2) u_n(sqrt(2 eta)) on the parity-matching n, zero elsewhere.

    u_n are the normalized Hermite functions, so N_n H_n(sqrt(2 eta))
    e^{-eta} never forms the overflowing factors separately.
    """
    eta = _check_eta(eta)
    parity = _parity(parity)
    x = math.sqrt(2.0 * eta)
    u = hermite_functions(N - 1, x)
    coeffs = np.zeros(N, dtype=complex)
    idx = np.arange(parity.offset, N, 2)
    coeffs[idx] = u[idx] / x
    return NRepEigenvector(eta, parity, Generator.KPLUS, coeffs)


def kplus_zrep(eta, parity, z):
    """pi^(-1/4) (2 eta)^(-1/2) e^{-eta} e^{-z^2/2} {cosh, sinh}(2 sqrt(eta) z)."""
    eta = _check_eta(eta)
    parity = _parity(parity)
    z = np.asarray(z, dtype=complex)
    arg = 2.0 * math.sqrt(eta) * z
    hyper = np.cosh(arg) if parity is Parity.EVEN else np.sinh(arg)
    return PI_M14 / math.sqrt(2.0 * eta) * math.exp(-eta) * np.exp(-z * z / 2.0) * hyper


# ------------------------------------------------------------ Bargmann


def bargmann_kernel(z, q):
    """K(z, q) = pi^(-1/4) exp(-z^2/2 - q^2/2 + sqrt(2) z q)."""
    z = np.asarray(z, dtype=complex)
    q = np.asarray(q, dtype=float)
    return PI_M14 * np.exp(-z * z / 2.0 - q * q / 2.0 + math.sqrt(2.0) * z * q)


def bargmann_transform(f, z, order=96):
    """int K(z, q) f(q) dq by Gauss-Hermite quadrature.

    Suited to f of the form (polynomial) x exp(-q^2/2), e.g. oscillator
    eigenfunctions; ``f`` must accept an array of nodes.
    """
    x, w = hermgauss(order)
    z = np.asarray(z, dtype=complex)
    fx = np.asarray(f(x))
    # K(z,q) f(q) = e^{-q^2} [pi^(-1/4) e^{-z^2/2 + sqrt2 z q + q^2/2} f(q)]
    kern = PI_M14 * np.exp(-z[..., None] ** 2 / 2.0 + math.sqrt(2.0) * z[..., None] * x + x * x / 2.0)
    return np.sum(w * kern * fx, axis=-1)


# ------------------------------------------------- number-basis operators


def annihilation(N):
    """Truncated N x N matrix of a."""
    return np.diag(np.sqrt(np.arange(1, N, dtype=float)), 1)


def j2_matrix(N):
    """Compression of J2 to span{|0>..|N-1>} from exact matrix elements."""
    n = np.arange(N - 2, dtype=float)
    up = np.sqrt((n + 1.0) * (n + 2.0))
    # <n+2|J2|n> = sqrt((n+1)(n+2)) / 4i
    m = np.zeros((N, N), dtype=complex)
    m[np.arange(2, N), np.arange(N - 2)] = up / 4j
    m[np.arange(N - 2), np.arange(2, N)] = -up / 4j
    return m


def kplus_matrix(N):
    n = np.arange(N, dtype=float)
    m = np.diag((2.0 * n + 1.0) / 4.0).astype(complex)
    up = np.sqrt((n[:-2] + 1.0) * (n[:-2] + 2.0)) / 4.0
    m[np.arange(2, N), np.arange(N - 2)] = up
    m[np.arange(N - 2), np.arange(2, N)] = up
    return m


def j2_apply_nrep(coeffs):
    """J2 applied to a truncated coefficient vector (entries beyond the end taken as zero)."""
    f = np.asarray(coeffs, dtype=complex)
    N = f.shape[0]
    out = np.zeros(N, dtype=complex)
    n = np.arange(N, dtype=float)
    # (a^+2 f)_n = sqrt(n(n-1)) f_{n-2};  (a^2 f)_n = sqrt((n+1)(n+2)) f_{n+2}
    out[2:] += np.sqrt(n[2:] * (n[2:] - 1.0)) * f[:-2]
    out[:-2] -= np.sqrt((n[:-2] + 1.0) * (n[:-2] + 2.0)) * f[2:]
    return out / 4j


def kplus_apply_nrep(coeffs):
    f = np.asarray(coeffs, dtype=complex)
    N = f.shape[0]
    n = np.arange(N, dtype=float)
    out = (2.0 * n + 1.0) / 4.0 * f
    out[2:] += np.sqrt(n[2:] * (n[2:] - 1.0)) / 4.0 * f[:-2]
    out[:-2] += np.sqrt((n[:-2] + 1.0) * (n[:-2] + 2.0)) / 4.0 * f[2:]
    return out


def j2_recursion_residual(vec):
    """sqrt(n(n-1)) f_{n-2} - sqrt((n+1)(n+2)) f_{n+2} - 4 i lam f_n for n = 0..N-3."""
    f = vec.coeffs
    N = f.shape[0]
    n = np.arange(N - 2, dtype=float)
    lower = np.zeros(N - 2, dtype=complex)
    lower[2:] = np.sqrt(n[2:] * (n[2:] - 1.0)) * f[: N - 4]
    return lower - np.sqrt((n + 1.0) * (n + 2.0)) * f[2:] - 4j * vec.value * f[: N - 2]


def eigen_residual(vec):
    """(G f - value f) on the interior indices 0..N-3 for G = J2 or K+."""
    apply = j2_apply_nrep if vec.generator is Generator.J2 else kplus_apply_nrep
    return (apply(vec.coeffs) - vec.value * vec.coeffs)[:-2]
