"""Two-mode realization of su(1,1) on the ladders |n + dn, n>.

    J0 = (N1 + N2 + 1)/2,  J1 = (a1+ a2+ + a1 a2)/2,  J2 = (a1+ a2+ - a1 a2)/2i

Each photon-number difference dn = N1 - N2 carries one irrep with
Casimir (dn^2 - 1)/4; the J1 matrix on the ladder is the Pollaczek
Jacobi matrix with c = (|dn| + 1)/2. For dn < 0 the kets are
|n, n + |dn|> and the roles of z1, z2 (q1, q2) are swapped.
"""
from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError
from .pollaczek import pollaczek_table, weight
from .specfun import bessel_i_entire, bessel_k_imag, gamma_abs_sq, hyp1f1, laguerre_table
from .one_mode import DEFAULT_N, Generator


@dataclass(frozen=True)
class TwoModeLabel:
    delta_n: int

    def __post_init__(self):
        if int(self.delta_n) != self.delta_n:
            raise DomainError("delta_n must be an integer")
        object.__setattr__(self, "delta_n", int(self.delta_n))

    @property
    def abs_delta(self):
        return abs(self.delta_n)

    @property
    def c(self):
        """Pollaczek parameter (|dn| + 1)/2, also the Bargmann index of the irrep."""
        return (self.abs_delta + 1) / 2.0

    @property
    def casimir(self):
        return (self.delta_n ** 2 - 1) / 4.0

    def ket(self, n):
        """Occupation numbers (n1, n2) of the n-th ladder state."""
        return (n + self.abs_delta, n) if self.delta_n >= 0 else (n, n + self.abs_delta)


def _label(label):
    return label if isinstance(label, TwoModeLabel) else TwoModeLabel(int(label))


@dataclass(frozen=True)
class TwoModeNRep:
    """Coefficients along the dn-ladder; ``kets[n]`` is the (n1, n2) pair of slot n."""

    label: TwoModeLabel
    value: float
    generator: Generator
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs.setflags(write=False)

    @property
    def size(self):
        return self.coeffs.shape[0]

    @property
    def kets(self):
        return [self.label.ket(n) for n in range(self.size)]

    def zrep(self, z1, z2):
        return two_mode_zrep_series(self.coeffs, self.label, z1, z2)


def two_mode_zrep_series(coeffs, label, z1, z2):
    """sum_n f_n z1^n1 z2^n2 / sqrt(n1! n2!) over the ladder kets."""
    label = _label(label)
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    if label.delta_n < 0:
        z1, z2 = z2, z1
    d = label.abs_delta
    t = z1 ** d / math.sqrt(math.factorial(d))
    w = z1 * z2
    acc = np.zeros(np.broadcast(z1, z2).shape, dtype=complex)
    for n, a in enumerate(coeffs):
        if n:
            t = t * w / math.sqrt(n * (n + d))
        acc = acc + a * t
    return acc[()] if acc.ndim == 0 else acc


# ---------------------------------------------------------------- J2


def j2_nrep_2(lam, label, N=DEFAULT_N):
    """f_n = (-i)^n sqrt(rho_c(lam)) P_n(lam, c) on |n + dn, n>.

    The unit phases make the sequence an eigenvector of J2; without them
    (real f_n) it is the eigenvector of J1 with the same eigenvalue.
    """
    if N < 2:
        raise DomainError("j2_nrep_2 needs N >= 2")
    label = _label(label)
    c = label.c
    p = pollaczek_table(N - 1, float(lam), c)
    phase = (-1j) ** (np.arange(N) % 4)
    coeffs = phase * math.sqrt(float(weight(lam, c))) * p
    return TwoModeNRep(label, float(lam), Generator.J2, coeffs)


def j2_zrep_2(lam, label, z1, z2):
    """sqrt(rho_c / Gamma(2c)) z1^|dn| e^{-z1 z2} 1F1(c - i lam; 2c; 2 z1 z2).

    For dn < 0 the arguments are interchanged.
    """
    label = _label(label)
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    if label.delta_n < 0:
        z1, z2 = z2, z1
    c = label.c
    w = z1 * z2
    norm = math.sqrt(float(weight(lam, c)) / math.gamma(2 * c))
    return norm * z1 ** label.abs_delta * np.exp(-w) * hyp1f1(c - 1j * lam, 2 * c, 2.0 * w)


def j2_qrep_2_delta0(lam, q1, q2):
    """Position-space J2 eigenfunction on the dn = 0 ladder.

    (1 / (pi |Gamma(1/2 + i lam)|)) |(q1 - q2)/(q1 + q2)|^{i lam} K_{i lam}(|q1^2 - q2^2| / 2)

    The power of the positive ratio is a unit-modulus phase, so the value
    is complex. The function is symmetric under q1 <-> q2 and conjugated
    (for the phase factor) under q2 -> -q2.

    Raises
    ------
    DomainError
        On the singular locus |q1| = |q2|.
    """
    q1 = np.asarray(q1, dtype=float)
    q2 = np.asarray(q2, dtype=float)
    if np.any(np.abs(q1) == np.abs(q2)):
        raise DomainError("j2_qrep_2_delta0 is singular on |q1| = |q2|")
    ratio = np.abs((q1 - q2) / (q1 + q2))
    s = np.abs(q1 * q1 - q2 * q2) / 2.0
    pref = 1.0 / (math.pi * math.sqrt(float(gamma_abs_sq(0.5, lam))))
    return pref * np.exp(1j * lam * np.log(ratio)) * bessel_k_imag(lam, s)


def j2_qrep_2_pair(lam, f, step=0.04, v_min=-60.0, s_max=60.0):
    """int int f(q1, q2) <q1, q2|lam, dn=0> dq1 dq2 for a smooth decaying f.

    Each of the four sectors |q1| > |q2|, |q2| > |q1| is parametrized by
    (r cosh t, r sinh t) up to sign and order. There the phase factor is
    e^{-2 i lam t}, the Bessel argument is s = r^2/2 and dq1 dq2 = ds dt,
    so the pairing becomes int ds K_{i lam}(s) int dt e^{-2 i lam t} F(s, t)
    with F the sum of f over the four sectors. The outer integral runs in
    v = ln s; both are trapezoid sums, which converge exponentially for
    these analytic, rapidly decaying integrands. ``f`` must be vectorized.
    Bilinear: conjugate f yourself for an inner product.
    """
    v = np.arange(v_min, math.log(s_max) + step / 2, step)
    s = np.exp(v)
    r = np.sqrt(2.0 * s)
    # |t| up to where 2 s cosh 2t exceeds ~ 2 s_max in every sector
    t_max = 0.5 * math.acosh(s_max / s[0]) + 1.0
    t = np.arange(-t_max, t_max + step / 2, step)
    rr = r[:, None]
    ch = rr * np.cosh(t)[None, :]
    sh = rr * np.sinh(t)[None, :]
    F = f(ch, sh) + f(-ch, -sh) + f(sh, ch) + f(-sh, -ch)
    inner = step * (F @ np.exp(-2j * lam * t))
    k = bessel_k_imag(lam, s)
    pref = 1.0 / (math.pi * math.sqrt(float(gamma_abs_sq(0.5, lam))))
    return complex(pref * step * np.sum(k * s * inner))


# ---------------------------------------------------------------- K+


def _check_eta(eta):
    eta = float(eta)
    if not eta > 0:
        raise DomainError(f"K+ eigenvalue must be > 0 (eta = 0 is the spectral endpoint), got {eta}")
    return eta


def kplus_nrep_2(eta, label, N=DEFAULT_N):
    """g_n = (-1)^n sqrt2 e^{-eta} (2 eta)^{d/2} sqrt(n!/(n+d)!) L_n^d(2 eta), d = |dn|.

    The factorial ratio and the powers are combined in log space.
    """
    eta = _check_eta(eta)
    label = _label(label)
    d = label.abs_delta
    n = np.arange(N)
    lag = laguerre_table(N - 1, float(d), 2.0 * eta)
    log_pref = (0.5 * math.log(2.0) - eta + 0.5 * d * math.log(2.0 * eta)
                + 0.5 * (np.array([math.lgamma(k + 1.0) - math.lgamma(k + d + 1.0) for k in n])))
    coeffs = np.where(n % 2 == 0, 1.0, -1.0) * np.exp(log_pref) * lag
    return TwoModeNRep(label, eta, Generator.KPLUS, coeffs.astype(float))


def kplus_zrep_2(eta, label, z1, z2):
    """sqrt2 e^{-eta} (z1/z2)^{d/2} e^{-z1 z2} I_d(2 sqrt(2 eta z1 z2)).

    Evaluated through the entire series
    sqrt2 e^{-eta} (2 eta)^{d/2} z1^d e^{-z1 z2} sum_k (2 eta z1 z2)^k / (k! (k+d)!),
    which is single-valued, so no branch choice is needed and z2 = 0 is allowed.
    """
    eta = _check_eta(eta)
    label = _label(label)
    z1 = np.asarray(z1, dtype=complex)
    z2 = np.asarray(z2, dtype=complex)
    if label.delta_n < 0:
        z1, z2 = z2, z1
    d = label.abs_delta
    w = z1 * z2
    series = bessel_i_entire(d, 2.0 * eta * w)
    return math.sqrt(2.0) * math.exp(-eta) * (2.0 * eta) ** (d / 2.0) * z1 ** d * np.exp(-w) * series


# --------------------------------------------------- ladder operators


def ladder_operators(label, N, dtype=np.clongdouble):
    """Dense N x N matrices (J0, J1, J2) on the truncated dn-ladder."""
    label = _label(label)
    d = label.abs_delta
    n = np.arange(N, dtype=np.longdouble)
    j0 = np.diag((2 * n + d + 1) / 2).astype(dtype)
    up = np.sqrt((n[:-1] + 1) * (n[:-1] + d + 1))
    # <n+1| a1+ a2+ |n>
    jp = np.zeros((N, N), dtype=dtype)
    jp[np.arange(1, N), np.arange(N - 1)] = up
    jm = jp.T.copy()
    j1 = (jp + jm) / 2
    j2 = (jp - jm) / (2 * 1j)
    return j0, j1, j2


def casimir_matrix(label, N):
    j0, j1, j2 = ladder_operators(label, N)
    return j0 @ j0 - j1 @ j1 - j2 @ j2


def casimir_apply(label, n, N=None):
    """<n| C2 |n> and the largest off-diagonal leak of C2 |n> on a truncated ladder.

    The truncation must exceed n + 1 so that |n> is an interior state;
    the default is n + 3.
    """
    N = n + 3 if N is None else N
    if n > N - 2:
        raise DomainError("casimir_apply needs n <= N - 2 (interior state)")
    col = casimir_matrix(label, N)[:, n]
    diag = col[n]
    leak = np.max(np.abs(np.delete(col, n))) if N > 1 else 0.0
    return float(diag.real), float(leak)


def j0_spectrum(label, N):
    """Eigenvalues of the dense J0 on the truncated ladder, ascending."""
    j0, _, _ = ladder_operators(label, N, dtype=np.complex128)
    return np.linalg.eigvalsh(j0)


def apply_j2(coeffs, label):
    """J2 acting on a coefficient vector along the ladder (truncated at the end)."""
    d = _label(label).abs_delta
    f = np.asarray(coeffs, dtype=complex)
    n = np.arange(f.shape[0] - 1, dtype=float)
    up = np.sqrt((n + 1) * (n + d + 1)) / 2
    out = np.zeros_like(f)
    out[1:] += up * f[:-1] / 1j
    out[:-1] -= up * f[1:] / 1j
    return out


def apply_kplus(coeffs, label):
    """K+ = J0 + J1 acting on a coefficient vector along the ladder."""
    d = _label(label).abs_delta
    f = np.asarray(coeffs, dtype=complex)
    N = f.shape[0]
    n = np.arange(N, dtype=float)
    up = np.sqrt((n[:-1] + 1) * (n[:-1] + d + 1)) / 2
    out = (2 * n + d + 1) / 2 * f
    out[1:] += up * f[:-1]
    out[:-1] += up * f[1:]
    return out


def eigen_residual(vec):
    """(G f - value f) on the interior slots 0..N-2."""
    apply = apply_j2 if vec.generator is Generator.J2 else apply_kplus
    return (apply(vec.coeffs, vec.label) - vec.value * vec.coeffs)[:-1]
