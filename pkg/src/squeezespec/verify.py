"""Numerical verification suites.

Each suite compares an analytic statement with an independent oracle
(quadrature, dense matrices, series summation, exact arithmetic) and
returns a :class:`VerificationReport` of measured errors against
tolerances. Reports are deterministic for fixed seeds and truncations.
"""
from dataclasses import dataclass, field
import json
import math
import time

import mpmath
import numpy as np
from scipy import integrate, special

from . import classifier, one_mode, two_mode
from .pollaczek import (asymptotic_2f1, christoffel_delta, christoffel_sum,
                        envelope_2f1, gauss_nodes_weights, gram_matrix, integrate_line,
                        moments_taylor, pollaczek_table, pollaczek_via_2f1, quadrature_cutoff,
                        quadrature_moment, scaled_2f1, weight)
from .specfun import bessel_k_imag, gamma_abs_sq, gamma_arg, hermite_functions, log_gamma_complex

DEFAULT_SEED = 1729
B_LIST = (0.25, 0.5, 0.75, 1.0, 1.5)
LAMBDA_GRID = (0.0, 0.5, -0.5, 2.0, -2.0, 5.0, -5.0)
ETA_GRID = (0.5, 2.0, 5.0)


@dataclass(frozen=True)
class Case:
    description: str
    error: float
    tolerance: float

    def __post_init__(self):
        object.__setattr__(self, "error", float(self.error))
        object.__setattr__(self, "tolerance", float(self.tolerance))

    @property
    def passed(self):
        # NaN compares false, so it fails
        return bool(self.error <= self.tolerance)

    def as_dict(self):
        return {"description": self.description, "error": self.error,
                "tolerance": self.tolerance, "pass": self.passed}


@dataclass
class VerificationReport:
    suite: str
    cases: list
    parameters: dict = field(default_factory=dict)
    runtime: float = 0.0

    def __post_init__(self):
        self.cases = sorted(self.cases, key=lambda c: c.description)

    @property
    def passed(self):
        return all(c.passed for c in self.cases)

    def failures(self):
        return [c for c in self.cases if not c.passed]

    def with_tolerance(self, tol):
        """Copy with every case tolerance replaced by ``tol``."""
        cases = [Case(c.description, c.error, tol) for c in self.cases]
        return VerificationReport(self.suite, cases, dict(self.parameters), self.runtime)

    def as_dict(self):
        # runtime is left out so that identical runs serialize identically
        return {"suite": self.suite, "parameters": self.parameters,
                "pass": self.passed, "cases": [c.as_dict() for c in self.cases]}

    def table(self):
        width = max([len(c.description) for c in self.cases] + [11])
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'} "
                 f"({len(self.cases)} cases, {self.runtime:.2f} s)",
                 f"  {'description':<{width}}  {'error':>10}  {'tolerance':>10}  result"]
        for c in self.cases:
            lines.append(f"  {c.description:<{width}}  {c.error:10.3e}  {c.tolerance:10.3e}  "
                         f"{'pass' if c.passed else 'FAIL'}")
        return "\n".join(lines)


def _report(suite, cases, **params):
    return VerificationReport(suite, cases, params)


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.runtime = time.perf_counter() - t0
        return rep
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _max(xs):
    return float(np.max(np.abs(np.asarray(xs)))) if np.size(xs) else 0.0


# ----------------------------------------------------- orthonormality


@_timed
def run_orthonormality(b_list=B_LIST, n_max=20, tol=1e-8):
    """Gram matrices of P_0..P_{n_max} against rho_b by adaptive quadrature."""
    cases = []
    for b in b_list:
        g = gram_matrix(n_max, b)
        dev = g - np.eye(n_max + 1)
        cases.append(Case(f"b={b:g} max |G - I|, n <= {n_max}", _max(dev), tol))
        cases.append(Case(f"b={b:g} int rho = 1", abs(g[0, 0] - 1), 1e-10))
        if n_max >= 1:
            cases.append(Case(f"b={b:g} G[0,1] = 0 by parity", abs(g[0, 1]), 1e-14))
        if n_max >= 5:
            cases.append(Case(f"b={b:g} G[5,5] = 1", abs(g[5, 5] - 1), tol))
    return _report("orthonormality", cases, b_list=list(b_list), n_max=n_max)


# ------------------------------------------------------------ moments


@_timed
def run_moments(b_list=B_LIST, max_order=12, gauss_m=80, tol=1e-10):
    """Even moments from exact Taylor coefficients, quadrature and the Gauss rule."""
    cases = []
    for b in b_list:
        taylor = moments_taylor(max_order, b)
        nodes, w = gauss_nodes_weights(gauss_m, b)
        for k in range(max_order + 1):
            if k % 2:
                cases.append(Case(f"b={b:g} order {k:02d} taylor = 0", abs(taylor[k]), 0.0))
                continue
            quad = quadrature_moment(k, b)
            gauss = float(np.dot(w, nodes ** k))
            scale = max(abs(taylor[k]), 1.0)
            cases.append(Case(f"b={b:g} order {k:02d} taylor vs quadrature",
                              abs(taylor[k] - quad) / scale, tol))
            cases.append(Case(f"b={b:g} order {k:02d} taylor vs gauss M={gauss_m}",
                              abs(taylor[k] - gauss) / scale, tol))
            cases.append(Case(f"b={b:g} order {k:02d} quadrature vs gauss M={gauss_m}",
                              abs(quad - gauss) / scale, tol))
        if max_order >= 2:
            cases.append(Case(f"b={b:g} second moment = b/2", abs(taylor[2] - b / 2), tol))
    return _report("moments", cases, b_list=list(b_list), max_order=max_order, gauss_m=gauss_m)


# ----------------------------------------------------------- parseval


def random_state(rng, size):
    c = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    return c / np.linalg.norm(c)


def one_mode_spectral_mass(states, eps=1e-10):
    """int (|<lam,e|psi>|^2 + |<lam,o|psi>|^2) d lam for each row of ``states``."""
    states = np.atleast_2d(np.asarray(states, dtype=complex))
    n = states.shape[1]
    ev, od = states[:, 0::2], states[:, 1::2]
    me, mo = ev.shape[1] - 1, od.shape[1] - 1
    L = max(quadrature_cutoff(0.25, eps, me), quadrature_cutoff(0.75, eps, max(mo, 0)))
    ph_e = 1j ** (np.arange(me + 1) % 4)
    ph_o = 1j ** (np.arange(mo + 1) % 4)

    def integrand(x):
        # <lam,e|psi> = sum conj(f_2m) c_2m with conj(f_2m) = i^m sqrt(rho) P_m
        amp_e = ev @ (ph_e * pollaczek_table(me, x, 0.25)) * math.sqrt(float(weight(x, 0.25)))
        out = np.abs(amp_e) ** 2
        if n > 1:
            amp_o = od @ (ph_o * pollaczek_table(mo, x, 0.75)) * math.sqrt(float(weight(x, 0.75)))
            out = out + np.abs(amp_o) ** 2
        return out

    res, _ = integrate_line(integrand, L, epsabs=eps / 10)
    return res


def two_mode_spectral_mass(states, delta_n, eps=1e-10):
    """int |<lam, dn|psi>|^2 d lam for each row of ``states`` (coefficients along the dn-ladder)."""
    states = np.atleast_2d(np.asarray(states, dtype=complex))
    m = states.shape[1] - 1
    c = two_mode.TwoModeLabel(delta_n).c
    L = quadrature_cutoff(c, eps, m)
    ph = 1j ** (np.arange(m + 1) % 4)

    def integrand(x):
        amp = states @ (ph * pollaczek_table(m, x, c)) * math.sqrt(float(weight(x, c)))
        return np.abs(amp) ** 2

    res, _ = integrate_line(integrand, L, epsabs=eps / 10)
    return res


@_timed
def run_parseval(mode="both", trials=20, seed=DEFAULT_SEED, tol=1e-6, n_one=24, n_two=20):
    """sum |c_n|^2 against the spectral integral of |<lam|psi>|^2 for random states."""
    cases = []
    rng = np.random.default_rng(seed)
    if mode in ("one", "both"):
        states = np.array([random_state(rng, n_one + 1) for _ in range(trials)])
        mass = one_mode_spectral_mass(states)
        for t in range(trials):
            cases.append(Case(f"one-mode random state {t:02d}, n <= {n_one}", abs(mass[t] - 1.0), tol))
        basis = np.eye(2)
        for k, m in enumerate(one_mode_spectral_mass(basis)):
            cases.append(Case(f"one-mode |{k}>: int rho_{(2 * k + 1) / 4:g} = 1", abs(m - 1.0), tol))
    if mode in ("two", "both"):
        for t in range(trials):
            d = t % 3
            psi = random_state(rng, n_two + 1)
            m = two_mode_spectral_mass(psi, d)[0]
            cases.append(Case(f"two-mode random state {t:02d}, dn={d}, n <= {n_two}",
                              abs(m - 1.0), tol))
    return _report("parseval", cases, mode=mode, trials=trials, seed=seed)


# ------------------------------------------------------- completeness


def _gaussian_coefficients(M, b, center, width):
    """a_n = int P_n g rho_b for g(lam) = exp(-(lam - center)^2 / (2 width^2))."""
    half = 12.0 * width
    f = lambda x: pollaczek_table(M, x, b) * math.exp(-0.5 * ((x - center) / width) ** 2) * float(weight(x, b))
    res, _ = integrate.quad_vec(f, center - half, center + half, epsabs=1e-15, epsrel=0.0,
                                norm="max", limit=5000)
    return res


def _bump_coefficients(M, b, center, radius):
    def bump(x):
        y = (x - center) / radius
        return math.exp(-1.0 / (1.0 - y * y)) if abs(y) < 1 else 0.0

    f = lambda x: pollaczek_table(M, x, b) * bump(x) * float(weight(x, b))
    res, _ = integrate.quad_vec(f, center - radius, center + radius, epsabs=1e-15, epsrel=0.0,
                                norm="max", limit=5000)
    return res


def leading_delta(M, lam, lam2, b):
    """A(lam) A(lam2) sin((lam - lam2) ln 2M - (phi - phi')) / M, the large-M form of Delta_M."""
    amp = lambda x: 2.0 ** (1 - b) * math.sqrt(math.gamma(2 * b) / float(gamma_abs_sq(b, x)))
    phase = float(gamma_arg(b, lam) - gamma_arg(b, lam2))
    return amp(lam) * amp(lam2) / M * math.sin((lam - lam2) * math.log(2 * M) - phase), amp(lam) * amp(lam2)


@_timed
def run_completeness_delta(b=0.5, m_list=(100, 400, 1600, 6400), lambda0=0.0, width=0.5,
                           smear_m=500, draws=100, seed=DEFAULT_SEED, tol=1e-9):
    """Christoffel identity, large-M form of Delta_M, and smeared partial sums."""
    cases = []
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(draws):
        M = int(rng.integers(0, 61))
        bb = float(rng.uniform(0.1, 3.0))
        lam, lam2 = rng.uniform(-5, 5, size=2)
        direct, closed = christoffel_sum(M, lam, lam2, bb)
        worst = max(worst, abs(direct - closed) / abs(direct))
    cases.append(Case(f"christoffel identity, {draws} draws, M <= 60", worst, tol))
    direct, closed = christoffel_sum(60, 0.8, 0.8, b)
    cases.append(Case("christoffel confluent form lam = lam', M = 60", abs(direct - closed) / direct, tol))

    # |Delta_M - leading| = O(1/M^2) relative to A A'; the constant stays below 25 for |lam| <= 3
    for lam, lam2 in ((0.7, -0.4), (2.0, 1.5), (0.1, -3.0), (3.0, -3.0)):
        const = 0.0
        for M in m_list:
            lead, amp2 = leading_delta(M, lam, lam2, b)
            const = max(const, M * M * abs(christoffel_delta(M, lam, lam2, b) - lead) / amp2)
        cases.append(Case(f"Delta_M leading form, lam={lam:g}, lam'={lam2:g}: M^2 * remainder",
                          const, 25.0))

    a = _gaussian_coefficients(smear_m, b, lambda0, width)
    partial = float(np.dot(pollaczek_table(smear_m, lambda0, b), a))
    cases.append(Case(f"smeared delta, gaussian width {width:g} at {lambda0:g}, M = {smear_m}",
                      abs(partial - 1.0), 1e-3))

    a1 = _bump_coefficients(smear_m, b, -1.5, 0.8)
    a2 = _bump_coefficients(smear_m, b, 1.5, 0.8)
    cases.append(Case(f"disjoint supports, M = {smear_m}", abs(float(np.dot(a1, a2))), 1e-4))
    return _report("completeness", cases, b=b, seed=seed, smear_m=smear_m)


# --------------------------------------------------------- asymptotic


def asymptotic_errors(b, lam, n_list, terms):
    """Pair-RSS error sqrt(e_n^2 + e_{n+1}^2) / E_n of the large-n form for each n.

    Consecutive n are a quarter period apart in the cosine, so the pair
    norm removes the oscillation of the error and leaves its envelope.
    """
    out = []
    for n in n_list:
        e = [scaled_2f1(k, lam, b) - asymptotic_2f1(k, lam, b, terms) for k in (n, n + 1)]
        out.append(math.hypot(*e) / envelope_2f1(n, lam, b))
    return np.array(out)


def decay_exponent(n_list, errors):
    return float(np.polyfit(np.log(n_list), np.log(errors), 1)[0])


@_timed
def run_asymptotic(b_list=(0.25, 0.75), lam_list=(0.5, 2.0), n_list=(256, 512, 1024, 2048, 4096)):
    """Decay exponents of the one- and two-term large-n forms, amplitude and phase checks."""
    cases = []
    n_list = list(n_list)
    for b in b_list:
        for lam in lam_list:
            tag = f"b={b:g} lam={lam:g}"
            s1 = decay_exponent(n_list, asymptotic_errors(b, lam, n_list, 1))
            s2 = decay_exponent(n_list, asymptotic_errors(b, lam, n_list, 2))
            cases.append(Case(f"{tag} one-term error exponent (expect -1)", abs(s1 + 1.0), 0.2))
            cases.append(Case(f"{tag} two-term error exponent (expect -2)", abs(s2 + 2.0), 0.2))
            n = 1024
            rss = lambda k: math.hypot(scaled_2f1(k, lam, b), scaled_2f1(k + 1, lam, b))
            ratio = rss(4 * n) / rss(n)
            cases.append(Case(f"{tag} amplitude ratio n=4096 vs 1024 = 4^-b", abs(ratio * 4 ** b - 1), 1e-2))
    b = b_list[0]
    odd = [abs(scaled_2f1(n + 1, 0.0, b)) for n in n_list]
    cases.append(Case(f"b={b:g} lam=0 odd n vanish", max(odd), 0.0))
    n, lam = 512, lam_list[0]
    exact = pollaczek_via_2f1(n, lam, b)
    rec = float(pollaczek_table(n, lam, b)[n])
    cases.append(Case(f"b={b:g} lam={lam:g} recursion vs exact 2F1 at n={n}",
                      abs(rec - exact) / max(abs(exact), 1e-300), 1e-10))
    return _report("asymptotic", cases, b_list=list(b_list), lam_list=list(lam_list), n_list=n_list)


# ----------------------------------------------- cross representation


def z_grid(radius, count=5):
    """count x count grid of complex points with |z| <= radius."""
    s = np.linspace(-radius / math.sqrt(2), radius / math.sqrt(2), count)
    return (s[:, None] + 1j * s[None, :]).ravel()


def _u(n):
    return lambda q: float(hermite_functions(n, q)[n])


@_timed
def run_cross_representation(N=128, lambda_grid=LAMBDA_GRID, eta_grid=ETA_GRID):
    """n-rep residuals, n <-> z series, q-rep overlaps and the two-mode ladder."""
    cases = []
    zs = z_grid(2.0)
    for lam in lambda_grid:
        for p in one_mode.Parity:
            v = one_mode.j2_nrep(lam, p, N)
            cases.append(Case(f"one-mode J2 recursion residual lam={lam:g} {p.value}",
                              _max(one_mode.j2_recursion_residual(v)), 1e-12))
            cases.append(Case(f"one-mode J2 n->z series lam={lam:g} {p.value}",
                              _max(v.zrep(zs) - one_mode.j2_zrep(lam, p, zs)), 1e-10))
    for eta in eta_grid:
        for p in one_mode.Parity:
            v = one_mode.kplus_nrep(eta, p, N)
            cases.append(Case(f"one-mode K+ eigen residual eta={eta:g} {p.value}",
                              _max(one_mode.eigen_residual(v)), 1e-10))
            cases.append(Case(f"one-mode K+ n->z series eta={eta:g} {p.value}",
                              _max(v.zrep(zs) - one_mode.kplus_zrep(eta, p, zs)), 1e-10))
            # pairing the delta pair with the Bargmann kernel is the closed z-form
            dp = one_mode.kplus_qrep(eta, p)
            paired = np.array([dp.pair(lambda q: complex(one_mode.bargmann_kernel(z, q))) for z in zs])
            closed = one_mode.kplus_zrep(eta, p, zs)
            cases.append(Case(f"one-mode K+ delta pair vs z-form eta={eta:g} {p.value}",
                              _max(paired - closed) / _max(closed), 1e-14))
            k = p.offset
            g = dp.pair(_u(k))
            cases.append(Case(f"one-mode K+ g_{k} vs delta pairing eta={eta:g}",
                              abs(g - v.coeffs[k].real) / abs(g), 1e-13))

    for lam in np.linspace(-3, 3, 7):
        lam = float(lam)
        a0 = one_mode.j2_qrep_pair(lam, "even", _u(0))
        a1 = one_mode.j2_qrep_pair(lam, "odd", _u(1))
        cases.append(Case(f"q-rep <0|lam,e> = sqrt(rho_1/4), lam={lam:g}",
                          abs(a0 - math.sqrt(float(weight(lam, 0.25)))), 1e-8))
        cases.append(Case(f"q-rep <1|lam,o> = sqrt(rho_3/4), lam={lam:g}",
                          abs(a1 - math.sqrt(float(weight(lam, 0.75)))), 1e-8))
        raw = one_mode.j2_qrep_pair(lam, "even", _u(0), phased=False)
        ref = (2 * math.pi ** 3) ** -0.25 * complex(np.exp(log_gamma_complex(0.25 - 1j * lam)
                                                           - 1j * lam * math.log(2.0)))
        cases.append(Case(f"q-rep unphased vacuum overlap, lam={lam:g}", abs(raw - ref), 1e-8))

    zb = np.array([0.3 + 0.2j, 1.5 - 1.0j, -1.2 + 1.4j])
    for n in range(7):
        got = one_mode.bargmann_transform(lambda q, n=n: hermite_functions(n, q)[n], zb)
        cases.append(Case(f"Bargmann transform of u_{n} = z^n/sqrt(n!)",
                          _max(got - zb ** n / math.sqrt(math.factorial(n))), 1e-10))

    for d in (0, 1, 2):
        for lam in lambda_grid:
            v = two_mode.j2_nrep_2(lam, d, N)
            cases.append(Case(f"two-mode J2 eigen residual dn={d} lam={lam:g}",
                              _max(two_mode.eigen_residual(v)), 1e-12))
        for eta in eta_grid:
            v = two_mode.kplus_nrep_2(eta, d, N)
            cases.append(Case(f"two-mode K+ eigen residual dn={d} eta={eta:g}",
                              _max(two_mode.eigen_residual(v)), 1e-10))
    z1, z2 = z_grid(1.5, 3), z_grid(1.5, 3)[::-1] * 1j
    for d in (0, 1, 2, -1):
        v = two_mode.j2_nrep_2(0.7, d, N)
        cases.append(Case(f"two-mode J2 n->z series dn={d}",
                          _max(v.zrep(z1, z2) - two_mode.j2_zrep_2(0.7, d, z1, z2)), 1e-10))
        v = two_mode.kplus_nrep_2(1.3, d, N)
        cases.append(Case(f"two-mode K+ n->z series dn={d}",
                          _max(v.zrep(z1, z2) - two_mode.kplus_zrep_2(1.3, d, z1, z2)), 1e-9))
    mirror = two_mode.j2_nrep_2(0.7, -2, 16).coeffs - two_mode.j2_nrep_2(0.7, 2, 16).coeffs
    cases.append(Case("two-mode dn=-2 coefficients equal dn=2", _max(mirror), 0.0))

    for d in (0, 1, 2, 3):
        cmat = two_mode.casimir_matrix(d, 42)
        target = (d * d - 1) / 4.0
        dev = cmat[:, :41] - target * np.eye(42, 41)
        cases.append(Case(f"two-mode Casimir dn={d} = {target:g}, n <= 40", _max(dev), 1e-13))
        spec = two_mode.j0_spectrum(d, 30)
        cases.append(Case(f"two-mode J0 spectrum dn={d}",
                          _max(spec - ((d + 1) / 2 + np.arange(30))), 1e-13))

    for lam in (0.0, 0.5, -1.3):
        f = two_mode.j2_nrep_2(lam, 0, 3).coeffs
        for n in range(3):
            proj = two_mode.j2_qrep_2_pair(
                lam, lambda a, b, n=n: hermite_functions(n, a)[n] * hermite_functions(n, b)[n])
            cases.append(Case(f"two-mode q-rep projection <{n},{n}|lam={lam:g}>", abs(proj - f[n]), 1e-6))
    return _report("cross_representation", cases, N=N)


# ----------------------------------------------------------- classifier


def random_discrete_hamiltonians(count, seed=DEFAULT_SEED):
    """Seeded instances with A > B whose low levels converge well inside N = 96."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        A = rng.uniform(0.5, 2.0)
        out.append(classifier.QuadHamiltonian(A, rng.uniform(0.0, 0.6 * A), rng.uniform(0.0, 1.5),
                                              rng.uniform(-1.0, 1.0), rng.uniform(0, 2 * math.pi),
                                              rng.uniform(0, 2 * math.pi)))
    return out


@_timed
def run_classifier(instances=10, seed=DEFAULT_SEED, N=96, levels=5, tol=1e-6):
    """Predicted discrete levels against the truncated number-basis matrix."""
    cases = []
    for i, h in enumerate(random_discrete_hamiltonians(instances, seed)):
        c = classifier.classify(h)
        ev = classifier.numeric_spectrum_check(h, N)[:levels]
        cases.append(Case(f"random A>B instance {i:02d}: {levels} lowest levels, N={N}",
                          _max(ev - c.levels(levels)), tol))
    K = classifier.SpectrumKind
    examples = [
        (classifier.QuadHamiltonian(1, 0, 0), K.DISCRETE_EQUIDISTANT),
        (classifier.QuadHamiltonian(0, 1, 0), K.DOUBLED_REAL_LINE),
        (classifier.QuadHamiltonian(0.5, 0.5, 0), K.DOUBLED_HALF_AXIS),
        (classifier.QuadHamiltonian(0.5, 0.5, 1, 0, 0, math.pi / 2), K.FULL_REAL_LINE),
    ]
    for h, kind in examples:
        got = classifier.classify(h).kind
        cases.append(Case(f"kind of A={h.A:g} B={h.B:g} C={h.C:g} is {kind.value}",
                          float(got is not kind), 0.0))
    ev = classifier.numeric_spectrum_check(classifier.QuadHamiltonian(1, 0, 0), 64)[:5]
    cases.append(Case("A=1 B=C=0 levels 1, 3, 5, 7, 9 at N=64", _max(ev - [1, 3, 5, 7, 9]), 1e-10))
    lo, hi = classifier.instability_probe(classifier.QuadHamiltonian(0.5, 0.5, 0), 1e-3)
    ok = lo.kind is K.DISCRETE_EQUIDISTANT and hi.kind is K.DOUBLED_REAL_LINE
    cases.append(Case("instability probe at A=B=1/2", float(not ok), 0.0))
    return _report("classifier", cases, instances=instances, seed=seed, N=N)


# --------------------------------------------------------------- bessel


@_timed
def run_bessel(tol=1e-9):
    """K_{i lam} against scipy K0 and mpmath, and q1 <-> q2 symmetry of the dn=0 q-form."""
    cases = []
    x = np.linspace(0.1, 10.0, 100)
    k = bessel_k_imag(0.0, x)
    cases.append(Case("K_{i0} vs scipy k0 on [0.1, 10]", _max((k - special.k0(x)) / special.k0(x)), tol))
    for lam in (0.5, 2.0):
        xs = (0.01, 0.5, 3.0, 8.0)
        got = bessel_k_imag(lam, np.array(xs))
        ref = np.array([float(mpmath.re(mpmath.besselk(1j * lam, v))) for v in xs])
        cases.append(Case(f"K_(i{lam:g}) vs mpmath besselk", _max(got - ref) / _max(ref), tol))
    rng = np.random.default_rng(DEFAULT_SEED)
    q1, q2 = rng.uniform(-3, 3, size=(2, 20))
    for lam in (0.0, 0.8, -2.0):
        a = two_mode.j2_qrep_2_delta0(lam, q1, q2)
        b = two_mode.j2_qrep_2_delta0(lam, q2, q1)
        cases.append(Case(f"dn=0 q-form |phi(q1,q2)| = |phi(q2,q1)|, lam={lam:g}",
                          _max(np.abs(a) - np.abs(b)) / _max(a), 1e-12))
    return _report("bessel", cases)


SUITES = {
    "orthonormality": run_orthonormality,
    "moments": run_moments,
    "parseval": run_parseval,
    "completeness": run_completeness_delta,
    "asymptotic": run_asymptotic,
    "cross_representation": run_cross_representation,
    "classifier": run_classifier,
    "bessel": run_bessel,
}


def run_suite(name, tolerance=None):
    """Run one suite at its defaults; ``tolerance`` overrides every case tolerance."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'")
    rep = SUITES[name]()
    return rep if tolerance is None else rep.with_tolerance(tolerance)


def run_all(tolerance=None):
    return [run_suite(name, tolerance) for name in SUITES]


def reports_json(reports):
    return json.dumps([r.as_dict() for r in reports], indent=2, sort_keys=True)
