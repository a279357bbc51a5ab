import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import special

from squeezespec import specfun
from squeezespec.errors import ConvergenceError, DomainError


def test_log_gamma_matches_scipy(backend):
    rng = np.random.default_rng(1)
    z = rng.uniform(0.125, 20, 500) + 1j * rng.uniform(-50, 50, 500)
    got = specfun.log_gamma_complex(z)
    ref = special.loggamma(z)
    assert np.max(np.abs(got - ref) / np.maximum(np.abs(ref), 1)) < 1e-13


def test_log_gamma_left_half_plane_principal_branch(backend):
    z = np.array([-3.5 + 0.2j, -0.5 - 2j, -7.25 + 1e-3j, 0.3 - 0.1j])
    np.testing.assert_allclose(specfun.log_gamma_complex(z), special.loggamma(z), rtol=1e-12)


def test_log_gamma_poles():
    with pytest.raises(DomainError):
        specfun.log_gamma_complex(-2.0)
    with pytest.raises(DomainError):
        specfun.log_gamma_complex(np.array([1.0, 0.0]))


def test_gamma_abs_sq_and_arg():
    lam = np.linspace(-7, 7, 29)
    ref = np.abs(special.gamma(0.75 + 1j * lam)) ** 2
    np.testing.assert_allclose(specfun.gamma_abs_sq(0.75, lam), ref, rtol=1e-13)
    np.testing.assert_array_equal(specfun.gamma_abs_sq(0.75, lam), specfun.gamma_abs_sq(0.75, -lam))
    np.testing.assert_array_equal(specfun.gamma_arg(0.25, lam), -specfun.gamma_arg(0.25, -lam))
    # |Gamma(1/2 + i lam)|^2 = pi / cosh(pi lam)
    np.testing.assert_allclose(specfun.gamma_abs_sq(0.5, lam), math.pi / np.cosh(math.pi * lam), rtol=1e-13)
    with pytest.raises(DomainError):
        specfun.gamma_abs_sq(0.0, 1.0)


@pytest.mark.parametrize("m", [0, 1, 5, 30, 80])
def test_hyp2f1_terminating_vs_mpmath(m):
    a = 0.25 + 1.5j
    got = specfun.hyp2f1_terminating(m, a, 0.5, 2.0)
    with mpmath.workdps(80):
        ref = complex(mpmath.hyp2f1(-m, a, 0.5, 2))
    assert abs(got - ref) <= 1e-13 * max(abs(ref), 1)


def test_hyp2f1_forbidden_c():
    with pytest.raises(DomainError):
        specfun.hyp2f1_terminating(5, 1.0, -2.0, 0.5)
    # c = -7 only hits (c)_k beyond k = m, so it is fine
    assert specfun.hyp2f1_terminating(3, 1.0, -7.0, 0.5) != 0


@pytest.mark.parametrize("x", [0.3, 2.0 + 1j, -6.0 + 0.5j, 15.0 - 3j, -25.0, 1j * 4])
def test_hyp1f1_vs_mpmath(backend, x):
    a = 0.25 - 1.3j
    got = complex(specfun.hyp1f1(a, 0.5, x))
    ref = complex(mpmath.hyp1f1(a, 0.5, x))
    assert abs(got - ref) <= 1e-13 * max(abs(ref), 1)


def test_hyp1f1_errors():
    with pytest.raises(DomainError):
        specfun.hyp1f1(0.5, -1.0, 1.0)
    with pytest.raises(ConvergenceError) as info:
        specfun.hyp1f1(0.5, 0.5, 400.0, max_terms=50)
    assert "max_terms" in str(info.value)


def test_hermite_vs_scipy():
    y = np.linspace(-4, 4, 17)
    for n in (0, 1, 2, 7, 20):
        np.testing.assert_allclose(specfun.hermite(n, y), special.eval_hermite(n, y), rtol=1e-12, atol=1e-12)


def test_hermite_functions_normalized(backend):
    q = np.linspace(-5, 5, 11)
    u = specfun.hermite_functions(12, q)
    for n in range(13):
        ref = np.exp(specfun.log_hermite_norm(n)) * special.eval_hermite(n, q) * np.exp(-q * q / 2)
        np.testing.assert_allclose(u[n], ref, rtol=1e-11, atol=1e-15)
    # orthonormal under Gauss-Hermite quadrature
    x, w = np.polynomial.hermite.hermgauss(80)
    uu = specfun.hermite_functions(30, x) * np.exp(x * x / 2)
    np.testing.assert_allclose((uu * w) @ uu.T, np.eye(31), atol=1e-12)


def test_hermite_functions_large_n_no_overflow():
    u = specfun.hermite_functions(3000, np.array([0.0, 10.0, 60.0]))
    assert np.all(np.isfinite(u))
    # envelope of u_n at q = 0 is ~ (2 / (pi^2 n))^(1/4)
    assert abs(abs(u[3000, 0]) / (2 / (math.pi ** 2 * 3000)) ** 0.25 - 1) < 1e-3


def test_laguerre_vs_scipy(backend):
    x = np.linspace(0, 10, 21)
    for n in (0, 1, 4, 15):
        for alpha in (0.0, 1.0, 3.0):
            np.testing.assert_allclose(specfun.laguerre(n, alpha, x), special.eval_genlaguerre(n, alpha, x),
                                       rtol=1e-11, atol=1e-11)


def test_bessel_i_vs_scipy(backend):
    x = np.linspace(0.01, 12, 40)
    for nu in (0, 1, 2, 2.5):
        np.testing.assert_allclose(specfun.bessel_i(nu, x).real, special.iv(nu, x), rtol=1e-13)
    z = np.array([1 + 1j, -2 + 0.5j, 3j])
    np.testing.assert_allclose(specfun.bessel_i(2, z), [complex(mpmath.besseli(2, v)) for v in z], rtol=1e-13)


def test_bessel_i_entire_at_zero():
    assert specfun.bessel_i_entire(3, 0.0) == pytest.approx(1 / 6)


def test_bessel_k_imag_zero_order_vs_k0():
    x = np.linspace(0.1, 10, 60)
    np.testing.assert_allclose(specfun.bessel_k_imag(0.0, x), special.k0(x), rtol=1e-12)


def _k_imag_trapezoid(lam, x, h=0.01):
    t = np.arange(0, math.acosh(1 + 40 / x) + h, h)
    f = np.exp(-x * np.cosh(t)) * np.cos(lam * t)
    return h * (f.sum() - 0.5 * f[0])


@pytest.mark.parametrize("lam", [0.3, 1.0, 2.5])
@pytest.mark.parametrize("x", [0.05, 0.7, 1.5, 4.0])
def test_bessel_k_imag_vs_trapezoid(lam, x):
    # the trapezoid sum of this analytic, doubly-exponentially decaying
    # integrand converges geometrically in h
    assert specfun.bessel_k_imag(lam, x) == pytest.approx(_k_imag_trapezoid(lam, x), abs=1e-13)


def test_bessel_k_imag_even_in_lambda():
    assert specfun.bessel_k_imag(-1.7, 0.4) == specfun.bessel_k_imag(1.7, 0.4)


def test_bessel_k_imag_domain():
    with pytest.raises(DomainError):
        specfun.bessel_k_imag(1.0, 0.0)


@settings(max_examples=60, deadline=None)
@given(re=st.floats(0.05, 30), im=st.floats(-30, 30))
def test_log_gamma_recurrence(re, im):
    z = complex(re, im)
    lhs = specfun.log_gamma_complex(z + 1)
    rhs = specfun.log_gamma_complex(z) + np.log(z)
    # equal modulo 2 pi i
    d = lhs - rhs
    assert abs(d.real) < 1e-12 * max(1, abs(lhs))
    assert abs((d.imag + math.pi) % (2 * math.pi) - math.pi) < 1e-11 * max(1, abs(lhs))


@settings(max_examples=40, deadline=None)
@given(a_re=st.floats(-2, 2), a_im=st.floats(-3, 3), x=st.floats(-20, 20), c=st.sampled_from([0.5, 1.5, 3.0]))
def test_hyp1f1_random_vs_mpmath(a_re, a_im, x, c):
    a = complex(a_re, a_im)
    got = complex(specfun.hyp1f1(a, c, x))
    ref = complex(mpmath.hyp1f1(a, c, x))
    # absolute scale: the largest term magnitude is below e^{|x|}
    assert abs(got - ref) <= 1e-13 * max(abs(ref), 1.0) + 1e-15 * math.exp(abs(x))
