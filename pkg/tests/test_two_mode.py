import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import eval_genlaguerre, eval_hermite, factorial

from squeezespec import two_mode as tm
from squeezespec.errors import DomainError
from squeezespec.one_mode import Generator
from squeezespec.pollaczek import pollaczek_table, weight
from squeezespec.verify import random_state, two_mode_spectral_mass, z_grid

DELTAS = (0, 1, 2, -2, 5)


def u(n, q):
    return math.pi ** -0.25 / math.sqrt(2.0 ** n * factorial(n)) * eval_hermite(n, q) * np.exp(-q * q / 2)


def test_label():
    lab = tm.TwoModeLabel(-3)
    assert lab.abs_delta == 3 and lab.c == 2.0 and lab.casimir == 2.0
    assert lab.ket(4) == (4, 7)
    assert tm.TwoModeLabel(3).ket(4) == (7, 4)
    assert tm.TwoModeLabel(0).casimir == -0.25
    with pytest.raises(DomainError):
        tm.TwoModeLabel(1.5)


# ------------------------------------------------------------ Casimir


@pytest.mark.parametrize("dn", range(-5, 6))
@pytest.mark.parametrize("n", [0, 1, 7, 30])
def test_casimir_on_ladder(dn, n):
    diag, leak = tm.casimir_apply(dn, n)
    assert abs(diag - (dn * dn - 1) / 4) <= 1e-12
    assert leak <= 1e-12


def test_casimir_interior_only():
    with pytest.raises(DomainError):
        tm.casimir_apply(0, 5, N=6)


def test_j0_spectrum():
    np.testing.assert_allclose(tm.j0_spectrum(3, 6), (2 * np.arange(6) + 4) / 2)


def test_commutator_interior():
    j0, j1, j2 = (m.astype(complex) for m in tm.ladder_operators(2, 12))
    comm = j1 @ j2 - j2 @ j1
    np.testing.assert_allclose(comm[:-1, :-1], -1j * j0[:-1, :-1], atol=1e-12)


# ------------------------------------------------------------ J2


def test_j2_nrep_first_coefficient():
    for dn in DELTAS:
        c = (abs(dn) + 1) / 2
        v = tm.j2_nrep_2(0.7, dn, 8)
        assert v.coeffs[0] == pytest.approx(math.sqrt(weight(0.7, c)), rel=1e-15)
        assert v.generator is Generator.J2
    with pytest.raises(DomainError):
        tm.j2_nrep_2(0.7, 0, 1)


def test_kets_listing():
    v = tm.j2_nrep_2(0.1, -2, 4)
    assert v.kets == [(0, 2), (1, 3), (2, 4), (3, 5)]


@pytest.mark.parametrize("dn", DELTAS)
@pytest.mark.parametrize("lam", [0.0, 0.5, -2.0, 5.0])
def test_j2_residual(dn, lam):
    v = tm.j2_nrep_2(lam, dn, 128)
    assert np.max(np.abs(tm.eigen_residual(v))) < 1e-12


@pytest.mark.parametrize("dn", [0, 1, 3])
def test_real_coefficients_are_j1_eigenvector(dn):
    lam = 1.1
    N = 60
    c = (dn + 1) / 2
    f = math.sqrt(weight(lam, c)) * pollaczek_table(N - 1, lam, c)
    _, j1, _ = tm.ladder_operators(dn, N, dtype=complex)
    assert np.max(np.abs((j1 @ f - lam * f)[:-1])) < 1e-12


@pytest.mark.parametrize("dn", DELTAS)
@pytest.mark.parametrize("lam", [0.0, 0.5, -2.0])
def test_j2_zrep_matches_series(dn, lam):
    z = z_grid(1.5)
    z1, z2 = np.meshgrid(z, z[::-1])
    v = tm.j2_nrep_2(lam, dn, 120)
    assert np.max(np.abs(v.zrep(z1, z2) - tm.j2_zrep_2(lam, dn, z1, z2))) < 1e-10


def test_j2_zrep_mirror_and_origin():
    z1, z2 = 0.4 + 0.2j, -0.3 + 0.9j
    assert tm.j2_zrep_2(0.6, -3, z1, z2) == pytest.approx(tm.j2_zrep_2(0.6, 3, z2, z1))
    assert tm.j2_zrep_2(0.6, 0, 0, 0) == pytest.approx(math.sqrt(weight(0.6, 0.5)))
    assert tm.j2_zrep_2(0.6, 2, 0, z2) == 0


def test_j2_qrep_symmetries():
    q1 = np.array([0.3, 1.7, -2.2, 4.0])
    q2 = np.array([1.1, -0.4, 0.5, 3.5])
    lam = 0.9
    a = tm.j2_qrep_2_delta0(lam, q1, q2)
    np.testing.assert_allclose(tm.j2_qrep_2_delta0(lam, q2, q1), a, rtol=1e-14)
    np.testing.assert_allclose(tm.j2_qrep_2_delta0(lam, q1, -q2), np.conj(a), rtol=1e-14)
    np.testing.assert_allclose(tm.j2_qrep_2_delta0(lam, -q1, -q2), a, rtol=1e-14)
    assert np.all(np.abs(a.imag) > 0)


def test_j2_qrep_singular_locus():
    with pytest.raises(DomainError):
        tm.j2_qrep_2_delta0(0.2, [1.0, 2.0], [0.5, -2.0])


@pytest.mark.parametrize("lam", [-1.3, 0.0, 0.8])
def test_j2_qrep_projects_onto_number_states(lam):
    # <n,n|lam> from the q-form equals (-i)^n sqrt(rho) P_n
    v = tm.j2_nrep_2(lam, 0, 4).coeffs
    for n in (0, 1, 2):
        got = tm.j2_qrep_2_pair(lam, lambda a, b: u(n, a) * u(n, b))
        assert abs(got - v[n]) < 1e-10


# ------------------------------------------------------------ K+


@pytest.mark.parametrize("dn", DELTAS)
def test_kplus_first_coefficient_and_laguerre(dn):
    eta = 1.7
    d = abs(dn)
    v = tm.kplus_nrep_2(eta, dn, 25)
    assert v.coeffs[0] == pytest.approx(math.sqrt(2) * math.exp(-eta) * (2 * eta) ** (d / 2) / math.sqrt(math.factorial(d)))
    n = np.arange(25)
    ref = ((-1.0) ** n * math.sqrt(2) * math.exp(-eta) * (2 * eta) ** (d / 2)
           * np.sqrt(factorial(n) / factorial(n + d)) * eval_genlaguerre(n, d, 2 * eta))
    np.testing.assert_allclose(v.coeffs, ref, rtol=1e-10, atol=1e-14)


@pytest.mark.parametrize("dn", DELTAS)
@pytest.mark.parametrize("eta", [0.5, 2.0, 5.0])
def test_kplus_residual_and_series(dn, eta):
    v = tm.kplus_nrep_2(eta, dn, 128)
    assert np.max(np.abs(tm.eigen_residual(v))) < 1e-10
    z = z_grid(1.5)
    z1, z2 = np.meshgrid(z, z[::-1])
    assert np.max(np.abs(v.zrep(z1, z2) - tm.kplus_zrep_2(eta, dn, z1, z2))) < 1e-10


def test_kplus_zrep_bessel_form():
    from scipy.special import iv
    eta, d = 0.8, 2
    z1, z2 = 0.7, 0.4
    ref = math.sqrt(2) * math.exp(-eta) * (z1 / z2) ** (d / 2) * math.exp(-z1 * z2) * iv(d, 2 * math.sqrt(2 * eta * z1 * z2))
    assert tm.kplus_zrep_2(eta, d, z1, z2).real == pytest.approx(ref, rel=1e-13)
    # z2 = 0 is regular
    assert tm.kplus_zrep_2(eta, 0, 0.5, 0.0) == pytest.approx(math.sqrt(2) * math.exp(-eta))
    assert tm.kplus_zrep_2(eta, -2, z2, z1) == pytest.approx(tm.kplus_zrep_2(eta, 2, z1, z2))


def test_kplus_domain_and_large_n():
    for eta in (0.0, -0.5):
        with pytest.raises(DomainError):
            tm.kplus_nrep_2(eta, 0)
        with pytest.raises(DomainError):
            tm.kplus_zrep_2(eta, 0, 0.1, 0.1)
    assert np.all(np.isfinite(tm.kplus_nrep_2(40.0, 7, 3000).coeffs))


# ------------------------------------------------------------ operators


@settings(max_examples=25, deadline=None)
@given(st.integers(-4, 4),
       st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=3, max_size=16))
def test_apply_equals_dense(dn, vec):
    f = np.array(vec)
    j0, j1, j2 = (m.astype(complex) for m in tm.ladder_operators(dn, len(f)))
    np.testing.assert_allclose(tm.apply_j2(f, dn), j2 @ f, atol=1e-12)
    np.testing.assert_allclose(tm.apply_kplus(f, dn), (j0 + j1) @ f, atol=1e-12)


def test_dense_hermitian():
    for m in tm.ladder_operators(1, 10):
        np.testing.assert_array_equal(m, m.conj().T)


@pytest.mark.parametrize("dn", [0, 1, -3])
def test_parseval_random_states(dn):
    rng = np.random.default_rng(11)
    states = np.array([random_state(rng, 21) for _ in range(3)])
    np.testing.assert_allclose(two_mode_spectral_mass(states, dn), 1.0, atol=1e-6)


def test_small_examples():
    assert tm.j2_nrep_2(0.0, 0, 4).coeffs[1] == 0
    eta = 0.8
    assert tm.kplus_nrep_2(eta, 0, 4).coeffs[1] == pytest.approx(-math.sqrt(2) * math.exp(-eta) * (1 - 2 * eta))


def test_qrep_lambda_zero_is_k0():
    from scipy.special import k0
    q1 = np.array([0.2, 1.5, -3.0])
    q2 = np.array([1.0, 0.3, 1.0])
    ref = k0(np.abs(q1 ** 2 - q2 ** 2) / 2) / (math.pi * math.sqrt(math.pi))
    np.testing.assert_allclose(tm.j2_qrep_2_delta0(0.0, q1, q2), ref, rtol=1e-13)


@pytest.mark.parametrize("d", [1, 2, 4])
def test_negative_delta_mirror(d):
    a, b = tm.j2_nrep_2(0.4, d, 20), tm.j2_nrep_2(0.4, -d, 20)
    np.testing.assert_array_equal(a.coeffs, b.coeffs)
    assert b.kets == [k[::-1] for k in a.kets]
    np.testing.assert_array_equal(tm.kplus_nrep_2(1.1, d, 20).coeffs, tm.kplus_nrep_2(1.1, -d, 20).coeffs)
