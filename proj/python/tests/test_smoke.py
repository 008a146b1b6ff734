"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import _diracnl as dnl


def test_dirac_matrices_algebra():
    mats = dnl.dirac_matrices()
    beta = mats["beta"]
    delta = mats["delta"]
    assert np.allclose(beta @ beta, np.eye(4), atol=1e-15)
    assert np.allclose(delta @ delta, np.eye(4), atol=1e-15)
    assert delta[0, 2] == pytest.approx(-1j)
    ax, ay = mats["alpha_x"], mats["alpha_y"]
    assert np.allclose(ax @ ay + ay @ ax, np.zeros((4, 4)), atol=1e-15)


def test_unitaries():
    for build in (dnl.u_fw, dnl.u_mo, dnl.u_mo_total):
        u = build(0.3, -1.2, 2.0)
        assert np.allclose(u @ u.conj().T, np.eye(4), atol=1e-12)
    v = dnl.v_op()
    assert np.allclose(v @ v.conj().T, np.eye(4), atol=1e-14)


def test_fw_diagonalization():
    p = (0.7, 0.0, 0.0)
    u = dnl.u_fw(*p)
    h = dnl.hamiltonian(*p)
    diag = u @ h @ u.conj().T
    e = math.sqrt(1.49)
    assert np.allclose(diag, np.diag([e, e, -e, -e]), atol=1e-12)


def test_moments():
    m0, ref0 = dnl.moment("fw", 0)
    assert np.allclose(m0, np.eye(4), atol=1e-8)
    m2, ref2 = dnl.moment("fw", 2)
    assert np.allclose(m2, 0.75 * np.eye(4), atol=1e-6)
    assert np.allclose(ref2, 0.75 * np.eye(4), atol=1e-15)
    m2mo, _ = dnl.moment("mo", 2)
    assert m2mo[2, 0] == pytest.approx(3j / math.sqrt(2), abs=1e-6)


def test_special_functions():
    assert dnl.bessel_k(0, 1.0) == pytest.approx(0.42102443824070834, rel=1e-12)
    assert dnl.bessel_k(1, 1.0) == pytest.approx(0.60190723019723458, rel=1e-12)
    assert dnl.erfcx(3.0) == pytest.approx(math.exp(9.0) * math.erfc(3.0), rel=1e-12)
    closed = dnl.a_integral_closed(1.0, 0, 0.5)
    quad = dnl.a_integral_quadrature(1.0, 0, 0.5)
    assert closed == pytest.approx(quad, abs=1e-9)


def test_profiles_and_dual_route():
    assert dnl.t0(1.0, 0.5) == pytest.approx(dnl.t0_eta(1.0, 0.5), abs=1e-8)
    grid = [0.1, 0.5, 1.0, 2.0]
    t0 = dnl.t0_profile(1.0, grid)
    s0 = dnl.s0_profile(1.0, grid)
    assert t0.shape == (4,)
    assert np.all(np.isfinite(t0.real))
    # FW curve sits closer to the initial packet at r = 1
    f1 = dnl.packet_f(1.0, 1.0)
    assert abs(s0[2].real - f1) < abs(2.0 * t0[2].real - f1)
    # odd integrals are purely imaginary and odd
    tz = dnl.tz(1.0, 0.8)
    assert tz.real == 0.0
    assert dnl.tz(1.0, -0.8) == -tz


def test_variances():
    closed = dnl.variance_closed("mo", 1.0)
    oracle = dnl.variance_oracle("mo", 1.0)
    assert closed["value"] == pytest.approx(oracle, rel=1e-4)
    assert closed["norm_check"] == pytest.approx(1.0, abs=1e-8)

    grid = dnl.log_grid(0.05, 20.0, 25)
    vmo = dnl.variance_sweep("mo", grid)
    vfw = dnl.variance_sweep("fw", grid)
    for d, a, b in zip(grid, vmo, vfw):
        assert b < a
        assert b >= 1.5 * d * d


def test_delta_profiles():
    assert dnl.d0(1.0) == pytest.approx(
        dnl.bessel_k(1, 1.0) / (4.0 * math.pi**2), rel=1e-12
    )
    a2 = abs(dnl.dz_regular(2.0))
    a4 = abs(dnl.dz_regular(4.0))
    assert a4 / a2 <= math.exp(-2.0) * 1.5
    assert dnl.b0_g(0.0) == pytest.approx(1.0 / (1.0 + math.sqrt(2.0)), rel=1e-12)
