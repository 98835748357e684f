import math

import numpy as np
import pytest

from semiphoton_lab import ring
from semiphoton_lab.ring import (
    DipoleSingularityError,
    RingWaveConfig,
    dipole_potential,
    displacement_current,
    net_ring_charge,
    normal_vector_derivative_check,
    plane_charge_closed_form,
)


@pytest.fixture
def unit():
    return RingWaveConfig.from_radius(1.0, E0=1.0, c=1.0, hbar=1.0)


# -- configuration ------------------------------------------------------------------


def test_from_radius_consistency():
    cfg = RingWaveConfig.from_radius(2e-13)
    assert cfg.omega_p * cfg.r_p == pytest.approx(cfg.c, rel=1e-15)
    assert cfg.m_p == pytest.approx(cfg.hbar * cfg.omega_p / cfg.c**2, rel=1e-15)
    assert cfg.k_s == pytest.approx(1 / cfg.r_p, rel=1e-15)
    assert cfg.wavelength == pytest.approx(2 * math.pi * cfg.r_p, rel=1e-15)


def test_config_rejects_inconsistent_frequency():
    with pytest.raises(ValueError):
        RingWaveConfig(1.0, 1.0, 2.0, "plane", 2.0, c=1.0, hbar=1.0)


def test_config_rejects_wrong_mass():
    with pytest.raises(ValueError):
        RingWaveConfig(1.0, 1.0, 1.0, "plane", 3.0, c=1.0, hbar=1.0)


def test_config_rejects_unknown_polarization():
    with pytest.raises(ValueError):
        RingWaveConfig.from_radius(1.0, polarization="elliptic")


# -- displacement current ------------------------------------------------------------


def test_constant_field_has_no_normal_current(unit):
    cur = displacement_current(unit, lambda x: 2.5, 0.7)
    assert cur.j_n == pytest.approx(0.0, abs=1e-12)
    assert cur.j_tau == pytest.approx(2.5 / (4 * math.pi), rel=1e-15)


def test_current_matches_vector_derivative(unit):
    # full vector derivative of E_vec = -E n by finite differences, then project
    E = lambda ph: 1.3 * math.cos(ph)  # noqa: E731
    h = 1e-5
    for ph in np.linspace(-1.2, 1.2, 7):
        dvec = (ring.field_vector(unit, E, ph + h) - ring.field_vector(unit, E, ph - h)) / (2 * h)
        n, tau = ring.unit_vectors(ph)
        cur = displacement_current(unit, E, ph)
        assert cur.j_n == pytest.approx(-(dvec @ n) / (4 * math.pi), abs=1e-6)
        # normal part measured along the outward direction -n, tangential along +tau
        assert cur.j_tau == pytest.approx((dvec @ tau) / (4 * math.pi), abs=1e-6)


def test_analytic_and_numeric_derivatives_agree(unit):
    E = lambda x: math.sin(3 * x)  # noqa: E731
    a = displacement_current(unit, E, 0.4, derivative_fn=lambda x: 3 * math.cos(3 * x))
    b = displacement_current(unit, E, 0.4)
    assert a.j_n == pytest.approx(b.j_n, rel=1e-10)


def test_tangential_current_is_linear(unit):
    a = displacement_current(unit, lambda x: 1.0, 0.0).j_tau
    b = displacement_current(unit, lambda x: 3.0, 0.0).j_tau
    assert b == pytest.approx(3 * a, rel=1e-15)


def test_normal_vector_derivative(unit):
    assert normal_vector_derivative_check(unit) < 1e-6
    cfg = RingWaveConfig.from_radius(2e-13)
    assert normal_vector_derivative_check(cfg) < 1e-6 * cfg.c / cfg.r_p
    with pytest.raises(ValueError):
        normal_vector_derivative_check(unit, n_samples=4)


def test_normal_vector_derivative_second_order(unit):
    e1 = normal_vector_derivative_check(unit, step=1e-2)
    e2 = normal_vector_derivative_check(unit, step=5e-3)
    assert 3.5 < e1 / e2 < 4.5


def test_doubling_radius_halves_normal_rate():
    def rate(r):
        cfg = RingWaveConfig.from_radius(r, c=1.0, hbar=1.0)
        dt = 1e-6 / cfg.omega_p
        n1, _ = ring.unit_vectors(cfg.omega_p * dt)
        n0, _ = ring.unit_vectors(-cfg.omega_p * dt)
        return np.linalg.norm(n1 - n0) / (2 * dt)

    assert rate(2.0) == pytest.approx(rate(1.0) / 2, rel=1e-8)


def test_current_profile(unit):
    rows = ring.current_profile(unit, 5)
    assert rows.shape == (5, len(ring.CSV_COLUMNS))
    np.testing.assert_allclose(rows[:, 0], np.linspace(-math.pi / 2, math.pi / 2, 5))
    np.testing.assert_allclose(rows[2, 1:], (0.0, 1 / (4 * math.pi), 1.0), atol=1e-15)
    with pytest.raises(ValueError):
        ring.current_profile(unit, 1)


# -- net charge ---------------------------------------------------------------------


def test_circular_is_neutral():
    cfg = RingWaveConfig.from_radius(1.93e-13, E0=3.0, polarization="circular", cross_section=2.0)
    q = net_ring_charge(cfg)
    assert abs(q) <= 1e-9 * abs(plane_charge_closed_form(cfg.replace(polarization="plane")))


def test_plane_matches_closed_form():
    cfg = RingWaveConfig.from_radius(1.93e-13, E0=3.0, polarization="plane", cross_section=2.0)
    q = net_ring_charge(cfg)
    assert q == pytest.approx(plane_charge_closed_form(cfg), rel=1e-8)
    # (2/pi) E0 S, twice the printed simplification
    assert q == pytest.approx(2 / math.pi * 3.0 * 2.0, rel=1e-8)
    assert q / ring.stated_plane_charge(cfg) == pytest.approx(2.0, rel=1e-8)


def test_defaults_frozen_value():
    cfg = RingWaveConfig.from_radius(1.9307963398044529e-13)
    assert net_ring_charge(cfg) == pytest.approx(0.6366197723675789, rel=1e-12)


def test_zero_amplitude_is_exactly_zero():
    for pol in ("plane", "circular"):
        assert net_ring_charge(RingWaveConfig.from_radius(1.0, E0=0.0, polarization=pol)) == 0.0


def test_too_few_steps_rejected(unit):
    with pytest.raises(ValueError):
        net_ring_charge(unit, 99)


def test_odd_steps_rounded_up(unit):
    assert net_ring_charge(unit, 101) == net_ring_charge(unit, 102)


def test_charge_independent_of_frequency():
    qs = [net_ring_charge(RingWaveConfig.from_radius(r, E0=1.0)) for r in (1e-15, 1e-13, 1.0, 1e3)]
    assert max(qs) - min(qs) <= 1e-10 * abs(qs[0])


def test_refinement_does_not_grow_circular_residue():
    cfg = RingWaveConfig.from_radius(1.0, polarization="circular")
    assert abs(net_ring_charge(cfg, 10_000)) <= abs(net_ring_charge(cfg, 1_000)) + 1e-15


def test_plane_fourth_order_convergence(unit):
    closed = plane_charge_closed_form(unit)
    e1 = abs(net_ring_charge(unit, 100) - closed)
    e2 = abs(net_ring_charge(unit, 200) - closed)
    assert 14 < e1 / e2 < 18


def test_numba_and_numpy_charge_agree():
    cfg = RingWaveConfig.from_radius(1.0, E0=2.0)
    assert net_ring_charge(cfg, use_numba=True) == pytest.approx(net_ring_charge(cfg, use_numba=False), rel=1e-14)


def test_half_wavelength_is_half_circumference():
    assert ring.semiphoton_arc_mismatch(RingWaveConfig.from_radius(1.93e-13)) < 1e-14


# -- dipole ---------------------------------------------------------------------------


def test_dipole_limits():
    q, r, eps0 = 2.0, 3.0, 0.5
    assert abs(dipole_potential(q, 1e-12, r, 0.3, eps0)) < 1e-10
    assert dipole_potential(q, 1e12, r, 0.0, eps0) == pytest.approx(q / (eps0 * r), rel=1e-10)


def test_dipole_far_field_expansion():
    # leading term q d cos(theta) / (eps0 r^2)
    v = dipole_potential(1.0, 1e-4, 1.0, 0.0, 1.0)
    assert v == pytest.approx(1e-4, rel=2e-4)


def test_dipole_monotone_in_separation():
    vs = [dipole_potential(1.0, d, 1.0, 0.0, 1.0) for d in np.logspace(-3, 3, 25)]
    assert all(b > a for a, b in zip(vs, vs[1:]))


def test_dipole_singularity():
    with pytest.raises(DipoleSingularityError):
        dipole_potential(1.0, 1.0, 1.0, math.pi, 1.0)
    with pytest.raises(ValueError):
        dipole_potential(1.0, 1.0, 0.0, 0.0, 1.0)
