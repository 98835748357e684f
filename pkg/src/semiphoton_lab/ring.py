"""Field waves spun on a circle: displacement current, net charge, dipole potential.

A wave moving at c on a ring of radius ``r_p`` has angular frequency
``omega_p = c / r_p``. Its field ``E_vec = -E n`` (``n`` the inward normal)
gives a displacement current ``(1/4pi) dE_vec/dt`` with a normal part
``j_n = (1/4pi) dE/dt`` and a tangential part ``j_tau = (omega_p/4pi) E``.

Net charge of one spun wave (Gaussian-style units)::

    Q = (1/pi) (omega_p/c) S  *  integral of the in-plane field projection

over the arc the wave occupies. A plane-polarised semiphoton covers half a
period centred on its crest, so the projection never changes sign. A
circularly polarised one turns its polarisation once per period and the
projection ``E0 cos(phi)`` integrates to zero over the full period.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from semiphoton_lab import kernels

Polarization = Literal["plane", "circular"]

C_SI = 299792458.0
HBAR_SI = 1.0545718176461565e-34

DEFAULT_STEPS = 10_000
MIN_STEPS = 100

CSV_COLUMNS = ("phase", "j_n", "j_tau", "in_plane_projection")


class DipoleSingularityError(ValueError):
    """Field point coincides with the second charge."""


@dataclass(frozen=True)
class RingWaveConfig:
    r_p: float
    E0: float
    omega_p: float
    polarization: Polarization
    m_p: float
    cross_section: float = 1.0
    c: float = C_SI
    hbar: float = HBAR_SI

    def __post_init__(self):
        if self.polarization not in ("plane", "circular"):
            raise ValueError(f"polarization must be 'plane' or 'circular', got {self.polarization!r}")
        if not (self.r_p > 0 and self.omega_p > 0 and self.cross_section > 0):
            raise ValueError("r_p, omega_p and cross_section must be positive")
        if not math.isfinite(self.E0):
            raise ValueError("E0 must be finite")
        if abs(self.omega_p * self.r_p - self.c) > 1e-12 * self.c:
            raise ValueError("omega_p * r_p must equal c")
        m_expected = self.hbar * self.omega_p / self.c**2
        if abs(self.m_p - m_expected) > 1e-12 * m_expected:
            raise ValueError("m_p must equal hbar * omega_p / c^2")

    @classmethod
    def from_radius(cls, r_p, E0=1.0, polarization="plane", cross_section=1.0, c=C_SI, hbar=HBAR_SI):
        omega = c / r_p
        return cls(r_p, E0, omega, polarization, hbar * omega / c**2, cross_section, c, hbar)

    def replace(self, **changes):
        data = dict(r_p=self.r_p, E0=self.E0, polarization=self.polarization,
                    cross_section=self.cross_section, c=self.c, hbar=self.hbar)
        data.update(changes)
        return RingWaveConfig.from_radius(**data)

    @property
    def k_s(self) -> float:
        """Wave number along the ring, ``omega_p / c`` (equals ``1 / r_p``)."""
        return self.omega_p / self.c

    @property
    def wavelength(self) -> float:
        return 2.0 * math.pi / self.k_s


@dataclass(frozen=True)
class CurrentSample:
    j_n: float
    j_tau: float
    phase: float


def _derivative(fn, x, h):
    # fourth-order central difference
    return (-fn(x + 2 * h) + 8 * fn(x + h) - 8 * fn(x - h) + fn(x - 2 * h)) / (12 * h)


def displacement_current(
    config: RingWaveConfig,
    E_magnitude_fn: Callable[[float], float],
    phase: float,
    derivative_fn: Callable[[float], float] | None = None,
    dphi: float = 1e-4,
) -> CurrentSample:
    """Normal and tangential displacement current at ``phase`` (= ``omega_p t``).

    ``dE/dt = omega_p dE/dphi``; the phase derivative comes from
    ``derivative_fn`` when given, otherwise from a fourth-order central
    difference with step ``dphi``.
    """
    w = config.omega_p
    dE = derivative_fn(phase) if derivative_fn is not None else _derivative(E_magnitude_fn, phase, dphi)
    E = E_magnitude_fn(phase)
    return CurrentSample(j_n=w * dE / (4 * math.pi), j_tau=w * E / (4 * math.pi), phase=phase)


def unit_vectors(phase):
    """Inward normal ``n`` and tangent ``tau`` (counter-clockwise motion) at ``phase``."""
    c, s = math.cos(phase), math.sin(phase)
    return np.array([-c, -s, 0.0]), np.array([-s, c, 0.0])


def field_vector(config: RingWaveConfig, E_magnitude_fn, t: float) -> np.ndarray:
    """``E_vec = -E n`` for the wave at time t (pointing away from the centre)."""
    phase = config.omega_p * t
    n, _ = unit_vectors(phase)
    return -E_magnitude_fn(phase) * n


def normal_vector_derivative_check(config: RingWaveConfig, n_samples: int = 64, step: float = 1e-6) -> float:
    """Max ``|dn/dt + (c/r_p) tau|`` over ``n_samples`` points of the ring.

    ``dn/dt`` is a central difference; ``step`` is the phase increment, so
    the time step is ``step / omega_p``.
    """
    if n_samples < 8:
        raise ValueError("n_samples must be >= 8")
    w = config.omega_p
    dt = step / w
    worst = 0.0
    for phase in np.linspace(0.0, 2 * math.pi, n_samples, endpoint=False):
        t = phase / w
        n_plus, _ = unit_vectors(w * (t + dt))
        n_minus, _ = unit_vectors(w * (t - dt))
        dn = (n_plus - n_minus) / (2 * dt)
        _, tau = unit_vectors(phase)
        worst = max(worst, float(np.linalg.norm(dn + (config.c / config.r_p) * tau)))
    return worst


def _integration_limits(config):
    lam = config.wavelength
    if config.polarization == "plane":
        return -lam / 4.0, lam / 4.0
    return 0.0, lam


def charge_prefactor(config: RingWaveConfig) -> float:
    return config.omega_p / (math.pi * config.c) * config.cross_section


def net_ring_charge(config: RingWaveConfig, n_steps: int = DEFAULT_STEPS, use_numba=None) -> float:
    """Net charge of the spun wave by composite Simpson quadrature.

    Plane: ``E0 cos(k_s l)`` over ``[-lambda/4, lambda/4]``. Circular: the
    in-plane projection ``E0 cos(k_s l)`` over a full period. Odd
    ``n_steps`` are rounded up to even.
    """
    n_steps = int(n_steps)
    if n_steps < MIN_STEPS:
        raise ValueError(f"n_steps must be >= {MIN_STEPS}, got {n_steps}")
    if n_steps % 2:
        n_steps += 1
    if config.E0 == 0:
        return 0.0
    a, b = _integration_limits(config)
    integral = kernels.simpson_cosine(config.E0, config.k_s, a, b, n_steps, use_numba=use_numba)
    return charge_prefactor(config) * integral


def plane_charge_closed_form(config: RingWaveConfig) -> float:
    """Exact value of the plane-polarised integral, from the antiderivative ``sin(k l)/k``."""
    a, b = -config.wavelength / 4.0, config.wavelength / 4.0
    k = config.k_s
    return charge_prefactor(config) * config.E0 * (math.sin(k * b) - math.sin(k * a)) / k


def stated_plane_charge(config: RingWaveConfig) -> float:
    """The simplified form ``E0 S / pi`` printed for the same integral."""
    return config.E0 * config.cross_section / math.pi


def semiphoton_arc_mismatch(config: RingWaveConfig) -> float:
    """Relative difference between half a wavelength and half the circumference."""
    half_wave = config.wavelength / 2.0
    return abs(half_wave - math.pi * config.r_p) / (math.pi * config.r_p)


def in_plane_projection(config: RingWaveConfig, phase: float) -> float:
    return config.E0 * math.cos(phase)


def current_profile(config: RingWaveConfig, samples: int = 64) -> np.ndarray:
    """Rows of :data:`CSV_COLUMNS` over the arc the wave occupies.

    The currents are those of the in-plane field ``E0 cos(phase)``, with the
    analytic phase derivative.
    """
    if samples < 2:
        raise ValueError("samples must be >= 2")
    if config.polarization == "plane":
        phases = np.linspace(-math.pi / 2, math.pi / 2, samples)
    else:
        phases = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    E0 = config.E0
    rows = []
    for ph in phases:
        cur = displacement_current(
            config,
            lambda x: E0 * math.cos(x),
            float(ph),
            derivative_fn=lambda x: -E0 * math.sin(x),
        )
        rows.append((cur.phase, cur.j_n, cur.j_tau, in_plane_projection(config, ph)))
    return np.array(rows)


def dipole_potential(q: float, d: float, r: float, theta: float, eps0: float) -> float:
    """``(q/eps0) (1/r - 1/(r + d cos(theta)))`` for a pair of charges +-q at separation d."""
    if not r > 0:
        raise ValueError("r must be positive")
    r2 = r + d * math.cos(theta)
    if abs(r2) <= 1e-15 * r:
        raise DipoleSingularityError("r + d cos(theta) vanishes")
    return q / eps0 * (1.0 / r - 1.0 / r2)


__all__ = [
    "CSV_COLUMNS",
    "CurrentSample",
    "DEFAULT_STEPS",
    "DipoleSingularityError",
    "MIN_STEPS",
    "RingWaveConfig",
    "charge_prefactor",
    "current_profile",
    "dipole_potential",
    "displacement_current",
    "field_vector",
    "in_plane_projection",
    "net_ring_charge",
    "normal_vector_derivative_check",
    "plane_charge_closed_form",
    "semiphoton_arc_mismatch",
    "stated_plane_charge",
    "unit_vectors",
]
