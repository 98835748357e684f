"""Electromagnetic form of the Dirac equation for a wave along +-y.

Two systems of four scalar equations are handled, ``prime`` and
``double_prime``. With ``kappa = m c / hbar``:

prime::

    (1/c) dEx/dt - dHz/dy = +i kappa Ex
    (1/c) dEz/dt + dHx/dy = +i kappa Ez
    (1/c) dHx/dt + dEz/dy = -i kappa Hx
    (1/c) dHz/dt - dEx/dy = -i kappa Hz

double_prime: every spatial derivative and every right-hand side flips sign.

For ``m = 0`` they are solved by the luminal trigonometric waves (phase
``theta = w t - k y``)::

    prime:        Ex = A cos, Hz = -A cos, Ez = -A sin, Hx = -A sin
    double_prime: Ex = A cos, Hz = +A cos, Ez = -A sin, Hx = +A sin

Fields use a Gaussian-style convention (E and H share a unit). The Poynting
vector is the bare cross product ``E x H``; multiply by
:data:`GAUSSIAN_POYNTING_FACTOR` (times c) for the physical energy flux.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from semiphoton_lab import kernels

System = Literal["prime", "double_prime"]
SYSTEMS = ("prime", "double_prime")

# physical flux = c / (4 pi) * E x H in Gaussian units
GAUSSIAN_POYNTING_FACTOR = 1.0 / (4.0 * math.pi)

DEFAULT_PHASE_STEP = 1e-4
# y-step phase / t-step phase; equal phase steps cancel the truncation
# error of a luminal wave exactly, which hides the order of the scheme
TIME_STEP_RATIO = 0.5

CSV_COLUMNS = ("t", "y", "Ex", "Ey", "Ez", "Hx", "Hy", "Hz", "Sx", "Sy", "Sz")

_H_SIGN = {"prime": -1.0, "double_prime": 1.0}


def _check_system(system):
    if system not in _H_SIGN:
        raise ValueError(f"system must be one of {SYSTEMS}, got {system!r}")


class DegenerateRotationError(ValueError):
    """The field does not rotate (zero amplitude)."""


@dataclass(frozen=True)
class FieldState:
    E: tuple[float, float, float]
    H: tuple[float, float, float]
    t: float = 0.0
    y: float = 0.0

    def __post_init__(self):
        E = tuple(float(v) for v in self.E)
        H = tuple(float(v) for v in self.H)
        if len(E) != 3 or len(H) != 3:
            raise ValueError("E and H must be 3-vectors")
        if not all(map(math.isfinite, E + H + (self.t, self.y))):
            raise ValueError("field state must be finite")
        object.__setattr__(self, "E", E)
        object.__setattr__(self, "H", H)

    @classmethod
    def zero(cls, t=0.0, y=0.0):
        return cls((0.0, 0.0, 0.0), (0.0, 0.0, 0.0), t, y)


@dataclass(frozen=True)
class TrigSolutionParams:
    """Amplitude, frequency and wave number of a luminal trig solution.

    ``omega = c k`` is enforced to 1e-12 relative; use :meth:`from_omega`
    to derive k.
    """

    A0: float
    omega: float
    k: float
    system: System = "prime"
    c: float = 299792458.0

    def __post_init__(self):
        _check_system(self.system)
        if not self.A0 >= 0:
            raise ValueError(f"A0 must be >= 0, got {self.A0!r}")
        if not (self.omega > 0 and self.k > 0 and self.c > 0):
            raise ValueError("omega, k and c must be positive")
        if abs(self.omega - self.c * self.k) > 1e-12 * self.omega:
            raise ValueError(f"omega = {self.omega!r} is not c*k = {self.c * self.k!r}")

    @classmethod
    def from_omega(cls, A0, omega, system="prime", c=299792458.0):
        return cls(A0=A0, omega=omega, k=omega / c, system=system, c=c)

    @property
    def period(self) -> float:
        return 2.0 * math.pi / self.omega

    def with_system(self, system):
        return TrigSolutionParams(self.A0, self.omega, self.k, system, self.c)


def sample_trig_solution(params: TrigSolutionParams, t: float, y: float = 0.0) -> FieldState:
    row = kernels.trig_fields(
        params.A0, params.omega, params.k, _H_SIGN[params.system], [t], [y], use_numba=False
    )[0]
    return FieldState(tuple(row[:3]), tuple(row[3:]), t, y)


def sample_trig_grid(params: TrigSolutionParams, t, y, use_numba=None) -> np.ndarray:
    """Vectorised sampler: rows of ``(Ex, Ey, Ez, Hx, Hy, Hz)`` over broadcast t, y."""
    return kernels.trig_fields(
        params.A0, params.omega, params.k, _H_SIGN[params.system], t, y, use_numba=use_numba
    )


def trig_sampler(params: TrigSolutionParams) -> Callable[[float, float], FieldState]:
    return lambda t, y: sample_trig_solution(params, t, y)


def poynting(state: FieldState) -> np.ndarray:
    """Bare cross product ``E x H`` (no c/4pi prefactor)."""
    return np.cross(state.E, state.H)


def pseudoscalar(state: FieldState) -> float:
    """Second field invariant ``E . H``."""
    return float(np.dot(state.E, state.H))


def scalar_equation_residuals(
    state_fn: Callable[[float, float], FieldState],
    system: System,
    mass: float,
    t: float,
    y: float,
    step: float,
    *,
    c: float = 299792458.0,
    hbar: float = 1.0545718176461565e-34,
    time_step: float | None = None,
) -> np.ndarray:
    """Residuals of the four scalar field equations at ``(t, y)``.

    Derivatives are central differences: ``step`` in y (metres) and
    ``time_step`` in t (default ``TIME_STEP_RATIO * step / c``). Each
    complex equation ``lhs = i kappa f`` contributes two real residuals,
    ``Re`` and ``Im`` of ``lhs - i kappa f``, giving 8 numbers ordered
    ``(Re1, Im1, Re2, Im2, ...)``. For real fields the imaginary parts are
    ``-+kappa*f``, so they vanish only for ``mass = 0``.
    """
    _check_system(system)
    if not step > 0:
        raise ValueError("step must be positive")
    dt = TIME_STEP_RATIO * step / c if time_step is None else float(time_step)
    if not dt > 0:
        raise ValueError("time_step must be positive")

    def vec(s):
        return np.concatenate([s.E, s.H])

    f = vec(state_fn(t, y))
    d_t = (vec(state_fn(t + dt, y)) - vec(state_fn(t - dt, y))) / (2.0 * dt)
    d_y = (vec(state_fn(t, y + step)) - vec(state_fn(t, y - step))) / (2.0 * step)
    Ex, Ez, Hx, Hz = 0, 2, 3, 5

    kappa = mass * c / hbar
    s = 1.0 if system == "prime" else -1.0
    lhs = np.array(
        [
            d_t[Ex] / c - s * d_y[Hz],
            d_t[Ez] / c + s * d_y[Hx],
            d_t[Hx] / c + s * d_y[Ez],
            d_t[Hz] / c - s * d_y[Ex],
        ]
    )
    rhs = 1j * kappa * s * np.array([f[Ex], f[Ez], -f[Hx], -f[Hz]])
    res = lhs - rhs
    out = np.empty(8)
    out[0::2] = res.real
    out[1::2] = res.imag
    return out


def residual_grid(
    params: TrigSolutionParams,
    system: System | None = None,
    mass: float = 0.0,
    n: int = 5,
    phase_step: float = DEFAULT_PHASE_STEP,
    hbar: float = 1.0545718176461565e-34,
) -> float:
    """Max |residual| of a trig solution over an ``n x n`` grid covering one period and one wavelength."""
    system = params.system if system is None else system
    fn = trig_sampler(params)
    ts = np.linspace(0.0, params.period, n, endpoint=False)
    ys = np.linspace(0.0, 2.0 * math.pi / params.k, n, endpoint=False)
    step = phase_step / params.k
    worst = 0.0
    for t in ts:
        for y in ys:
            r = scalar_equation_residuals(fn, system, mass, t, y, step, c=params.c, hbar=hbar)
            worst = max(worst, float(np.abs(r).max()))
    return worst


def angular_velocity(params: TrigSolutionParams, t: float = 0.0) -> np.ndarray:
    """``E x dE/dt / |E|^2`` at y = 0, with the analytic time derivative."""
    if params.A0 == 0:
        raise DegenerateRotationError("A0 = 0: the field does not rotate")
    s = sample_trig_solution(params, t, 0.0)
    w, A = params.omega, params.A0
    # E = A (cos wt, 0, -sin wt) for both systems
    dE = np.array([-A * w * math.sin(w * t), 0.0, -A * w * math.cos(w * t)])
    E = np.asarray(s.E)
    return np.cross(E, dE) / np.dot(E, E)


def inner_helicity_sign(params: TrigSolutionParams, t: float = 0.0) -> int:
    """Sign of (field rotation vector) . (Poynting vector)."""
    omega_vec = angular_velocity(params, t)
    S = poynting(sample_trig_solution(params, t, 0.0))
    return 1 if float(np.dot(omega_vec, S)) > 0 else -1


@dataclass(frozen=True)
class RotationSense:
    chirality: Literal["left", "right"]
    relative_to_motion: Literal["aligned", "anti_aligned"]


def rotation_sense(params: TrigSolutionParams, t: float = 0.0) -> RotationSense:
    """Rotation of E about the direction of motion.

    ``aligned`` when the rotation vector points along the Poynting vector.
    Chirality follows the helicity convention: aligned is ``right``.
    """
    if inner_helicity_sign(params, t) > 0:
        return RotationSense("right", "aligned")
    return RotationSense("left", "anti_aligned")


def field_rows(params: TrigSolutionParams, samples: int, use_numba=None) -> np.ndarray:
    """One period at y = 0 as rows matching :data:`CSV_COLUMNS`."""
    if samples < 2:
        raise ValueError("samples must be >= 2")
    t = np.linspace(0.0, params.period, samples, endpoint=False)
    y = np.zeros_like(t)
    EH = sample_trig_grid(params, t, y, use_numba=use_numba)
    S = kernels.cross_rows(EH[:, :3], EH[:, 3:], use_numba=use_numba)
    return np.column_stack([t, y, EH, S])


__all__ = [
    "CSV_COLUMNS",
    "DEFAULT_PHASE_STEP",
    "DegenerateRotationError",
    "FieldState",
    "GAUSSIAN_POYNTING_FACTOR",
    "RotationSense",
    "SYSTEMS",
    "TIME_STEP_RATIO",
    "TrigSolutionParams",
    "angular_velocity",
    "field_rows",
    "inner_helicity_sign",
    "poynting",
    "pseudoscalar",
    "residual_grid",
    "rotation_sense",
    "sample_trig_grid",
    "sample_trig_solution",
    "scalar_equation_residuals",
    "trig_sampler",
]
