"""Hot numeric kernels.

Each kernel has a numba loop version and a vectorised numpy version that
compute the same thing. The public wrappers pick one: ``use_numba=None``
follows the import-time flag in :mod:`semiphoton_lab._accel`.
"""

import math

import numpy as np

from semiphoton_lab import _accel
from semiphoton_lab._accel import njit


def _want_numba(use_numba):
    if use_numba is None:
        return _accel.NUMBA_ENABLED
    return bool(use_numba) and _accel.HAVE_NUMBA


# -- composite Simpson on uniform samples ------------------------------------


@njit
def _simpson_samples_nb(y, dx):
    n = y.shape[0] - 1
    odd = 0.0
    even = 0.0
    for i in range(1, n, 2):
        odd += y[i]
    for i in range(2, n, 2):
        even += y[i]
    return dx / 3.0 * (y[0] + y[n] + 4.0 * odd + 2.0 * even)


def _simpson_samples_np(y, dx):
    return dx / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-1:2].sum())


def simpson_samples(y, dx, use_numba=None):
    """Composite Simpson rule over equally spaced samples.

    ``len(y) - 1`` must be even and at least 2.
    """
    y = np.ascontiguousarray(y, dtype=np.float64)
    n = y.shape[0] - 1
    if n < 2 or n % 2:
        raise ValueError(f"need an even number (>= 2) of intervals, got {n}")
    if _want_numba(use_numba):
        return float(_simpson_samples_nb(y, float(dx)))
    return float(_simpson_samples_np(y, float(dx)))


# -- fused Simpson of amplitude * cos(k l + phase) ---------------------------


@njit
def _simpson_cosine_nb(amplitude, k, phase, a, b, n):
    h = (b - a) / n
    total = math.cos(k * a + phase) + math.cos(k * b + phase)
    for i in range(1, n):
        w = 4.0 if i % 2 else 2.0
        total += w * math.cos(k * (a + i * h) + phase)
    return amplitude * total * h / 3.0


def _simpson_cosine_np(amplitude, k, phase, a, b, n):
    h = (b - a) / n
    vals = np.cos(k * (a + h * np.arange(n + 1)) + phase)
    return amplitude * _simpson_samples_np(vals, h)


def simpson_cosine(amplitude, k, a, b, n, phase=0.0, use_numba=None):
    """Simpson estimate of the integral of ``amplitude*cos(k*l + phase)`` over [a, b].

    Samples are generated inside the loop so no grid is allocated on the
    numba path. ``n`` (interval count) must be even.
    """
    n = int(n)
    if n < 2 or n % 2:
        raise ValueError(f"need an even number (>= 2) of intervals, got {n}")
    args = (float(amplitude), float(k), float(phase), float(a), float(b), n)
    if _want_numba(use_numba):
        return float(_simpson_cosine_nb(*args))
    return float(_simpson_cosine_np(*args))


# -- trigonometric field solutions sampled on (t, y) arrays ------------------


@njit
def _trig_fields_nb(A0, omega, k, h_sign, t, y):
    n = t.shape[0]
    out = np.zeros((n, 6))
    for i in range(n):
        theta = omega * t[i] - k * y[i]
        cs = A0 * math.cos(theta)
        sn = A0 * math.sin(theta)
        out[i, 0] = cs
        out[i, 2] = -sn
        out[i, 3] = h_sign * sn
        out[i, 5] = h_sign * cs
    return out


def _trig_fields_np(A0, omega, k, h_sign, t, y):
    theta = omega * t - k * y
    cs = A0 * np.cos(theta)
    sn = A0 * np.sin(theta)
    out = np.zeros((t.shape[0], 6))
    out[:, 0] = cs
    out[:, 2] = -sn
    out[:, 3] = h_sign * sn
    out[:, 5] = h_sign * cs
    return out


def trig_fields(A0, omega, k, h_sign, t, y, use_numba=None):
    """Rows of ``(Ex, Ey, Ez, Hx, Hy, Hz)`` for the luminal trig solutions.

    ``h_sign`` is -1 for the prime system and +1 for the double-prime one:
    E is common to both, H flips sign.
    """
    t, y = np.broadcast_arrays(np.asarray(t, dtype=np.float64), np.asarray(y, dtype=np.float64))
    t = np.ascontiguousarray(t.ravel())
    y = np.ascontiguousarray(y.ravel())
    args = (float(A0), float(omega), float(k), float(h_sign), t, y)
    if _want_numba(use_numba):
        return _trig_fields_nb(*args)
    return _trig_fields_np(*args)


# -- row-wise cross product ---------------------------------------------------


@njit
def _cross_rows_nb(a, b):
    n = a.shape[0]
    out = np.empty((n, 3))
    for i in range(n):
        out[i, 0] = a[i, 1] * b[i, 2] - a[i, 2] * b[i, 1]
        out[i, 1] = a[i, 2] * b[i, 0] - a[i, 0] * b[i, 2]
        out[i, 2] = a[i, 0] * b[i, 1] - a[i, 1] * b[i, 0]
    return out


def _cross_rows_np(a, b):
    return np.cross(a, b)


def cross_rows(a, b, use_numba=None):
    a = np.ascontiguousarray(np.atleast_2d(a), dtype=np.float64)
    b = np.ascontiguousarray(np.atleast_2d(b), dtype=np.float64)
    if _want_numba(use_numba):
        return _cross_rows_nb(a, b)
    return _cross_rows_np(a, b)
