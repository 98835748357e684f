import math
import os
import subprocess
import sys

import numpy as np
import pytest

from semiphoton_lab import _accel, kernels

paths = pytest.mark.parametrize("use_numba", [False, pytest.param(True, marks=pytest.mark.skipif(
    not _accel.HAVE_NUMBA, reason="numba unavailable"))])


@paths
def test_simpson_exact_for_cubics(use_numba):
    x = np.linspace(-1.0, 2.0, 7)
    y = x**3 - 2 * x + 1
    exact = (2.0**4 - 1) / 4 - (4 - 1) + 3
    assert kernels.simpson_samples(y, x[1] - x[0], use_numba=use_numba) == pytest.approx(exact, rel=1e-14)


@paths
def test_simpson_fourth_order(use_numba):
    errs = []
    for n in (20, 40):
        x = np.linspace(0.0, 1.0, n + 1)
        errs.append(abs(kernels.simpson_samples(np.exp(x), 1.0 / n, use_numba=use_numba) - (math.e - 1)))
    assert 14 < errs[0] / errs[1] < 18


def test_simpson_rejects_odd_interval_count():
    with pytest.raises(ValueError):
        kernels.simpson_samples(np.ones(4), 0.1)
    with pytest.raises(ValueError):
        kernels.simpson_cosine(1.0, 1.0, 0.0, 1.0, 7)


@paths
def test_simpson_cosine_matches_sampled_version(use_numba):
    n = 1000
    a, b, k, amp, ph = -0.3, 2.1, 3.7, 1.9, 0.4
    x = np.linspace(a, b, n + 1)
    ref = kernels.simpson_samples(amp * np.cos(k * x + ph), (b - a) / n, use_numba=False)
    got = kernels.simpson_cosine(amp, k, a, b, n, phase=ph, use_numba=use_numba)
    assert got == pytest.approx(ref, rel=1e-13)
    assert got == pytest.approx(amp * (math.sin(k * b + ph) - math.sin(k * a + ph)) / k, rel=1e-9)


def test_numba_and_numpy_paths_agree():
    rng = np.random.default_rng(1)
    t, y = rng.normal(size=50), rng.normal(size=50)
    for h_sign in (-1.0, 1.0):
        a = kernels.trig_fields(1.3, 2.0, 2.0, h_sign, t, y, use_numba=True)
        b = kernels.trig_fields(1.3, 2.0, 2.0, h_sign, t, y, use_numba=False)
        np.testing.assert_allclose(a, b, rtol=0, atol=1e-15)
    u, v = rng.normal(size=(20, 3)), rng.normal(size=(20, 3))
    np.testing.assert_allclose(kernels.cross_rows(u, v, use_numba=True), np.cross(u, v), atol=1e-15)


def test_env_flag_disables_numba():
    code = "from semiphoton_lab import _accel; print(_accel.NUMBA_ENABLED)"
    env = dict(os.environ, SEMIPHOTON_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
    env["SEMIPHOTON_DISABLE_NUMBA"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == str(_accel.HAVE_NUMBA)
