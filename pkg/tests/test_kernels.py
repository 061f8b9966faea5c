"""Compiled and pure-Python kernel backends agree."""

import numpy as np
import pytest

from esnbench import _kernels_py
from esnbench.reservoir import build_reservoir
from esnbench.rng import new_source
from esnbench.transfer import coefficient_array, taylor

try:
    from esnbench import _core
except ImportError:
    _core = None

needs_core = pytest.mark.skipif(_core is None, reason="compiled extension not built")


def _drive_inputs(n=30, t=400, kind="tanh"):
    src = new_source(77)
    res = build_reservoir("scr", n, 0.9, 0.25,
                          src.derive_stream("m"), src.derive_stream("w"))
    u = src.derive_stream("u").uniform(-0.5, 0.5, size=t)
    if kind == "tanh":
        is_tanh, coeffs = True, np.empty(0)
    else:
        is_tanh, coeffs = False, coefficient_array(taylor(3))
    return res.omega, res.input_weights, u, is_tanh, coeffs


@needs_core
@pytest.mark.parametrize("kind", ["tanh", "taylor"])
def test_drive_backends_agree(kind):
    omega, w_in, u, is_tanh, coeffs = _drive_inputs(kind=kind)
    x0 = np.zeros(omega.shape[0])
    s_py, m_py, o_py = _kernels_py.drive_kernel(omega, w_in, u, is_tanh, coeffs, 1e3, x0)
    s_c, m_c, o_c = _core.drive_kernel(omega, w_in, u, is_tanh, coeffs, 1e3, x0.copy())
    assert o_py == o_c == -1
    # contractive dynamics keep the summation-order differences at rounding level
    assert np.allclose(np.asarray(s_c), np.asarray(s_py), rtol=0, atol=1e-10)
    assert m_c == pytest.approx(m_py, abs=1e-10)


@needs_core
def test_drive_backends_agree_on_overflow():
    omega, w_in, u, is_tanh, coeffs = _drive_inputs(kind="taylor")
    x0 = np.zeros(omega.shape[0])
    big_u = np.full(200, 40.0)
    _, m_py, o_py = _kernels_py.drive_kernel(omega, w_in, big_u, False, coeffs, 1e3, x0)
    _, m_c, o_c = _core.drive_kernel(omega, w_in, big_u, False, coeffs, 1e3, x0.copy())
    assert o_py == o_c >= 0
    assert m_py == pytest.approx(m_c, rel=1e-9)


@needs_core
def test_mg_backends_agree_short_horizon():
    # identical operation order: bit-level agreement before chaos can amplify
    g_py, bad_py = _kernels_py.mg_kernel(2000, 0.1, 170, 0.2, 0.1, 10.0, 1.2)
    g_c, bad_c = _core.mg_kernel(2000, 0.1, 170, 0.2, 0.1, 10.0, 1.2)
    assert bad_py == bad_c == -1
    assert np.allclose(np.asarray(g_c), np.asarray(g_py), rtol=0, atol=1e-12)


@needs_core
def test_mg_backends_agree_long_horizon():
    g_py, _ = _kernels_py.mg_kernel(30_000, 0.1, 170, 0.2, 0.1, 10.0, 1.21)
    g_c, _ = _core.mg_kernel(30_000, 0.1, 170, 0.2, 0.1, 10.0, 1.21)
    assert np.allclose(np.asarray(g_c), np.asarray(g_py), rtol=0, atol=1e-6)


def test_pure_backend_env_override(monkeypatch):
    import importlib

    import esnbench.kernels as kmod

    monkeypatch.setenv("ESNBENCH_PURE", "1")
    reloaded = importlib.reload(kmod)
    try:
        assert reloaded.BACKEND == "python"
        assert reloaded.drive_kernel is _kernels_py.drive_kernel
    finally:
        monkeypatch.delenv("ESNBENCH_PURE")
        importlib.reload(kmod)
