"""Capacity and normalized error metrics."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from esnbench.errors import DegenerateVarianceError, DimensionMismatchError
from esnbench.metrics import capacity, nmse, total_capacity
from esnbench.rng import new_source


def test_perfect_correlation():
    y = new_source(1).uniform(-1, 1, size=500)
    assert capacity(y, y) == pytest.approx(1.0, abs=1e-12)


def test_affine_invariance():
    y = new_source(2).uniform(-1, 1, size=500)
    assert capacity(y, -2.0 * y + 7.0) == pytest.approx(1.0, abs=1e-12)


def test_symmetry():
    a = new_source(3).uniform(-1, 1, size=300)
    b = new_source(4).uniform(-1, 1, size=300)
    assert capacity(a, b) == pytest.approx(capacity(b, a), abs=1e-15)


def test_independent_sequences_have_null_capacity():
    # null-distribution oracle: E[C] ~ 1/T for independent sequences
    vals = []
    for k in range(50):
        src = new_source(100 + k)
        a = src.derive_stream("a").uniform(-1, 1, size=2000)
        b = src.derive_stream("b").uniform(-1, 1, size=2000)
        vals.append(capacity(a, b))
    mean = float(np.mean(vals))
    assert mean < 0.01
    assert mean == pytest.approx(1.0 / 2000.0, rel=1.0)  # order-of-magnitude check


def test_degenerate_variance_returns_zero():
    y = new_source(5).uniform(-1, 1, size=100)
    assert capacity(np.full(100, 3.0), y) == 0.0
    assert capacity(y, np.zeros(100)) == 0.0


@given(st.floats(min_value=0.1, max_value=10.0), st.floats(min_value=-5.0, max_value=5.0))
def test_capacity_affine_invariance_property(scale, shift):
    y = new_source(6).uniform(-1, 1, size=200)
    z = new_source(7).uniform(-1, 1, size=200)
    base = capacity(y, z)
    assert capacity(scale * y + shift, z) == pytest.approx(base, rel=1e-9, abs=1e-12)


def test_total_capacity_sums_columns():
    y = new_source(8).uniform(-1, 1, size=(400, 100))
    profile = total_capacity(y, y)
    assert profile.total == pytest.approx(100.0, abs=1e-9)
    assert len(profile.per_delay) == 100
    assert all(0.0 <= c <= 1.0 + 1e-9 for _, c in profile.per_delay)


def test_total_capacity_mixed_columns():
    src = new_source(9)
    targets = src.derive_stream("t").uniform(-1, 1, size=(500, 10))
    outputs = targets.copy()
    outputs[:, 3:] = 0.0  # 7 zero-signal columns carry no capacity
    profile = total_capacity(outputs, targets)
    assert profile.total == pytest.approx(3.0, abs=1e-9)


def test_total_capacity_single_column_reduces_to_capacity():
    a = new_source(10).derive_stream("a").uniform(-1, 1, size=300)
    b = new_source(10).derive_stream("b").uniform(-1, 1, size=300)
    assert total_capacity(a[:, None], b[:, None]).total == pytest.approx(capacity(a, b))


def test_nmse_zero_for_exact_prediction():
    y = new_source(11).uniform(-1, 1, size=200)
    assert nmse(y, y) == 0.0


def test_nmse_constant_offset():
    y = new_source(12).uniform(-1, 1, size=1000)
    c = 0.3
    assert nmse(y + c, y) == pytest.approx(c / np.var(y), rel=1e-12)


def test_nmse_zero_predictor_of_unit_variance_target():
    # RMSE -> sigma = 1 and Var -> 1 for a large standardized target
    y = new_source(13).gaussian(size=100_000)
    y = (y - y.mean()) / y.std()
    assert nmse(np.zeros_like(y), y) == pytest.approx(1.0, abs=1e-9)


def test_nmse_scale_covariance():
    y = new_source(14).uniform(-1, 1, size=500)
    z = new_source(15).uniform(-1, 1, size=500)
    s = 3.0
    assert nmse(s * y, s * z) == pytest.approx(nmse(y, z) / s, rel=1e-12)


def test_nmse_standard_convention():
    y = new_source(16).uniform(-1, 1, size=500)
    z = new_source(17).uniform(-1, 1, size=500)
    mse = float(np.mean((y - z) ** 2))
    assert nmse(y, z, convention="standard") == pytest.approx(mse / np.var(z), rel=1e-12)


def test_nmse_degenerate_target_raises():
    with pytest.raises(DegenerateVarianceError):
        nmse(np.zeros(10), np.ones(10))


def test_shape_validation():
    with pytest.raises(DimensionMismatchError):
        capacity(np.zeros(5), np.zeros(6))
    with pytest.raises(DimensionMismatchError):
        total_capacity(np.zeros((5, 2)), np.zeros((5, 3)))
    with pytest.raises(DimensionMismatchError):
        nmse(np.zeros(5), np.zeros(6))
    with pytest.raises(DimensionMismatchError):
        nmse(np.zeros(5), np.zeros(5), convention="other")
