"""Pseudoinverse readout training."""

import numpy as np
import pytest

from esnbench.errors import DimensionMismatchError
from esnbench.readout import predict, pseudoinverse, train
from esnbench.reservoir import build_reservoir, drive
from esnbench.rng import new_source
from esnbench.transfer import TANH


def penrose_conditions(m, p, tol):
    """Oracle: the four defining conditions of the pseudoinverse."""
    scale = max(1.0, np.abs(m).max())
    assert np.allclose(m @ p @ m, m, atol=tol * scale)
    assert np.allclose(p @ m @ p, p, atol=tol * max(1.0, np.abs(p).max()))
    assert np.allclose((m @ p).T, m @ p, atol=tol * scale)
    assert np.allclose((p @ m).T, p @ m, atol=tol * scale)


def test_pinv_identity():
    assert np.allclose(pseudoinverse(np.eye(4)), np.eye(4), atol=1e-14)


def test_pinv_rank_deficient_diagonal():
    got = pseudoinverse(np.diag([2.0, 0.0]))
    assert np.allclose(got, np.diag([0.5, 0.0]), atol=1e-15)


def test_pinv_full_rank_left_inverse():
    m = new_source(1).derive_stream("m").gaussian(size=(10, 6))
    p = pseudoinverse(m)
    assert np.allclose(p @ m, np.eye(6), atol=1e-10)
    penrose_conditions(m, p, 1e-8)


def test_pinv_penrose_up_to_200x60():
    for shape, stream in (((200, 60), "big"), ((60, 200), "wide"), ((40, 40), "sq")):
        m = new_source(2).derive_stream(stream).gaussian(size=shape)
        penrose_conditions(m, pseudoinverse(m), 1e-8)


def _trajectory(n=20, t=400, seed=0):
    src = new_source(seed)
    res = build_reservoir("scr", n, 0.9, 0.3,
                          src.derive_stream("m"), src.derive_stream("w"))
    u = src.derive_stream("u").uniform(-0.5, 0.5, size=t)
    return drive(res, TANH, u, 2 * n)


def test_train_recovers_state_column():
    traj = _trajectory()
    target = traj.states[:, 3]
    w = train(traj, target)
    expected = np.zeros(traj.width)
    expected[3] = 1.0
    assert np.allclose(w.weights[0], expected, atol=1e-8)
    residual = np.linalg.norm(predict(w, traj)[:, 0] - target)
    assert residual < 1e-8


def test_train_recovers_known_combination():
    traj = _trajectory(seed=1)
    coeffs = np.zeros(traj.width)
    coeffs[0] = 3.0
    coeffs[1] = -2.0
    coeffs[-1] = 0.5
    target = traj.states @ coeffs
    w = train(traj, target)
    assert np.allclose(w.weights[0], coeffs, atol=1e-8)


def test_zero_targets_give_zero_weights():
    traj = _trajectory(seed=2)
    w = train(traj, np.zeros(traj.n_steps))
    assert np.array_equal(w.weights, np.zeros((1, traj.width)))


def test_multi_target_equals_columnwise():
    traj = _trajectory(seed=3)
    targets = new_source(4).derive_stream("y").gaussian(size=(traj.n_steps, 3))
    joint = train(traj, targets)
    for k in range(3):
        single = train(traj, targets[:, k])
        assert np.allclose(joint.weights[k], single.weights[0], atol=1e-10)


def test_training_residual_bounded_by_zero_predictor():
    traj = _trajectory(seed=5)
    targets = new_source(6).derive_stream("y").gaussian(size=(traj.n_steps, 2))
    w = train(traj, targets)
    residual = np.linalg.norm(predict(w, traj) - targets)
    assert residual <= np.linalg.norm(targets)


def test_predict_bias_only_weights():
    traj = _trajectory(seed=7)
    from esnbench.readout import ReadoutWeights

    w = np.zeros((1, traj.width))
    w[0, -1] = 2.5
    out = predict(ReadoutWeights(w), traj)
    assert np.all(out == 2.5)


def test_dimension_mismatches():
    traj = _trajectory(seed=8)
    with pytest.raises(DimensionMismatchError):
        train(traj, np.zeros(traj.n_steps + 1))
    w = train(traj, np.zeros(traj.n_steps))
    from esnbench.readout import ReadoutWeights

    with pytest.raises(DimensionMismatchError):
        predict(ReadoutWeights(w.weights[:, :-1]), traj)


def test_underdetermined_warns():
    traj = _trajectory(n=30, t=80, seed=9)  # 20 kept rows, 31 features
    with pytest.warns(UserWarning):
        train(traj, np.zeros(traj.n_steps))


def test_ridge_hook_shrinks_weights():
    traj = _trajectory(seed=10)
    target = traj.states[:, 2] + 0.01 * new_source(11).gaussian(size=traj.n_steps)
    plain = train(traj, target)
    ridged = train(traj, target, ridge=10.0)
    assert np.linalg.norm(ridged.weights) < np.linalg.norm(plain.weights)
