"""Linear readout training by pseudoinverse least squares.

The readout solves ``X w = y`` for the recorded state matrix X (bias column
included) in the minimum-norm least-squares sense, via an SVD pseudoinverse
with the MATLAB truncation convention.  All targets share one factorization.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError
from .reservoir import StateTrajectory

__all__ = ["ReadoutWeights", "pseudoinverse", "train", "predict"]


@dataclass(frozen=True)
class ReadoutWeights:
    """Trained linear map, one row per target; last column is the bias weight."""

    weights: np.ndarray

    @property
    def n_targets(self) -> int:
        return self.weights.shape[0]

    @property
    def width(self) -> int:
        return self.weights.shape[1]


def pseudoinverse(matrix: np.ndarray) -> np.ndarray:
    """Moore-Penrose pseudoinverse by SVD.

    Singular values at or below ``max(R, C) * eps * sigma_max`` are truncated,
    matching the default tolerance of the tooling the reference results were
    produced with.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-d matrix, got shape {m.shape}")
    u, sigma, vt = np.linalg.svd(m, full_matrices=False)
    if sigma.size == 0:
        return m.T.copy()
    cutoff = max(m.shape) * np.finfo(float).eps * sigma[0]
    inv_sigma = np.where(sigma > cutoff, 1.0 / np.where(sigma > cutoff, sigma, 1.0), 0.0)
    return (vt.T * inv_sigma) @ u.T


def train(trajectory: StateTrajectory, targets: np.ndarray, ridge: float = 0.0) -> ReadoutWeights:
    """Fit readout weights against one or more target columns.

    ``ridge`` is a debugging hook; the benchmark protocol uses 0, where the
    fit is the minimum-norm least-squares solution.
    """
    x = trajectory.states
    y = np.asarray(targets, dtype=float)
    if y.ndim == 1:
        y = y[:, None]
    if y.shape[0] != x.shape[0]:
        raise DimensionMismatchError(
            f"targets have {y.shape[0]} rows but trajectory has {x.shape[0]}"
        )
    if x.shape[0] < x.shape[1]:
        warnings.warn(
            f"training on {x.shape[0]} rows with {x.shape[1]} features is underdetermined",
            stacklevel=2,
        )
    if ridge > 0.0:
        gram = x.T @ x + ridge * np.eye(x.shape[1])
        weights = np.linalg.solve(gram, x.T @ y).T
    else:
        weights = (pseudoinverse(x) @ y).T
    return ReadoutWeights(weights)


def predict(weights: ReadoutWeights, trajectory: StateTrajectory) -> np.ndarray:
    """Readout outputs for every trajectory row; shape (T_kept, K)."""
    x = trajectory.states
    if weights.width != x.shape[1]:
        raise DimensionMismatchError(
            f"weights expect width {weights.width} but trajectory has {x.shape[1]}"
        )
    return x @ weights.weights.T
