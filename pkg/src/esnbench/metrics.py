"""Scoring: squared-correlation capacity and normalized error.

Variances and covariances use population (1/T) normalization throughout; the
capacity ratio is identical under either convention.  ``nmse`` implements the
benchmark's printed form, root-mean-squared error divided by the target
variance; the conventional mean-squared-error-over-variance form is available
as ``convention="standard"``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateVarianceError, DimensionMismatchError

__all__ = ["DEGENERATE_VARIANCE", "CapacityProfile", "capacity", "total_capacity", "nmse"]

DEGENERATE_VARIANCE = 1e-300

NMSE_CONVENTIONS = ("paper", "standard")


@dataclass(frozen=True)
class CapacityProfile:
    """Per-delay capacities (tau, C_tau) and their sum."""

    per_delay: tuple[tuple[int, float], ...]
    total: float


def capacity(y, y_hat) -> float:
    """Squared Pearson correlation between an output and its target.

    Returns 0.0 when either sequence carries no variance: an output with no
    signal has no capacity, and genuinely correlated data almost surely has
    capacity strictly above zero, so a hard 0 doubles as the degeneracy flag.
    """
    a = np.asarray(y, dtype=float).ravel()
    b = np.asarray(y_hat, dtype=float).ravel()
    if a.shape != b.shape:
        raise DimensionMismatchError(f"length mismatch: {a.shape} vs {b.shape}")
    if a.size < 2:
        raise DimensionMismatchError("need at least 2 samples")
    var_a = float(np.var(a))
    var_b = float(np.var(b))
    if var_a < DEGENERATE_VARIANCE or var_b < DEGENERATE_VARIANCE:
        return 0.0
    cov = float(np.mean((a - a.mean()) * (b - b.mean())))
    return cov * cov / (var_a * var_b)


def total_capacity(outputs, targets) -> CapacityProfile:
    """Column-wise capacity and its sum over all delays."""
    out = np.atleast_2d(np.asarray(outputs, dtype=float))
    tgt = np.atleast_2d(np.asarray(targets, dtype=float))
    if out.shape != tgt.shape:
        raise DimensionMismatchError(f"shape mismatch: {out.shape} vs {tgt.shape}")
    per_delay = tuple(
        (k + 1, capacity(out[:, k], tgt[:, k])) for k in range(out.shape[1])
    )
    return CapacityProfile(per_delay, float(sum(c for _, c in per_delay)))


def nmse(y, y_hat, convention: str = "paper") -> float:
    """Normalized error between an output and its target.

    ``paper``: RMSE / Var(target), the printed form. ``standard``:
    MSE / Var(target).
    """
    if convention not in NMSE_CONVENTIONS:
        raise DimensionMismatchError(f"unknown convention {convention!r}")
    a = np.asarray(y, dtype=float).ravel()
    b = np.asarray(y_hat, dtype=float).ravel()
    if a.shape != b.shape:
        raise DimensionMismatchError(f"length mismatch: {a.shape} vs {b.shape}")
    var_b = float(np.var(b))
    if var_b < DEGENERATE_VARIANCE:
        raise DegenerateVarianceError("target variance is numerically zero")
    mse = float(np.mean((a - b) ** 2))
    if convention == "paper":
        return float(np.sqrt(mse)) / var_b
    return mse / var_b
