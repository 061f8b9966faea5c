"""Benchmark signal generators: delay memory, Legendre capacity, delayed
chaotic feedback prediction, and the order-10 nonlinear autoregressive task.

All generators are pure functions of their RandomSource, and every target row
depends only on inputs at the same or earlier times.  Delay targets are
zero-padded for the first ``tau`` rows; the harness washout (2N >= tau_max
under the default configurations) discards those rows before training.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import IntegrationError, InvalidRangeError, RegenerationExhaustedError
from .rng import RandomSource

__all__ = [
    "TASK_KINDS",
    "TaskInstance",
    "gen_memory",
    "legendre_target",
    "gen_legendre",
    "integrate_mackey_glass",
    "gen_mackey_glass",
    "gen_narma10",
]

TASK_KINDS = ("memory", "legendre3", "mackey-glass", "narma10")

MG_BETA = 0.2
MG_GAMMA = 0.1
MG_EXPONENT = 10.0
MG_DELAY = 17.0
MG_STEP = 0.1
MG_TRANSIENT = 1000
MG_INITIAL_HISTORY = 1.2

NARMA_ORDER = 10
NARMA_ALPHA = 0.3
NARMA_BETA = 0.05
NARMA_GAMMA = 1.5
NARMA_DELTA = 0.1


@dataclass(frozen=True)
class TaskInstance:
    """One realized input signal with its target matrix (one column per target)."""

    kind: str
    input: np.ndarray
    targets: np.ndarray
    target_labels: tuple[str, ...]

    @property
    def length(self) -> int:
        return self.input.shape[0]

    @property
    def n_targets(self) -> int:
        return self.targets.shape[1]


def _delay_targets(values: np.ndarray, tau_max: int) -> np.ndarray:
    t_len = values.shape[0]
    targets = np.zeros((t_len, tau_max))
    for tau in range(1, tau_max + 1):
        targets[tau:, tau - 1] = values[: t_len - tau]
    return targets


def gen_memory(src: RandomSource, length: int, tau_max: int) -> TaskInstance:
    """Delay-memory task: target column tau is the input delayed by tau steps."""
    if length <= tau_max:
        raise InvalidRangeError(f"length must exceed tau_max, got {length} <= {tau_max}")
    u = src.uniform(-0.5, 0.5, size=length)
    labels = tuple(f"tau={tau}" for tau in range(1, tau_max + 1))
    return TaskInstance("memory", u, _delay_targets(u, tau_max), labels)


def legendre_target(order: int, u):
    """Legendre polynomial of the given order, by the squared-binomial sum."""
    if not 0 <= order <= 10:
        raise InvalidRangeError(f"order must be in 0..10, got {order}")
    ua = np.asarray(u, dtype=float)
    acc = np.zeros_like(ua)
    for k in range(order + 1):
        acc = acc + math.comb(order, k) ** 2 * (ua - 1.0) ** (order - k) * (ua + 1.0) ** k
    out = acc / 2.0**order
    return float(out) if np.isscalar(u) or out.ndim == 0 else out


def gen_legendre(src: RandomSource, length: int, order: int, tau_max: int) -> TaskInstance:
    """Nonlinear capacity task: delayed Legendre polynomial of the input."""
    if length <= tau_max:
        raise InvalidRangeError(f"length must exceed tau_max, got {length} <= {tau_max}")
    u = src.uniform(-1.0, 1.0, size=length)
    labels = tuple(f"P{order},tau={tau}" for tau in range(1, tau_max + 1))
    return TaskInstance("legendre3", u, _delay_targets(legendre_target(order, u), tau_max), labels)


def integrate_mackey_glass(
    length: int,
    step: float = MG_STEP,
    beta: float = MG_BETA,
    gamma: float = MG_GAMMA,
    n_exp: float = MG_EXPONENT,
    delay: float = MG_DELAY,
    transient: int = MG_TRANSIENT,
    src: RandomSource | None = None,
    initial_history: float = MG_INITIAL_HISTORY,
) -> np.ndarray:
    """Integrate the delayed feedback equation and sample it at unit intervals.

    Fixed-step RK4 with the delay handled by indexing the stored grid exactly
    ``delay/step`` entries back; interior stages interpolate linearly between
    the two bracketing delayed grid values.  The constant initial history is
    perturbed by a seeded uniform offset in [-0.01, 0.01] when ``src`` is
    given, so different seeds yield different chaotic segments.  The first
    ``transient`` samples are discarded.
    """
    if length <= 0 or transient < 0:
        raise InvalidRangeError(f"bad lengths: length={length}, transient={transient}")
    delay_steps = delay / step
    if abs(delay_steps - round(delay_steps)) > 1e-9:
        raise InvalidRangeError(f"step {step} must divide the delay {delay} exactly")
    per_unit = 1.0 / step
    if abs(per_unit - round(per_unit)) > 1e-9:
        raise InvalidRangeError(f"step {step} must divide the unit sampling interval")
    x0 = initial_history
    if src is not None:
        x0 = x0 + src.uniform(-0.01, 0.01)
    units = transient + length
    per_unit_i = round(per_unit)
    grid, bad_step = kernels.mg_kernel(
        units * per_unit_i, step, round(delay_steps), beta, gamma, n_exp, x0
    )
    if bad_step >= 0:
        raise IntegrationError(f"integration diverged at step {bad_step}")
    samples = np.asarray(grid)[per_unit_i::per_unit_i]
    return samples[transient:]


def gen_mackey_glass(src: RandomSource, length: int, horizon: int = 1) -> TaskInstance:
    """Chaotic prediction task: forecast the series ``horizon`` samples ahead.

    The generated series (inputs and targets together) is min-max scaled onto
    [0, 0.5] before splitting into input and shifted target.
    """
    if length <= 0 or horizon < 0:
        raise InvalidRangeError(f"bad lengths: length={length}, horizon={horizon}")
    raw = integrate_mackey_glass(length + horizon, src=src)
    lo = float(raw.min())
    hi = float(raw.max())
    scaled = (raw - lo) / (hi - lo) * 0.5
    u = scaled[:length]
    target = scaled[horizon : horizon + length]
    return TaskInstance("mackey-glass", u, target[:, None], (f"horizon={horizon}",))


def gen_narma10(src: RandomSource, length: int, max_attempts: int = 100) -> TaskInstance:
    """Order-10 nonlinear autoregressive task.

    The recurrence occasionally diverges; instances with any |y| > 1 are
    regenerated from a fresh derived stream, up to ``max_attempts`` times.
    """
    if length <= NARMA_ORDER:
        raise InvalidRangeError(f"length must exceed {NARMA_ORDER}, got {length}")
    for attempt in range(max_attempts):
        u = src.derive_stream(f"attempt/{attempt}").uniform(0.0, 0.5, size=length)
        y = np.zeros(length)
        ok = True
        for t in range(NARMA_ORDER, length):
            y[t] = (
                NARMA_ALPHA * y[t - 1]
                + NARMA_BETA * y[t - 1] * float(np.sum(y[t - NARMA_ORDER : t]))
                + NARMA_GAMMA * u[t - NARMA_ORDER] * u[t - 1]
                + NARMA_DELTA
            )
            if abs(y[t]) > 1.0:
                ok = False
                break
        if ok:
            return TaskInstance("narma10", u, y[:, None], ("narma10",))
    raise RegenerationExhaustedError(f"no bounded instance after {max_attempts} attempts")
