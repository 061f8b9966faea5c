"""Pure NumPy/Python reference kernels.

Same contracts as the compiled versions in ``_core``; selected at import by
:mod:`esnbench.kernels` when the extension is unavailable or disabled.
"""

from __future__ import annotations

import math

import numpy as np


def drive_kernel(omega, w_in, u, is_tanh, coeffs, limit, x0):
    """Iterate the reservoir recurrence over the whole input sequence.

    Row t of the returned state matrix is the state right after input t has
    been consumed.  Returns (states, max_abs, overflow_step); overflow_step
    is -1 when no state magnitude exceeded ``limit``, else the step at which
    iteration stopped.
    """
    n = omega.shape[0]
    t_len = u.shape[0]
    states = np.zeros((t_len, n))
    x = x0.copy()
    m = coeffs.shape[0]
    max_abs = 0.0
    for t in range(t_len):
        pre = omega @ x + w_in * u[t]
        if is_tanh:
            x = np.tanh(pre)
        else:
            s = pre * pre
            p = np.full(n, coeffs[m - 1])
            for k in range(m - 2, -1, -1):
                p = p * s + coeffs[k]
            x = pre * p
        states[t] = x
        step_max = float(np.max(np.abs(x)))
        if step_max > max_abs:
            max_abs = step_max
        if max_abs > limit:
            return states, max_abs, t
    return states, max_abs, -1


def mg_kernel(steps, h, delay_steps, beta, gamma, n_exp, x0):
    """Fixed-step RK4 for the delayed feedback equation.

    The delayed value at interior stages is the linear interpolant of the two
    bracketing grid values; history before t=0 is the constant ``x0``.
    Returns (grid, bad_step); bad_step is -1 unless a non-finite value
    appeared, in which case integration stopped there.
    """
    g = np.zeros(steps + 1)
    g[0] = x0
    d = delay_steps
    for i in range(steps):
        xd0 = g[i - d] if i >= d else x0
        j = i + 1 - d
        xd1 = g[j] if j >= 0 else x0
        xdm = 0.5 * (xd0 + xd1)
        x = g[i]
        k1 = beta * xd0 / (1.0 + xd0**n_exp) - gamma * x
        x2 = x + 0.5 * h * k1
        k2 = beta * xdm / (1.0 + xdm**n_exp) - gamma * x2
        x3 = x + 0.5 * h * k2
        k3 = beta * xdm / (1.0 + xdm**n_exp) - gamma * x3
        x4 = x + h * k3
        k4 = beta * xd1 / (1.0 + xd1**n_exp) - gamma * x4
        nxt = x + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
        if not math.isfinite(nxt):
            return g, i
        g[i + 1] = nxt
    return g, -1
