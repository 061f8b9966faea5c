# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: reservoir drive loop and delayed-feedback RK4.

Mirrors the contracts of ``_kernels_py``; the arithmetic is arranged in the
same order so both backends agree to rounding noise.
"""

import numpy as np

from libc.math cimport fabs, isfinite, pow, tanh
from scipy.linalg.cython_blas cimport dgemv


def drive_kernel(double[:, ::1] omega, double[::1] w_in, double[::1] u,
                 bint is_tanh, double[::1] coeffs, double limit,
                 double[::1] x0):
    cdef Py_ssize_t n = omega.shape[0]
    cdef Py_ssize_t t_len = u.shape[0]
    cdef Py_ssize_t m = coeffs.shape[0]
    states_arr = np.zeros((t_len, n))
    x_arr = np.array(x0, dtype=float, copy=True)
    pre_arr = np.empty(n)
    cdef double[:, ::1] states = states_arr
    cdef double[::1] x = x_arr
    cdef double[::1] pre = pre_arr
    cdef double max_abs = 0.0
    cdef double acc, s, p, val, av, ut
    cdef Py_ssize_t t, i, k
    # row-major omega passed to Fortran BLAS as its transpose, so trans='T'
    # computes omega @ x
    cdef char trans = b'T'
    cdef int n_blas = <int> n
    cdef int inc = 1
    cdef double one = 1.0
    for t in range(t_len):
        ut = u[t]
        for i in range(n):
            pre[i] = w_in[i] * ut
        dgemv(&trans, &n_blas, &n_blas, &one, &omega[0, 0], &n_blas,
              &x[0], &inc, &one, &pre[0], &inc)
        for i in range(n):
            acc = pre[i]
            if is_tanh:
                val = tanh(acc)
            else:
                s = acc * acc
                p = coeffs[m - 1]
                for k in range(m - 2, -1, -1):
                    p = p * s + coeffs[k]
                val = acc * p
            x[i] = val
            states[t, i] = val
            av = fabs(val)
            if av > max_abs:
                max_abs = av
        if max_abs > limit:
            return states_arr, max_abs, t
    return states_arr, max_abs, -1


def mg_kernel(Py_ssize_t steps, double h, Py_ssize_t delay_steps,
              double beta, double gamma, double n_exp, double x0):
    g_arr = np.zeros(steps + 1)
    cdef double[::1] g = g_arr
    g[0] = x0
    cdef Py_ssize_t d = delay_steps
    cdef Py_ssize_t i, j
    cdef double xd0, xd1, xdm, x, x2, x3, x4, k1, k2, k3, k4, nxt
    for i in range(steps):
        xd0 = g[i - d] if i >= d else x0
        j = i + 1 - d
        xd1 = g[j] if j >= 0 else x0
        xdm = 0.5 * (xd0 + xd1)
        x = g[i]
        k1 = beta * xd0 / (1.0 + pow(xd0, n_exp)) - gamma * x
        x2 = x + 0.5 * h * k1
        k2 = beta * xdm / (1.0 + pow(xdm, n_exp)) - gamma * x2
        x3 = x + 0.5 * h * k2
        k3 = beta * xdm / (1.0 + pow(xdm, n_exp)) - gamma * x3
        x4 = x + h * k3
        k4 = beta * xd1 / (1.0 + pow(xd1, n_exp)) - gamma * x4
        nxt = x + (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)
        if not isfinite(nxt):
            return g_arr, i
        g[i + 1] = nxt
    return g_arr, -1
