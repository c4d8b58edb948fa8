"""Pure-Python/numpy fallback for the compiled kernels.

Same contracts as ``_kernels.pyx``. The AR(1) recursion is inherently
sequential and runs as a plain loop here; the other two kernels vectorize.
"""

import math

import numpy as np


def ar1_states(z0, eps, a):
    n = eps.shape[0] + 1
    z = np.empty(n, dtype=np.float64)
    s = math.sqrt(1.0 - a * a)
    z[0] = z0
    prev = z0
    for t in range(1, n):
        prev = a * prev + s * eps[t - 1]
        z[t] = prev
    return z


def hold_states(init, jumps, proposals):
    n = jumps.shape[0] + 1
    states = np.empty(n, dtype=np.int64)
    states[0] = init
    states[1:] = proposals
    # index of the most recent jump at or before t (0 = initial state)
    tick = np.where(jumps.astype(bool), np.arange(1, n), 0)
    last = np.maximum.accumulate(np.concatenate(([0], tick)))
    full = np.concatenate(([init], proposals))
    return full[last]


def step_cell_weights(breaks, levels, n):
    # cumulative integral of the step function is piecewise linear with
    # knots at the breakpoints, so linear interpolation is exact
    cum = np.concatenate(([0.0], np.cumsum(levels * np.diff(breaks))))
    grid = np.arange(n + 1, dtype=np.float64) / n
    return np.diff(np.interp(grid, breaks, cum))
