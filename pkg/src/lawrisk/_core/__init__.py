"""Hot numeric kernels with a compiled fast path.

Three inner loops dominate the simulation harness: the AR(1) state
recursion, the Markov hold/jump state path, and the step-spectrum cell
weights. Each exists twice, as a Cython extension (``_kernels``) and as a
pure-Python/numpy fallback (``_kernels_py``). The extension is preferred
when the build produced it; ``BACKEND`` names the selection. Both
implementations are kept behaviourally identical and are cross-checked in
the test suite; ``benchmarks/bench_kernels.py`` compares their speed.
"""

import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
_impl = _compiled if _compiled is not None else _kernels_py


def available_backends():
    """Mapping of backend name -> kernel module, for benchmarks and tests."""
    backends = {"python": _kernels_py}
    if _compiled is not None:
        backends["compiled"] = _compiled
    return backends


def ar1_states(z0: float, eps, a: float) -> np.ndarray:
    """States z_t = a*z_{t-1} + sqrt(1-a^2)*eps_t with z_0 given."""
    eps = np.ascontiguousarray(eps, dtype=np.float64)
    return _impl.ar1_states(float(z0), eps, float(a))


def hold_states(init: int, jumps, proposals) -> np.ndarray:
    """State path that moves to proposals[t] when jumps[t], else holds."""
    jumps = np.ascontiguousarray(jumps, dtype=np.uint8)
    proposals = np.ascontiguousarray(proposals, dtype=np.int64)
    return _impl.hold_states(int(init), jumps, proposals)


def step_cell_weights(breaks, levels, n: int) -> np.ndarray:
    """Integrals of a step function over the n equal cells of (0, 1)."""
    breaks = np.ascontiguousarray(breaks, dtype=np.float64)
    levels = np.ascontiguousarray(levels, dtype=np.float64)
    return _impl.step_cell_weights(breaks, levels, int(n))
