"""Continuous logarithms along rays from the origin.

``continuous_log(g, z)`` returns log g(z) obtained by analytic continuation
along the segment [0, z], starting from the principal value at g(0).  The
argument is unwrapped between samples on the segment; the sampling is
doubled for any point whose consecutive argument increments are not safely
below pi, so windings of g around 0 are followed rather than cut.
"""

import numpy as np

from .errors import BranchTrackingError

_MAX_ARG_STEP = np.pi / 4


def continuous_log(g, z, steps=64, max_steps=1 << 14):
    zin = np.asarray(z, dtype=complex)
    zf = np.atleast_1d(zin).ravel()
    out = np.empty_like(zf)
    todo = np.arange(zf.size)
    n = steps
    while todo.size:
        if n > max_steps:
            bad = zf[todo[0]]
            raise BranchTrackingError(
                f"cannot continue log along [0, {bad:.6g}]: argument steps do not resolve", z=bad)
        t = np.linspace(0.0, 1.0, n + 1)
        with np.errstate(all="ignore"):
            vals = g(zf[todo, None] * t[None, :])
        vals = np.broadcast_to(vals, (todo.size, n + 1))
        broken = ~np.all(np.isfinite(vals) & (vals != 0), axis=1)
        if np.any(broken):
            bad = zf[todo[np.argmax(broken)]]
            raise BranchTrackingError(f"zero or non-finite value on the path [0, {bad:.6g}]", z=bad)
        lg = np.log(vals)
        arg = np.unwrap(lg.imag, axis=1)
        fine = np.max(np.abs(np.diff(arg, axis=1)), axis=1) < _MAX_ARG_STEP
        done = todo[fine]
        out[done] = lg.real[fine, -1] + 1j * arg[fine, -1]
        todo = todo[~fine]
        n *= 2
    if zin.ndim == 0:
        return complex(out[0])
    return out.reshape(zin.shape)
