"""Adaptive Gauss-Legendre integration along straight segments [0, z].

All integrals of the form ``int_0^z g(w) dw`` in this package go through
:func:`segment_integral`.  Each panel is integrated with 16-point
Gauss-Legendre and compared with the sum over its two halves; a panel is
accepted once the two agree to ``rtol`` relative to the panel's L1 mass,
otherwise it is bisected.  Panels of many points are processed together in
one vectorized sweep.
"""

from __future__ import annotations

import numpy as np

from .errors import QuadratureError

GL_ORDER = 16
MAX_DEPTH = 24
RTOL = 1e-11

_X, _W = np.polynomial.legendre.leggauss(GL_ORDER)


def _panel(integrand, z, a, b):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    t = mid[:, None] + half[:, None] * _X[None, :]
    vals = np.asarray(integrand(z[:, None] * t), dtype=complex)
    vals = np.broadcast_to(vals, t.shape)
    s = (vals @ _W) * half * z
    mass = (np.abs(vals) @ _W) * half * np.abs(z)
    return s, mass


def segment_integral(integrand, z, rtol=RTOL, max_depth=MAX_DEPTH, strict=True):
    """Integrate ``integrand`` (vectorized, complex) from 0 to each ``z``.

    With ``strict=False`` points whose integrand is not finite, or whose
    refinement exceeds ``max_depth``, come back as NaN instead of raising.
    """
    zin = np.asarray(z, dtype=complex)
    zf = np.atleast_1d(zin).ravel()
    total = np.zeros_like(zf)
    failed = np.zeros(zf.size, dtype=bool)

    idx = np.arange(zf.size)
    a = np.zeros(zf.size)
    b = np.ones(zf.size)
    depth = np.zeros(zf.size, dtype=int)
    with np.errstate(all="ignore"):
        coarse, _ = _panel(integrand, zf[idx], a, b)
        while idx.size:
            mid = 0.5 * (a + b)
            left, mleft = _panel(integrand, zf[idx], a, mid)
            right, mright = _panel(integrand, zf[idx], mid, b)
            fine = left + right
            finite = np.isfinite(fine) & np.isfinite(coarse)
            ok = finite & (np.abs(fine - coarse) <= rtol * (mleft + mright))
            np.add.at(total, idx[ok], fine[ok])

            if not np.all(finite):
                bad = idx[~finite]
                if strict:
                    zb = zf[bad[0]]
                    raise QuadratureError(
                        f"integrand not finite on [0, {zb:.6g}]", {"z": zb, "t": float(a[~finite][0])})
                failed[bad] = True

            split = ~ok & finite
            too_deep = split & (depth >= max_depth)
            if np.any(too_deep):
                deep = idx[too_deep]
                if strict:
                    zb = zf[deep[0]]
                    raise QuadratureError(
                        f"no convergence after {max_depth} bisections on [0, {zb:.6g}]",
                        {"z": zb, "depth": max_depth, "panel": (float(a[too_deep][0]), float(b[too_deep][0])),
                         "error": float(np.abs(fine - coarse)[too_deep][0])})
                failed[deep] = True
                split &= ~too_deep

            idx = np.concatenate([idx[split], idx[split]])
            depth = np.concatenate([depth[split], depth[split]]) + 1
            a, b = np.concatenate([a[split], mid[split]]), np.concatenate([mid[split], b[split]])
            coarse = np.concatenate([left[split], right[split]])
            # drop remaining panels of points already marked failed
            if np.any(failed[idx]):
                keep = ~failed[idx]
                idx, depth, a, b, coarse = idx[keep], depth[keep], a[keep], b[keep], coarse[keep]

    total[failed] = np.nan
    if zin.ndim == 0:
        return complex(total[0])
    return total.reshape(zin.shape)
