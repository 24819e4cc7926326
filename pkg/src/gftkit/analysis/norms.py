"""Pre-Schwarzian norm ``sup (1-|z|^2) |f''(z)/f'(z)|`` estimation."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .grid import DiskGrid, scan_extremum


@dataclass
class NormEstimate:
    """Sampled lower bound on the pre-Schwarzian norm."""

    value: float
    argmax_z: complex
    grid: DiskGrid
    skipped: int = 0
    evaluated: int = 0

    def to_json(self):
        return {
            "value": self.value,
            "argmax_z": [self.argmax_z.real, self.argmax_z.imag],
            "grid": self.grid.describe(),
            "skipped": self.skipped,
            "evaluated": self.evaluated,
        }


def pre_schwarzian_density(f, z):
    """``(1-|z|^2) |f''/f'|`` at each sample; NaN where f' vanishes."""
    z = np.asarray(z, dtype=complex)
    with np.errstate(all="ignore"):
        p = np.asarray(f.pre_schwarzian(z), dtype=complex)
        out = (1.0 - np.abs(z) ** 2) * np.abs(p)
    return np.where(np.isfinite(out), out, np.nan)


def norm_estimate(f, grid: DiskGrid = None, workers=1) -> NormEstimate:
    grid = grid or DiskGrid()
    res = scan_extremum(lambda z: pre_schwarzian_density(f, z), grid, mode="max", workers=workers)
    return NormEstimate(value=res.value, argmax_z=res.z, grid=grid, skipped=res.skipped, evaluated=res.evaluated)


@dataclass
class RadialLimit:
    """Extrapolated ``lim_{t->1-} (1-t^2)|f''/f'|(t e^{i theta})``.

    ``value`` is ``inf`` when the sequence diverges; ``last_finite`` then
    holds the last sampled value.
    """

    value: float
    diverged: bool
    last_finite: float
    samples: list = field(default_factory=list)

    def __float__(self):
        return float(self.value)


def radial_norm_limit(f, direction=1.0, kmin=4, kmax=26, order=4) -> RadialLimit:
    """Richardson extrapolation over ``t = 1 - 2**-k``, ``k = kmin..kmax``.

    The profile is assumed to behave like ``L + c1 h + c2 h^2 + ...`` in
    ``h = 1 - t``, so each Richardson column removes one power of ``h``.
    """
    direction = complex(direction)
    direction /= abs(direction)
    ks = np.arange(kmin, kmax + 1)
    h = 2.0 ** (-ks.astype(float))
    t = 1.0 - h
    with np.errstate(all="ignore"):
        q = h * (2.0 - h) * np.abs(np.asarray(f.pre_schwarzian(t * direction), dtype=complex))
    finite = np.isfinite(q)
    if not np.all(finite):
        last = float(q[finite][-1]) if np.any(finite) else float("nan")
        return RadialLimit(math.inf, True, last, q.tolist())

    # a profile growing like h**-p doubles (or more) per step
    tail = q[-4:]
    if tail[-1] > 1.0 and np.all(tail[1:] / tail[:-1] > 1.5):
        return RadialLimit(math.inf, True, float(q[-1]), q.tolist())

    table = [q.copy()]
    for m in range(1, order + 1):
        prev = table[-1]
        table.append((2.0 ** m * prev[1:] - prev[:-1]) / (2.0 ** m - 1.0))
    value = float(table[-1][-1])
    return RadialLimit(value, False, float(q[-1]), q.tolist())
