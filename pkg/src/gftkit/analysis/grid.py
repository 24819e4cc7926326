"""Deterministic sampling of the open unit disk and sup/inf search on it."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from ..errors import AnalysisError, DomainError


@dataclass(frozen=True)
class DiskGrid:
    """Radii on a geometric ladder in ``1 - r`` up to ``rmax``, uniform angles.

    ``refine`` rounds of local 3x subdivision are applied around the best
    sample by :func:`scan_extremum`.
    """

    rmax: float = 0.9995
    radii: int = 60
    angles: int = 720
    refine: int = 3

    def __post_init__(self):
        if not 0 < self.rmax < 1:
            raise DomainError(f"rmax must lie in (0, 1), got {self.rmax}")
        if self.radii < 1 or self.angles < 4 or self.refine < 0:
            raise DomainError("grid needs radii >= 1, angles >= 4, refine >= 0")

    def radius_ladder(self):
        j = np.arange(1, self.radii + 1)
        return 1.0 - (1.0 - self.rmax) ** (j / self.radii)

    def angle_nodes(self):
        return 2.0 * np.pi * np.arange(self.angles) / self.angles

    def points(self):
        """Sample points as a (radii, angles) array."""
        return self.radius_ladder()[:, None] * np.exp(1j * self.angle_nodes())[None, :]

    def describe(self):
        return asdict(self)


@dataclass
class ScanResult:
    value: float
    z: complex
    evaluated: int
    skipped: int


def _banded(func, pts, workers):
    if workers <= 1 or pts.shape[0] < 2:
        return func(pts)
    bands = np.array_split(np.arange(pts.shape[0]), workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda rows: func(pts[rows]), bands))
    return np.concatenate(parts, axis=0)


def _pick(vals, pts, mode):
    finite = np.isfinite(vals)
    if not np.any(finite):
        return None
    masked = np.where(finite, vals, -np.inf if mode == "max" else np.inf)
    k = int(np.argmax(masked) if mode == "max" else np.argmin(masked))
    return float(masked.flat[k]), complex(pts.flat[k])


def scan_extremum(func: Callable, grid: DiskGrid, mode="max", workers=1) -> ScanResult:
    """Sup (``mode="max"``) or inf of a real-valued sample function over the grid.

    ``func`` maps a complex array to a real array of the same shape; NaN or
    infinite entries count as skipped samples.  The best base sample is then
    polished by ``grid.refine`` rounds of a 7x7 local patch whose spacing
    shrinks by 3 each round.  Points never leave ``|z| <= rmax``.
    """
    if mode not in ("max", "min"):
        raise ValueError(mode)
    pts = grid.points()
    with np.errstate(all="ignore"):
        vals = np.asarray(_banded(func, pts, workers), dtype=float)
    evaluated = vals.size
    skipped = int(np.count_nonzero(~np.isfinite(vals)))
    best = _pick(vals, pts, mode)
    if best is None:
        raise AnalysisError("every grid sample was singular")
    value, z = best

    ladder = grid.radius_ladder()
    j = int(np.argmin(np.abs(ladder - abs(z))))
    dr = max(ladder[j] - ladder[j - 1] if j > 0 else ladder[0],
             ladder[j + 1] - ladder[j] if j + 1 < ladder.size else 0.0)
    dth = 2.0 * math.pi / grid.angles
    offsets = np.linspace(-1.0, 1.0, 7)
    for _ in range(grid.refine):
        r = np.clip(abs(z) + dr * offsets, 1e-12, grid.rmax)
        th = math.atan2(z.imag, z.real) + dth * offsets
        patch = r[:, None] * np.exp(1j * th)[None, :]
        with np.errstate(all="ignore"):
            pv = np.asarray(func(patch), dtype=float)
        evaluated += pv.size
        skipped += int(np.count_nonzero(~np.isfinite(pv)))
        cand = _pick(pv, patch, mode)
        if cand is not None and (cand[0] > value if mode == "max" else cand[0] < value):
            value, z = cand
        dr /= 3.0
        dth /= 3.0
    return ScanResult(value=value, z=z, evaluated=evaluated, skipped=skipped)
