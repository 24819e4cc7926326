"""Numerical refutation of univalence by locating ``f(z1) = f(z2)`` with ``z1 != z2``.

Finding nothing proves nothing: the search only samples the grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.spatial import cKDTree

from .grid import DiskGrid

NEWTON_TOL = 1e-12
DELTA_SEP = 0.05


@dataclass
class Collision:
    z1: complex
    z2: complex
    residual: float
    polished: bool
    iterations: int = 0
    note: str = ""

    @property
    def separation(self):
        return abs(self.z1 - self.z2)

    def to_json(self):
        return {
            "z1": [self.z1.real, self.z1.imag],
            "z2": [self.z2.real, self.z2.imag],
            "residual": self.residual,
            "separation": self.separation,
            "polished": self.polished,
            "iterations": self.iterations,
            "note": self.note,
        }


def _relative_residual(w1, w2):
    return abs(w1 - w2) / max(1.0, abs(w1), abs(w2))


def polish_pair(f, z1, z2, tol=NEWTON_TOL, max_iter=60):
    """Minimum-norm Newton on ``F(z1, z2) = f(z1) - f(z2) = 0``.

    One complex equation in two complex unknowns: each step is the smallest
    correction ``(dz1, dz2)`` that zeroes the linearized residual.
    Returns ``(z1, z2, residual, converged, iterations)``; the residual is
    relative to ``max(1, |f|)``.
    """
    z1, z2 = complex(z1), complex(z2)
    res = math.inf
    for it in range(1, max_iter + 1):
        w1, w2 = complex(f.eval_f(z1)), complex(f.eval_f(z2))
        res = _relative_residual(w1, w2)
        if not math.isfinite(res):
            return z1, z2, res, False, it
        if res <= tol:
            return z1, z2, res, True, it
        d1, d2 = complex(f.eval_df(z1)), complex(f.eval_df(z2))
        denom = abs(d1) ** 2 + abs(d2) ** 2
        if denom == 0 or not math.isfinite(denom):
            return z1, z2, res, False, it
        F = w1 - w2
        z1 -= F * d1.conjugate() / denom
        z2 += F * d2.conjugate() / denom
        if abs(z1) >= 1 or abs(z2) >= 1:
            return z1, z2, res, False, it
    return z1, z2, res, False, max_iter


def _local_spacing(grid: DiskGrid):
    ladder = grid.radius_ladder()
    gaps = np.diff(np.concatenate([[0.0], ladder]))
    dr = np.maximum(gaps, np.concatenate([gaps[1:], gaps[-1:]]))
    arc = ladder * 2.0 * math.pi / grid.angles
    return np.broadcast_to(np.maximum(dr, arc)[:, None], (grid.radii, grid.angles))


def collision_candidates(f, grid: DiskGrid, delta_sep=DELTA_SEP, eps_value=None, neighbours=16, slack=1.0):
    """Grid pairs whose values nearly coincide while the points are well separated.

    A pair qualifies when ``|f(z1) - f(z2)|`` is within ``slack`` times what
    the grid can resolve there (``|f'| * local spacing`` at both points) or
    below ``eps_value``.  Returned best-first as ``(score, z1, z2)``.
    """
    pts = grid.points()
    vals = np.asarray(f.eval_f_lenient(pts))
    with np.errstate(all="ignore"):
        dvals = np.abs(np.asarray(f.eval_df(pts)))
    resolution = dvals * _local_spacing(grid)
    ok = np.isfinite(vals) & np.isfinite(resolution)
    pts, vals, resolution = pts[ok], vals[ok], resolution[ok]
    if pts.size < 2:
        return []

    tree = cKDTree(np.column_stack([vals.real, vals.imag]))
    k = min(neighbours + 1, pts.size)
    dist, nbr = tree.query(np.column_stack([vals.real, vals.imag]), k=k)
    i = np.repeat(np.arange(pts.size), k)
    j = nbr.ravel()
    d = dist.ravel()
    keep = (j > i) & (j < pts.size) & (np.abs(pts[i] - pts[j]) > delta_sep)
    i, j, d = i[keep], j[keep], d[keep]
    score = d / (resolution[i] + resolution[j])
    accept = score <= slack
    if eps_value is not None:
        accept |= d < eps_value
    order = np.argsort(score[accept], kind="stable")
    return [(float(s), complex(a), complex(b))
            for s, a, b in zip(score[accept][order], pts[i[accept]][order], pts[j[accept]][order])]


def univalence_falsify(f, grid: DiskGrid = None, eps_value=None, delta_sep=DELTA_SEP,
                       max_candidates=40, tol=NEWTON_TOL) -> Optional[Collision]:
    """Search for two separated points with equal values.

    Candidates come from nearest neighbours in value space; each is polished
    by minimum-norm Newton.  Returns the first polished pair that stays in the
    disk with ``|z1 - z2| > delta_sep``.  If no candidate polishes but some
    Newton run diverged, the best such candidate is returned unpolished as a
    low-confidence hint.  ``None`` does not certify univalence.
    """
    grid = grid or DiskGrid()
    unpolished = None
    for score, a, b in collision_candidates(f, grid, delta_sep, eps_value)[:max_candidates]:
        z1, z2, res, converged, its = polish_pair(f, a, b, tol=tol)
        if converged and abs(z1) < 1 and abs(z2) < 1 and abs(z1 - z2) > delta_sep:
            return Collision(z1, z2, res, True, its, f"grid score {score:.3g}")
        if not converged and unpolished is None and abs(z1 - z2) > delta_sep:
            unpolished = Collision(a, b, _relative_residual(complex(f.eval_f(a)), complex(f.eval_f(b))),
                                   False, its, "Newton did not converge; low confidence")
    return unpolished
