"""Sampled margins for the spirallike, convex and Kaplan (close-to-convex) conditions."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..errors import AnalysisError, DomainError
from .grid import DiskGrid, scan_extremum

MEMBERSHIP_TOL = 1e-9
KAPLAN_NODES = 1440


@dataclass(frozen=True)
class ClassSpec:
    """A family condition: ``spirallike(alpha, lam)``, ``convex(lam)`` or ``kaplan``."""

    kind: str
    alpha: float = 0.0
    lam: float = 0.0

    def __post_init__(self):
        if self.kind not in ("spirallike", "convex", "kaplan"):
            raise DomainError(f"unknown family {self.kind!r}")
        if not -math.pi / 2 < self.alpha < math.pi / 2:
            raise DomainError(f"alpha must lie in (-pi/2, pi/2), got {self.alpha}")

    @classmethod
    def spirallike(cls, alpha, lam):
        return cls("spirallike", float(alpha), float(lam))

    @classmethod
    def starlike(cls, lam=0.0):
        return cls("spirallike", 0.0, float(lam))

    @classmethod
    def convex(cls, lam=0.0):
        return cls("convex", 0.0, float(lam))

    @classmethod
    def kaplan(cls):
        return cls("kaplan")

    def label(self):
        if self.kind == "spirallike":
            return f"spirallike(alpha={self.alpha:g}, lam={self.lam:g})"
        if self.kind == "convex":
            return f"convex(lam={self.lam:g})"
        return "kaplan"


@dataclass
class MembershipReport:
    family: ClassSpec
    margin: float
    witness_z: complex
    verdict: bool
    tol: float = MEMBERSHIP_TOL
    skipped: int = 0
    detail: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "family": self.family.label(),
            "margin": self.margin,
            "witness_z": [self.witness_z.real, self.witness_z.imag],
            "verdict": self.verdict,
            "tol": self.tol,
            "skipped": self.skipped,
            "detail": self.detail,
        }


def membership_value(f, family: ClassSpec, z):
    """Defining quantity minus its threshold at the given points (not for kaplan)."""
    z = np.asarray(z, dtype=complex)
    with np.errstate(all="ignore"):
        if family.kind == "spirallike":
            q = (cmath.exp(1j * family.alpha) * np.asarray(f.z_dlog_f(z))).real
            out = q - family.lam * math.cos(family.alpha)
        elif family.kind == "convex":
            out = (1.0 + z * np.asarray(f.pre_schwarzian(z))).real - family.lam
        else:
            raise DomainError("kaplan is an integral condition; use membership_margin")
    out = np.where(np.isfinite(out), out, np.nan)
    return float(out) if out.ndim == 0 else out


def kaplan_profile(f, r, nodes=KAPLAN_NODES):
    """Inf over arcs of length <= 2 pi of ``int Re(1 + z f''/f') d theta`` on |z| = r.

    Composite Simpson on ``nodes`` equispaced angles; arc endpoints run over the
    even nodes so every arc is an exact union of Simpson panels.  The circle is
    traversed twice so arcs crossing theta = 0 are included.
    Returns ``(inf_integral, theta1, theta2)``.
    """
    if nodes % 2:
        raise DomainError("Simpson needs an even node count")
    h = 2.0 * math.pi / nodes
    theta = h * np.arange(2 * nodes + 1)
    z = r * np.exp(1j * theta[:nodes])
    with np.errstate(all="ignore"):
        g = (1.0 + z * np.asarray(f.pre_schwarzian(z))).real
    if not np.all(np.isfinite(g)):
        return math.nan, math.nan, math.nan
    g = np.concatenate([g, g, g[:1]])
    panels = h / 3.0 * (g[0:-2:2] + 4.0 * g[1:-1:2] + g[2::2])
    cum = np.concatenate([[0.0], np.cumsum(panels)])  # at even nodes, two turns
    per_turn = nodes // 2
    # arc (i, j), 0 < j - i <= per_turn: integral = cum[j] - cum[i]
    windows = sliding_window_view(cum[:-1], per_turn)  # windows[j0] = cum[j0 : j0+per_turn]
    best_prev = windows.max(axis=1)
    arg_prev = windows.argmax(axis=1)
    ends = np.arange(per_turn, per_turn + best_prev.size)
    vals = cum[ends] - best_prev
    k = int(np.argmin(vals))
    i = k + int(arg_prev[k])
    j = int(ends[k])
    return float(vals[k]), float(2 * i * h % (2 * math.pi)), float(2 * j * h % (2 * math.pi))


def membership_margin(f, family: ClassSpec, grid: DiskGrid = None, tol=MEMBERSHIP_TOL, workers=1) -> MembershipReport:
    """Sampled infimum of the defining quantity minus its threshold.

    * spirallike(alpha, lam): inf Re(e^{i alpha} z f'/f) - lam cos alpha
    * convex(lam): inf Re(1 + z f''/f') - lam
    * kaplan: inf over r on the ladder and arcs of the Kaplan integral, plus pi

    The verdict is ``margin > -tol``.
    """
    grid = grid or DiskGrid()
    if family.kind == "kaplan":
        best = (math.inf, 0j, None)
        skipped = 0
        for r in grid.radius_ladder():
            val, t1, t2 = kaplan_profile(f, r)
            if not math.isfinite(val):
                skipped += 1
                continue
            if val < best[0]:
                best = (val, r * cmath.exp(1j * t1), (float(r), t1, t2))
        if best[2] is None:
            raise AnalysisError("every Kaplan radius was singular")
        margin = best[0] + math.pi
        r, t1, t2 = best[2]
        return MembershipReport(family, margin, best[1], margin > -tol, tol, skipped,
                                {"r": r, "theta1": t1, "theta2": t2, "integral": best[0]})

    res = scan_extremum(lambda z: membership_value(f, family, z), grid, mode="min", workers=workers)
    return MembershipReport(family, res.value, res.z, res.value > -tol, tol, res.skipped,
                            {"evaluated": res.evaluated})
