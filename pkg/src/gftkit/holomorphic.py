"""Common evaluator protocol for functions analytic in the unit disk.

Every evaluator (catalog entry or transform result) exposes value, first and
second derivative, plus a handful of derived quantities that transforms and
analysis compose.  Subclasses override the derived quantities when a closed
form is available; the defaults here fall back on f, f', f'' and, for
logarithms, on continuation along rays.
"""

from __future__ import annotations

import numpy as np

from .branch import continuous_log
from .errors import DomainError, SingularSampleError
from .series import differentiate, evaluate, log_series, shift_down


def as_complex_array(z):
    return np.asarray(z, dtype=complex)


def like_input(z, out):
    """Return a Python complex for scalar input, the array otherwise."""
    if np.ndim(z) == 0:
        return complex(out)
    return out


def log1m(z):
    """Principal log(1 - z), accurate to full relative precision near z = 0.

    ``np.log1p`` is not accurate for complex input, so the real part goes
    through the real ``log1p`` of |1-z|^2 - 1 when |z| < 1/2.
    """
    z = np.asarray(z, dtype=complex)
    a, b = -z.real, -z.imag
    with np.errstate(all="ignore"):
        small = 0.5 * np.log1p(a * (2.0 + a) + b * b) + 1j * np.arctan2(b, 1.0 + a)
        return np.where(np.abs(z) < 0.5, small, np.log(1.0 - z))


SMALL_Z = 1e-3
SMALL_Z_DEGREE = 12


class Holomorphic:
    name = "anonymous"
    params = {}
    normalized = True

    # -- to be supplied by subclasses ---------------------------------
    def eval_f(self, z):
        raise NotImplementedError

    def eval_df(self, z):
        raise NotImplementedError

    def eval_ddf(self, z):
        raise NotImplementedError

    def series(self, degree):
        raise NotImplementedError(f"{self.name} has no series realization")

    # -- derived quantities -------------------------------------------
    def eval_f_lenient(self, z):
        """Values with NaN instead of exceptions at samples that cannot be evaluated."""
        with np.errstate(all="ignore"):
            return self.eval_f(z)

    def pre_schwarzian(self, z):
        """f''/f'."""
        with np.errstate(all="ignore"):
            return self.eval_ddf(z) / self.eval_df(z)

    def log_df(self, z):
        """log f' continued along [0, z] from its principal value at 0."""
        return continuous_log(self.eval_df, z)

    def f_over_z(self, z):
        zz = as_complex_array(z)
        self._require_normalized("f(z)/z")
        with np.errstate(all="ignore"):
            out = np.where(zz == 0, 1.0 + 0j, self.eval_f(zz) / np.where(zz == 0, 1.0, zz))
        return like_input(z, out)

    def log_f_over_z(self, z):
        self._require_normalized("log f(z)/z")
        return continuous_log(self.f_over_z, z)

    def dlog_f_over_z(self, z):
        """(log f(z)/z)' = f'/f - 1/z, with the limit f''(0)/2 at the origin.

        The difference cancels badly for small |z|, where a short series is used instead.
        """
        self._require_normalized("(log f/z)'")
        zz = as_complex_array(z)
        with np.errstate(all="ignore"):
            safe = np.where(zz == 0, 0.5, zz)
            fz = self.eval_f(safe)
            out = (safe * self.eval_df(safe) - fz) / (safe * fz)
            near = np.abs(zz) < SMALL_Z
            if np.any(near):
                out = np.where(near, self._dlog_f_over_z_series(zz), out)
        return like_input(z, out)

    def _dlog_f_over_z_series(self, z):
        try:
            s = self.series(SMALL_Z_DEGREE)
        except NotImplementedError:
            return np.where(z == 0, 0.5 * self.eval_ddf(np.zeros_like(z)), np.nan)
        return evaluate(differentiate(log_series(shift_down(s))), z)

    def z_dlog_f(self, z):
        """z f'/f, the starlikeness quantity; equals 1 at the origin."""
        zz = as_complex_array(z)
        return like_input(z, 1.0 + zz * self.dlog_f_over_z(zz))

    def _require_normalized(self, what):
        if not self.normalized:
            raise DomainError(f"{what} needs a normalized function; {self.name} is not")

    def describe(self):
        return {"name": self.name, "params": _jsonable(self.params)}


def _jsonable(params):
    out = {}
    for k, v in params.items():
        if isinstance(v, complex):
            out[k] = [v.real, v.imag]
        elif isinstance(v, Holomorphic):
            out[k] = v.describe()
        else:
            out[k] = v
    return out


def log_derivative_pair(f: Holomorphic, z):
    """Return ``(z f'(z)/f(z), 1 + z f''(z)/f'(z))`` at a single point ``0 < |z| < 1``."""
    z = complex(z)
    if z == 0 or abs(z) >= 1:
        raise SingularSampleError(f"log_derivative_pair needs 0 < |z| < 1, got {z}", z=z)
    with np.errstate(all="ignore"):
        fz = complex(f.eval_f(z))
        dfz = complex(f.eval_df(z))
        ddfz = complex(f.eval_ddf(z))
    if fz == 0 or dfz == 0 or not all(np.isfinite(v) for v in (fz, dfz, ddfz)):
        raise SingularSampleError(f"f or f' vanishes or is not finite at z={z}", z=z)
    return z * dfz / fz, 1.0 + z * ddfz / dfz
