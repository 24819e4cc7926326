"""Closed-form evaluators for the named functions used as examples,
extremal cases and counterexamples.

Every power is taken on the principal branch of ``log(1 - z)``, which is
analytic in the disk because ``1 - z`` stays in the right half plane; it is
the unique analytic branch equal to 1 at the origin.

Catalog names and parameters (``lam`` is the order, ``alpha`` the spiral
angle, ``mu`` an exponent)::

    koebe_order(lam)             z / (1-z)**(2-2 lam)
    half_plane                   z / (1-z)
    neg_log                      -log(1-z)
    convex_extremal(lam)         ((1-z)**(-(1-2 lam)) - 1) / (1-2 lam)
    spiral_extremal(alpha, lam)  z (1-z)**(2 (lam-1) exp(-i alpha) cos alpha)
    royster_example              z (1-z)**(i-1)
    power_map(mu)                (1-z)**mu          (not normalized)
    identity                     z
"""

from __future__ import annotations

import cmath
import math
import numpy as np

from .errors import CatalogError, DomainError
from .holomorphic import Holomorphic, as_complex_array, like_input, log1m
from .series import TaylorPoly, differentiate, evaluate, integrate, shift_down

LOG_LIMIT_EPS = 1e-12


def _log1mz(z):
    return log1m(z)


class AnalyticFn(Holomorphic):
    """A bundle of vectorized evaluators with parameter metadata.

    The ``exact_*`` hooks, when set, replace the generic derived quantities of
    :class:`Holomorphic` with closed forms.
    """

    def __init__(self, name, params, eval_f, eval_df, eval_ddf, series_of=None, normalized=True,
                 exact_pre_schwarzian=None, exact_log_df=None, exact_f_over_z=None,
                 exact_log_f_over_z=None, exact_dlog_f_over_z=None):
        self.name = name
        self.params = dict(params)
        # wrapped so scalars come back as Python complex
        self.eval_f = _scalar_friendly(eval_f)
        self.eval_df = _scalar_friendly(eval_df)
        self.eval_ddf = _scalar_friendly(eval_ddf)
        self.series_of = series_of
        self.normalized = normalized
        self.exact_pre_schwarzian = exact_pre_schwarzian
        self.exact_log_df = exact_log_df
        self.exact_f_over_z = exact_f_over_z
        self.exact_log_f_over_z = exact_log_f_over_z
        self.exact_dlog_f_over_z = exact_dlog_f_over_z

    def __repr__(self):
        return f"AnalyticFn({self.name!r}, {self.params!r})"

    def series(self, degree):
        if self.series_of is None:
            return super().series(degree)
        return self.series_of(degree)

    def pre_schwarzian(self, z):
        if self.exact_pre_schwarzian is None:
            return super().pre_schwarzian(z)
        return _apply(self.exact_pre_schwarzian, z)

    def log_df(self, z):
        if self.exact_log_df is None:
            return super().log_df(z)
        return _apply(self.exact_log_df, z)

    def f_over_z(self, z):
        if self.exact_f_over_z is None:
            return super().f_over_z(z)
        return _apply(self.exact_f_over_z, z)

    def log_f_over_z(self, z):
        if self.exact_log_f_over_z is None:
            return super().log_f_over_z(z)
        return _apply(self.exact_log_f_over_z, z)

    def dlog_f_over_z(self, z):
        if self.exact_dlog_f_over_z is None:
            return super().dlog_f_over_z(z)
        return _apply(self.exact_dlog_f_over_z, z)

    @classmethod
    def from_series(cls, poly: TaylorPoly, name="series"):
        """Wrap a truncated series as an evaluator (Horner for f, f', f'')."""
        d1 = differentiate(poly)
        d2 = differentiate(d1)
        normalized = poly.coeffs[0] == 0 and poly.coeffs[1] == 1
        return cls(
            name=name,
            params={"degree": poly.degree},
            eval_f=lambda z: evaluate(poly, z),
            eval_df=lambda z: evaluate(d1, z),
            eval_ddf=lambda z: evaluate(d2, z),
            series_of=lambda n: _reseat(poly, n),
            normalized=bool(normalized),
        )


def _scalar_friendly(fn):
    if getattr(fn, "_scalar_friendly", False):
        return fn

    def wrapped(z):
        return _apply(fn, z)

    wrapped._scalar_friendly = True
    return wrapped


def _apply(fn, z):
    zz = as_complex_array(z)
    with np.errstate(all="ignore"):
        out = fn(zz)
    out = np.broadcast_to(np.asarray(out, dtype=complex), zz.shape)
    return like_input(z, out)


def _reseat(poly, degree):
    if degree == poly.degree:
        return poly
    if degree < poly.degree:
        return TaylorPoly.from_coeffs(poly.coeffs, degree=degree)
    raise DomainError(f"series known only to degree {poly.degree}, asked for {degree}")


# -- building blocks ------------------------------------------------------

def _z_times_power(name, params, mu):
    """z (1-z)**mu with every derived quantity in closed form."""
    mu = complex(mu)

    def f(z):
        return z * np.exp(mu * _log1mz(z))

    def df(z):
        return np.exp((mu - 1) * _log1mz(z)) * (1.0 - (1.0 + mu) * z)

    def ddf(z):
        return mu * np.exp((mu - 2) * _log1mz(z)) * ((mu + 1.0) * z - 2.0)

    def pre(z):
        return mu * ((mu + 1.0) * z - 2.0) / ((1.0 - z) * (1.0 - (1.0 + mu) * z))

    def log_df(z):
        # principal Log(1 - c z) is the continuation along [0, z]: the image
        # of the segment is the straight segment from 1 to 1 - c z
        return (mu - 1) * _log1mz(z) + np.log(1.0 - (1.0 + mu) * z)

    def series_of(n):
        c = np.zeros(n + 1, dtype=complex)
        c[1:] = TaylorPoly.binomial(mu, n).coeffs[:-1]
        c[1] = 1.0
        return TaylorPoly(c, normalized=True)

    return AnalyticFn(
        name=name,
        params=params,
        eval_f=f,
        eval_df=df,
        eval_ddf=ddf,
        series_of=series_of,
        exact_pre_schwarzian=pre,
        exact_log_df=log_df,
        exact_f_over_z=lambda z: np.exp(mu * _log1mz(z)),
        exact_log_f_over_z=lambda z: mu * _log1mz(z),
        exact_dlog_f_over_z=lambda z: -mu / (1.0 - z),
    )


def _neg_log(name, params):
    def f_over_z(z):
        safe = np.where(z == 0, 1.0, z)
        return np.where(z == 0, 1.0 + 0j, -log1m(safe) / safe)

    def series_of(n):
        c = np.zeros(n + 1, dtype=complex)
        c[1:] = 1.0 / np.arange(1, n + 1)
        return TaylorPoly(c, normalized=True)

    return AnalyticFn(
        name=name,
        params=params,
        eval_f=lambda z: -_log1mz(z),
        eval_df=lambda z: 1.0 / (1.0 - z),
        eval_ddf=lambda z: 1.0 / (1.0 - z) ** 2,
        series_of=series_of,
        exact_pre_schwarzian=lambda z: 1.0 / (1.0 - z),
        exact_log_df=lambda z: -_log1mz(z),
        exact_f_over_z=f_over_z,
        # -log(1-z) is convex, so Re f(z)/z > 1/2 and the principal log is continuous
        exact_log_f_over_z=lambda z: np.log(f_over_z(z)),
    )


def _convex_extremal(name, params, lam):
    q = 1.0 - 2.0 * lam
    if abs(q) < LOG_LIMIT_EPS:
        return _neg_log(name, params)

    def f(z):
        return np.expm1(-q * _log1mz(z)) / q

    def f_over_z(z):
        safe = np.where(z == 0, 0.5, z)
        return np.where(z == 0, 1.0 + 0j, f(safe) / safe)

    def series_of(n):
        return integrate(TaylorPoly.binomial(-(q + 1.0), n)).as_normalized()

    return AnalyticFn(
        name=name,
        params=params,
        eval_f=f,
        eval_df=lambda z: np.exp(-(q + 1.0) * _log1mz(z)),
        eval_ddf=lambda z: (q + 1.0) * np.exp(-(q + 2.0) * _log1mz(z)),
        series_of=series_of,
        exact_pre_schwarzian=lambda z: (q + 1.0) / (1.0 - z),
        exact_log_df=lambda z: -(q + 1.0) * _log1mz(z),
        exact_f_over_z=f_over_z,
    )


def _power_map(name, params, mu):
    mu = complex(mu)
    return AnalyticFn(
        name=name,
        params=params,
        eval_f=lambda z: np.exp(mu * _log1mz(z)),
        eval_df=lambda z: -mu * np.exp((mu - 1) * _log1mz(z)),
        eval_ddf=lambda z: mu * (mu - 1) * np.exp((mu - 2) * _log1mz(z)),
        series_of=lambda n: TaylorPoly.binomial(mu, n),
        normalized=False,
        exact_pre_schwarzian=lambda z: (1.0 - mu) / (1.0 - z),
    )


def _identity(name, params):
    return AnalyticFn(
        name=name,
        params=params,
        eval_f=lambda z: z,
        eval_df=lambda z: np.ones_like(z),
        eval_ddf=lambda z: np.zeros_like(z),
        series_of=TaylorPoly.identity,
        exact_pre_schwarzian=lambda z: np.zeros_like(z),
        exact_log_df=lambda z: np.zeros_like(z),
        exact_f_over_z=lambda z: np.ones_like(z),
        exact_log_f_over_z=lambda z: np.zeros_like(z),
        exact_dlog_f_over_z=lambda z: np.zeros_like(z),
    )


# -- parameter validation ---------------------------------------------------

def _lam(params):
    lam = float(params.get("lam", 0.0))
    if not lam < 1:
        raise DomainError(f"order lam must be < 1, got {lam}")
    return lam


def _alpha(params):
    alpha = float(params.get("alpha", 0.0))
    if not -math.pi / 2 < alpha < math.pi / 2:
        raise DomainError(f"alpha must lie in (-pi/2, pi/2), got {alpha}")
    return alpha


def _mu(params):
    if "mu" not in params:
        raise DomainError("power_map needs mu")
    mu = complex(params["mu"])
    if mu == 0:
        raise DomainError("power_map exponent mu must be nonzero")
    return mu


def spiral_exponent(alpha, lam):
    """Exponent 2 (lam-1) exp(-i alpha) cos alpha of the extremal spirallike function."""
    return 2.0 * (lam - 1.0) * cmath.exp(-1j * alpha) * math.cos(alpha)


_BUILDERS = {
    "koebe_order": (("lam",), lambda p: _z_times_power("koebe_order", p, 2.0 * _lam(p) - 2.0)),
    "half_plane": ((), lambda p: _z_times_power("half_plane", p, -1.0)),
    "neg_log": ((), lambda p: _neg_log("neg_log", p)),
    "convex_extremal": (("lam",), lambda p: _convex_extremal("convex_extremal", p, _lam(p))),
    "spiral_extremal": (
        ("alpha", "lam"),
        lambda p: _z_times_power("spiral_extremal", p, spiral_exponent(_alpha(p), _lam(p))),
    ),
    "royster_example": ((), lambda p: _z_times_power("royster_example", p, 1j - 1.0)),
    "power_map": (("mu",), lambda p: _power_map("power_map", p, _mu(p))),
    "identity": ((), lambda p: _identity("identity", p)),
}

CATALOG_NAMES = tuple(_BUILDERS)


def catalog_schema():
    """Name -> accepted parameter names, for CLI listings."""
    return {name: list(keys) for name, (keys, _) in _BUILDERS.items()}


def catalog_build(name, **params) -> AnalyticFn:
    """Build a catalog entry, e.g. ``catalog_build("koebe_order", lam=0.25)``."""
    if isinstance(name, dict):
        spec = dict(name)
        name = spec.pop("name")
        params = {**spec, **params}
    try:
        keys, builder = _BUILDERS[name]
    except KeyError:
        raise CatalogError(f"unknown catalog function {name!r}; known: {', '.join(CATALOG_NAMES)}") from None
    unknown = set(params) - set(keys)
    if unknown:
        raise DomainError(f"{name} does not take parameter(s) {sorted(unknown)}")
    return builder(dict(params))
