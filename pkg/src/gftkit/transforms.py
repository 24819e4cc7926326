"""The integral operators, each realized twice.

Evaluator level: the derivative of every transform is known in closed form
from the source's evaluators, and so is its pre-Schwarzian ``F''/F'``;
values ``F(z)`` come from adaptive quadrature along [0, z].

Coefficient level: :meth:`TransformedFn.series` builds the truncated Taylor
expansion from the source's series with the :mod:`gftkit.series` primitives.

====================  ==============================  ===========================
operator              F'(z)                           F''/F'
====================  ==============================  ===========================
alexander             f(z)/z                          f'/f - 1/z
hornich_scale(g)      exp(g log f'(z))                g f''/f'
hornich_add           f'(z) g'(z)                     f''/f' + g''/g'
j_gamma(g)            (f(z)/z)**g                     g (f'/f - 1/z)
cesaro_beta(b)        f(z) / (z (1-z)**b)             f'/f - 1/z + b/(1-z)
====================  ==============================  ===========================

Powers are anchored at 1 at the origin and continued along rays.
"""

from __future__ import annotations

import numpy as np

from .catalog import AnalyticFn, catalog_build
from .errors import BranchTrackingError, DomainError
from .holomorphic import Holomorphic, as_complex_array, like_input, log1m
from .quadrature import segment_integral
from .series import (
    TaylorPoly,
    cpow,
    differentiate,
    integrate,
    mul,
    shift_down,
)


class TransformedFn(Holomorphic):
    """Result of applying one operator to one or two sources."""

    normalized = True

    def __init__(self, operator, params, sources, df, pre, log_df, series_builder):
        self.operator = operator
        self.params = dict(params)
        self.sources = tuple(sources)
        self._df = df
        self._pre = pre
        self._log_df = log_df
        self._series_builder = series_builder
        self.name = _render_name(operator, self.params, self.sources)

    @property
    def source(self):
        return self.sources[0]

    def eval_df(self, z):
        zz = as_complex_array(z)
        with np.errstate(all="ignore"):
            out = self._df(zz)
        return like_input(z, out)

    def pre_schwarzian(self, z):
        zz = as_complex_array(z)
        with np.errstate(all="ignore"):
            out = self._pre(zz)
        return like_input(z, out)

    def eval_ddf(self, z):
        zz = as_complex_array(z)
        with np.errstate(all="ignore"):
            out = self._pre(zz) * self._df(zz)
        return like_input(z, out)

    def log_df(self, z):
        zz = as_complex_array(z)
        return like_input(z, self._log_df(zz))

    def eval_f(self, z):
        return segment_integral(self._df, z)

    def eval_f_lenient(self, z):
        return segment_integral(self._df, z, strict=False)

    def series(self, degree):
        return self._series_builder(degree)

    def describe(self):
        return {
            "operator": self.operator,
            "params": {k: ([v.real, v.imag] if isinstance(v, complex) else v) for k, v in self.params.items()},
            "sources": [s.describe() for s in self.sources],
        }


def _render_name(operator, params, sources):
    args = ", ".join(f"{k}={v}" for k, v in params.items())
    inner = ", ".join(s.name for s in sources)
    return f"{operator}[{args}]({inner})" if args else f"{operator}({inner})"


def _prepare(f) -> Holomorphic:
    if isinstance(f, TaylorPoly):
        f = AnalyticFn.from_series(f)
    elif isinstance(f, str):
        f = catalog_build(f)
    if not isinstance(f, Holomorphic):
        raise DomainError(f"cannot transform object of type {type(f).__name__}")
    if not f.normalized:
        raise DomainError(f"transforms need a normalized source (f(0)=0, f'(0)=1); {f.name} is not")
    return f


def _checked_exp(log_vals, z):
    """exp of a branch-tracked logarithm; a non-finite log means f' or f/z hit zero."""
    if not np.all(np.isfinite(log_vals)):
        bad = np.atleast_1d(z)[~np.isfinite(np.atleast_1d(log_vals))]
        raise BranchTrackingError(f"branch cannot be continued: zero on the path to {bad[0]:.6g}", z=bad[0])
    return np.exp(log_vals)


def _log1mz(z):
    return log1m(z)


def path_integral_value(t: Holomorphic, z):
    """F(z) = int_0^z F'(w) dw by adaptive Gauss-Legendre along the segment."""
    return segment_integral(t.eval_df, z)


def alexander(f) -> TransformedFn:
    """J[f](z) = int_0^z f(w)/w dw."""
    f = _prepare(f)

    def series(n):
        return integrate(shift_down(f.series(n)))

    return TransformedFn("alexander", {}, [f], f.f_over_z, f.dlog_f_over_z, f.log_f_over_z, series)


def hornich_scale(gamma, f) -> TransformedFn:
    """gamma * f: int_0^z f'(w)**gamma dw with f'(0)**gamma = 1."""
    f = _prepare(f)
    gamma = complex(gamma)

    def log_df(z):
        return gamma * f.log_df(z) if gamma != 0 else np.zeros_like(z)

    def df(z):
        if gamma == 0:
            return np.ones_like(z)
        return _checked_exp(log_df(z), z)

    def pre(z):
        return gamma * f.pre_schwarzian(z)

    def series(n):
        return integrate(cpow(differentiate(f.series(n)), gamma))

    return TransformedFn("hornich_scale", {"gamma": gamma}, [f], df, pre, log_df, series)


def hornich_add(f, g) -> TransformedFn:
    """f (+) g: int_0^z f'(w) g'(w) dw."""
    f, g = _prepare(f), _prepare(g)

    def series(n):
        return integrate(mul(differentiate(f.series(n)), differentiate(g.series(n))))

    return TransformedFn(
        "hornich_add",
        {},
        [f, g],
        lambda z: f.eval_df(z) * g.eval_df(z),
        lambda z: f.pre_schwarzian(z) + g.pre_schwarzian(z),
        lambda z: f.log_df(z) + g.log_df(z),
        series,
    )


def j_gamma(gamma, f) -> TransformedFn:
    """J_gamma[f](z) = int_0^z (f(w)/w)**gamma dw, the composite I_gamma after J."""
    f = _prepare(f)
    gamma = complex(gamma)

    def log_df(z):
        return gamma * f.log_f_over_z(z) if gamma != 0 else np.zeros_like(z)

    def df(z):
        if gamma == 0:
            return np.ones_like(z)
        if gamma == 1:
            return f.f_over_z(z)
        return _checked_exp(log_df(z), z)

    def series(n):
        return integrate(cpow(shift_down(f.series(n)), gamma))

    return TransformedFn("j_gamma", {"gamma": gamma}, [f], df, lambda z: gamma * f.dlog_f_over_z(z), log_df, series)


def cesaro_beta(beta, f, allow_negative=False) -> TransformedFn:
    """C_beta[f](z) = int_0^z f(w) / (w (1-w)**beta) dw."""
    f = _prepare(f)
    beta = float(beta)
    if beta < 0 and not allow_negative:
        raise DomainError(f"beta must be >= 0 (pass allow_negative=True to explore), got {beta}")

    def df(z):
        return f.f_over_z(z) * np.exp(-beta * _log1mz(z))

    def pre(z):
        return f.dlog_f_over_z(z) + beta / (1.0 - z)

    def log_df(z):
        return f.log_f_over_z(z) - beta * _log1mz(z)

    def series(n):
        return integrate(mul(shift_down(f.series(n)), TaylorPoly.binomial(-beta, n)))

    return TransformedFn("cesaro_beta", {"beta": beta}, [f], df, pre, log_df, series)


OPERATORS = {
    "alexander": alexander,
    "hornich-scale": hornich_scale,
    "hornich-add": hornich_add,
    "j-gamma": j_gamma,
    "cesaro": cesaro_beta,
}


def apply_operator(op, f, gamma=None, beta=None, other=None) -> TransformedFn:
    """Dispatch by CLI operator identifier."""
    if op == "alexander":
        return alexander(f)
    if op == "hornich-scale":
        return hornich_scale(1.0 if gamma is None else gamma, f)
    if op == "hornich-add":
        if other is None:
            raise DomainError("hornich-add needs a second function")
        return hornich_add(f, other)
    if op == "j-gamma":
        return j_gamma(1.0 if gamma is None else gamma, f)
    if op == "cesaro":
        return cesaro_beta(0.0 if beta is None else beta, f)
    raise DomainError(f"unknown operator {op!r}; known: {', '.join(OPERATORS)}")
