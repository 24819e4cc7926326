"""Compiled-in registry of verification scenarios.

Each scenario turns one mathematical claim, or one engine oracle, into a
list of machine-checkable comparisons.  Scenarios are
deterministic for a fixed :class:`Config`; random probes draw from
``numpy.random.default_rng(config.seed)``.
"""

from __future__ import annotations

import cmath
import math
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..analysis import (
    ClassSpec,
    alexander_spiral_readings,
    alexander_spiral_univalent,
    membership_margin,
    membership_value,
    norm_estimate,
    radial_norm_limit,
    royster_segment_univalent,
    royster_univalent,
    set_membership,
    univalence_falsify,
)
from ..analysis.membership import kaplan_profile
from ..catalog import AnalyticFn, catalog_build, spiral_exponent
from ..errors import CatalogError, GFTError
from ..transforms import alexander, cesaro_beta, hornich_add, hornich_scale, j_gamma
from .config import Config
from .report import CheckResult, VerificationReport

DEFAULT_LAMBDAS = (-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75)
DEFAULT_ALPHAS = (0.0, 0.5, -0.5, 1.2, -1.2)
DEFAULT_BETAS = (0.0, 0.5, 1.0, 1.5, 2.0, 3.0)


@dataclass
class Scenario:
    id: str
    description: str
    provenance: str
    inputs: dict
    runner: Callable = field(repr=False)

    def resolved_inputs(self, config: Config):
        out = dict(self.inputs)
        for key in ("lambdas", "alphas", "betas"):
            if key in out:
                out[key] = config.sweep(key, out[key])
        return out


REGISTRY: dict = {}


def scenario(id, description, provenance, **inputs):
    def deco(fn):
        if id in REGISTRY:
            raise ValueError(f"duplicate scenario id {id}")
        REGISTRY[id] = Scenario(id, description, provenance, inputs, fn)
        return fn
    return deco


class Checker:
    """Collects :class:`CheckResult` objects for one scenario run."""

    def __init__(self, scenario_id, config: Config):
        self.scenario_id = scenario_id
        self.config = config
        self.checks = []

    def _full(self, case):
        return f"{self.scenario_id}/{case}"

    def _tol(self, case, default):
        return self.config.tol(self._full(case), default)

    def _add(self, case, claim, passed, measured, expected, tol, comparator, witness):
        self.checks.append(CheckResult(self._full(case), claim, bool(passed), measured, expected, tol,
                                       comparator, dict(witness or {})))

    def le(self, case, claim, measured, bound, tol, witness=None):
        tol = self._tol(case, tol)
        self._add(case, claim, measured <= bound + tol, measured, bound, tol, "<=", witness)

    def ge(self, case, claim, measured, bound, tol, witness=None):
        tol = self._tol(case, tol)
        self._add(case, claim, measured >= bound - tol, measured, bound, tol, ">=", witness)

    def gt(self, case, claim, measured, bound, witness=None):
        self._add(case, claim, measured > bound, measured, bound, None, ">", witness)

    def lt(self, case, claim, measured, bound, witness=None):
        self._add(case, claim, measured < bound, measured, bound, None, "<", witness)

    def close(self, case, claim, measured, expected, tol, witness=None):
        tol = self._tol(case, tol)
        err = abs(measured - expected)
        self._add(case, claim, err <= tol, measured, expected, tol, "~=", {**(witness or {}), "abs_error": err})

    def equal(self, case, claim, measured, expected, witness=None):
        self._add(case, claim, measured == expected, measured, expected, None, "==", witness)

    @contextmanager
    def guard(self, case, claim, witness=None):
        try:
            yield
        except GFTError as exc:
            self.checks.append(CheckResult(self._full(case), claim, False, None, None, None, "",
                                           dict(witness or {}), f"{type(exc).__name__}: {exc}"))


def _z(z):
    return [float(z.real), float(z.imag)]


def _disk_samples(rng, n, rmax):
    r = rmax * np.sqrt(rng.uniform(0.0, 1.0, n))
    return r * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, n))


# -- pre-Schwarzian norms ----------------------------------------------------

@scenario("norm-convex-order", "norm of the extremal convex function of order lam equals 4(1-lam)",
          "||f|| <= 4(1-lam) on K(lam), sharp for the extremal convex function", lambdas=(-1.0, -0.5, 0.0, 0.5))
def _norm_convex_order(ck, inputs, cfg):
    for lam in inputs["lambdas"]:
        case = f"lam={lam:g}"
        with ck.guard(case, "norm estimate", {"lam": lam}):
            est = norm_estimate(catalog_build("convex_extremal", lam=lam), cfg.grid, cfg.workers)
            bound = 4.0 * (1.0 - lam)
            w = {"lam": lam, "argmax_z": _z(est.argmax_z)}
            ck.le(f"{case}/upper", "||h|| <= 4(1-lam)", est.value, bound, 1e-6, w)
            ck.ge(f"{case}/sharp", "||h|| >= 4(1-lam) - 0.02", est.value, bound, 0.02, w)


@scenario("norm-alexander-spiral", "norm of J[g_alpha] equals 4(1-lam) cos alpha",
          "||f|| <= 4(1-lam) cos(alpha) on J(S*_alpha(lam)), sharp for g_alpha",
          alphas=DEFAULT_ALPHAS, lambdas=(-0.5, 0.0, 0.5))
def _norm_alexander_spiral(ck, inputs, cfg):
    for alpha in inputs["alphas"]:
        for lam in inputs["lambdas"]:
            case = f"alpha={alpha:g},lam={lam:g}"
            with ck.guard(case, "norm estimate", {"alpha": alpha, "lam": lam}):
                f = alexander(catalog_build("spiral_extremal", alpha=alpha, lam=lam))
                est = norm_estimate(f, cfg.grid, cfg.workers)
                bound = 4.0 * (1.0 - lam) * math.cos(alpha)
                w = {"alpha": alpha, "lam": lam, "argmax_z": _z(est.argmax_z)}
                ck.le(f"{case}/upper", "||J[g_alpha]|| <= 4(1-lam)cos(alpha)", est.value, bound, 1e-6, w)
                ck.ge(f"{case}/sharp", "||J[g_alpha]|| >= 4(1-lam)cos(alpha) - 0.02", est.value, bound, 0.02, w)


@scenario("norm-cesaro-sharp", "radial limit of C_beta[g_alpha] at +1 equals 4(1-lam)cos(alpha) + 2 beta",
          "sharpness of ||C_beta[f]|| via the radial limit along t -> 1-",
          alphas=DEFAULT_ALPHAS, lambdas=(-0.5, 0.0, 0.5), betas=(0.0, 1.0, 2.0))
def _norm_cesaro_sharp(ck, inputs, cfg):
    for alpha in inputs["alphas"]:
        for lam in inputs["lambdas"]:
            for beta in inputs["betas"]:
                case = f"alpha={alpha:g},lam={lam:g},beta={beta:g}"
                with ck.guard(case, "radial limit", {"alpha": alpha, "lam": lam, "beta": beta}):
                    f = cesaro_beta(beta, catalog_build("spiral_extremal", alpha=alpha, lam=lam))
                    lim = radial_norm_limit(f, 1.0)
                    claimed = 4.0 * (1.0 - lam) * math.cos(alpha) + 2.0 * beta
                    # the derivative is (1-z)**(mu-beta), so the profile is (1+t)|beta-mu|
                    direct = 2.0 * abs(beta - spiral_exponent(alpha, lam))
                    ck.close(case, "radial limit = 4(1-lam)cos(alpha) + 2 beta", lim.value, claimed, 1e-2,
                             {"alpha": alpha, "lam": lam, "beta": beta, "direction": 1.0,
                              "two_abs_beta_minus_exponent": direct})


def _random_pick(rng):
    kind = rng.choice(["koebe_order", "convex_extremal", "spiral_extremal", "half_plane", "neg_log",
                       "royster_example"])
    if kind in ("koebe_order", "convex_extremal"):
        params = {"lam": float(np.round(rng.uniform(-1.0, 0.9), 3))}
    elif kind == "spiral_extremal":
        params = {"alpha": float(np.round(rng.uniform(-1.4, 1.4), 3)),
                  "lam": float(np.round(rng.uniform(-1.0, 0.9), 3))}
    else:
        params = {}
    return str(kind), params


def _in_S(kind, params):
    lam = params.get("lam", 0.0)
    if kind in ("koebe_order", "spiral_extremal"):
        return lam >= 0
    if kind == "convex_extremal":
        return lam >= -0.5
    return True


@scenario("norm-cesaro-subordinate", "||C_beta[f]|| <= ||J[f]|| + 2 beta, and <= 4 + 2 beta on S",
          "||C_beta[f]|| <= ||J[f]|| + 2 beta; ||f|| <= 4 + 2 beta on C_beta(S)", picks=20)
def _norm_cesaro_subordinate(ck, inputs, cfg):
    rng = np.random.default_rng(cfg.seed)
    for n in range(inputs["picks"]):
        kind, params = _random_pick(rng)
        beta = float(np.round(rng.uniform(0.0, 3.0), 3))
        case = f"pick{n}"
        w = {"fn": kind, "params": params, "beta": beta}
        with ck.guard(case, "norm estimates", w):
            f = catalog_build(kind, **params)
            nc = norm_estimate(cesaro_beta(beta, f), cfg.grid, cfg.workers)
            nj = norm_estimate(alexander(f), cfg.grid, cfg.workers)
            w = {**w, "argmax_C": _z(nc.argmax_z), "norm_J": nj.value}
            ck.le(f"{case}/subordinate", "||C_beta f|| <= ||J f|| + 2 beta", nc.value, nj.value + 2 * beta, 1e-6, w)
            if _in_S(kind, params):
                ck.le(f"{case}/class-S", "||C_beta f|| <= 4 + 2 beta for f in S", nc.value, 4 + 2 * beta, 0.02, w)


# -- preservation theorems ---------------------------------------------------

@scenario("cesaro-kaplan-positive", "C_beta of the order-lam Koebe function passes Kaplan for beta <= 2 lam + 1",
          "C_beta(S*(lam)) subset C for beta <= 2 lam + 1 (Kaplan criterion)",
          lambdas=DEFAULT_LAMBDAS, betas=DEFAULT_BETAS)
def _cesaro_kaplan_positive(ck, inputs, cfg):
    for lam in inputs["lambdas"]:
        for beta in inputs["betas"]:
            if beta > 2 * lam + 1:
                continue
            case = f"lam={lam:g},beta={beta:g}"
            with ck.guard(case, "kaplan margin", {"lam": lam, "beta": beta}):
                rep = membership_margin(cesaro_beta(beta, catalog_build("koebe_order", lam=lam)),
                                        ClassSpec.kaplan(), cfg.grid)
                ck.gt(case, "Kaplan margin > -1e-9", rep.margin, -ck._tol(case, 1e-9),
                      {"lam": lam, "beta": beta, **rep.detail})


@scenario("cesaro-starlike-order", "C_beta(S*(lam)) lies in K(lam - beta/2) and in S* for beta <= 2 lam",
          "C_beta(S*(lam)) subset K(lam - beta/2) and subset S* for beta <= 2 lam",
          lambdas=DEFAULT_LAMBDAS, betas=DEFAULT_BETAS)
def _cesaro_starlike_order(ck, inputs, cfg):
    for lam in inputs["lambdas"]:
        for beta in inputs["betas"]:
            if beta > 2 * lam:
                continue
            case = f"lam={lam:g},beta={beta:g}"
            w = {"lam": lam, "beta": beta}
            with ck.guard(case, "margins", w):
                c = cesaro_beta(beta, catalog_build("koebe_order", lam=lam))
                conv = membership_margin(c, ClassSpec.convex(lam - beta / 2), cfg.grid)
                ck.gt(f"{case}/convex", "convex(lam - beta/2) margin > -1e-9", conv.margin,
                      -ck._tol(f"{case}/convex", 1e-9), {**w, "witness_z": _z(conv.witness_z)})
                star = membership_margin(c, ClassSpec.starlike(0.0), cfg.grid)
                ck.gt(f"{case}/starlike", "Re(zC'/C) margin > -1e-9", star.margin,
                      -ck._tol(f"{case}/starlike", 1e-9), {**w, "witness_z": _z(star.witness_z)})


@scenario("cesaro-convex-preservation", "C_beta(z/(1-z)) lies in K((1-beta)/2) for 0 <= beta <= 1",
          "C_beta(K) subset K((1-beta)/2) for 0 <= beta <= 1", betas=(0.0, 0.5, 1.0))
def _cesaro_convex_preservation(ck, inputs, cfg):
    for beta in inputs["betas"]:
        case = f"beta={beta:g}"
        with ck.guard(case, "convex margin", {"beta": beta}):
            rep = membership_margin(cesaro_beta(beta, catalog_build("half_plane")),
                                    ClassSpec.convex((1 - beta) / 2), cfg.grid)
            ck.gt(case, "convex((1-beta)/2) margin > -1e-9", rep.margin, -ck._tol(case, 1e-9),
                  {"beta": beta, "witness_z": _z(rep.witness_z)})


@scenario("alexander-convex-order", "J maps the order-lam Koebe function into K(lam)",
          "J(S*(lam)) = K(lam)", lambdas=(0.0, 0.25, 0.5))
def _alexander_convex_order(ck, inputs, cfg):
    for lam in inputs["lambdas"]:
        case = f"lam={lam:g}"
        with ck.guard(case, "convex margin", {"lam": lam}):
            rep = membership_margin(alexander(catalog_build("koebe_order", lam=lam)), ClassSpec.convex(lam), cfg.grid)
            ck.gt(case, "convex(lam) margin > -1e-9", rep.margin, -ck._tol(case, 1e-9),
                  {"lam": lam, "witness_z": _z(rep.witness_z)})


# -- counterexamples -----------------------------------------------------------

@scenario("cesaro-nonunivalent-koebe", "C_2 of the Koebe function has a polished collision",
          "beta > 2 lam + 1 gives C_beta[koebe_lam] outside S", lam=0.0, beta=2.0)
def _cesaro_nonunivalent(ck, inputs, cfg):
    lam, beta = inputs["lam"], inputs["beta"]
    w = {"lam": lam, "beta": beta}
    with ck.guard("collision", "univalence_falsify", w):
        hit = univalence_falsify(cesaro_beta(beta, catalog_build("koebe_order", lam=lam)), cfg.grid)
        ck.equal("collision/found", "a polished collision exists", bool(hit and hit.polished), True, w)
        if hit is not None:
            w = {**w, "z1": _z(hit.z1), "z2": _z(hit.z2)}
            ck.lt("collision/residual", "residual < 1e-12", hit.residual, ck._tol("collision/residual", 1e-12), w)
            ck.gt("collision/separation", "|z1 - z2| > 0.05", hit.separation, 0.05, w)
    ck.equal("royster", "Royster predicate agrees: not univalent", royster_segment_univalent(lam, beta), False, w)
    with ck.guard("identity-control", "no collision for z"):
        ck.equal("identity-control", "identity yields no collision", univalence_falsify(catalog_build("identity"), cfg.grid),
                 None)


@scenario("cesaro-convexity-failure", "C_beta(z/(1-z)) is not convex for beta > 1",
          "Re(1 + zC''/C') = (n(1-beta)+beta)/(2n-1) < 0 at z_n = -1 + 1/n", beta=3.0, ns=(2, 3, 5, 10))
def _cesaro_convexity_failure(ck, inputs, cfg):
    beta = inputs["beta"]
    f = cesaro_beta(beta, catalog_build("half_plane"))
    for n in inputs["ns"]:
        z = -1.0 + 1.0 / n
        case = f"n={n}"
        with ck.guard(case, "convex value", {"beta": beta, "z": z}):
            val = membership_value(f, ClassSpec.convex(0.0), z)
            formula = (n * (1 - beta) + beta) / (2 * n - 1)
            ck.close(f"{case}/formula", "Re(1 + zC''/C') = (n(1-beta)+beta)/(2n-1)", val, formula, 1e-9,
                     {"beta": beta, "z": z})
            if n == 2 and beta == 3.0:
                ck.close(f"{case}/value", "margin at z = -1/2 is -1/3", val, -1.0 / 3.0, 1e-9, {"z": z})
            if n > beta / (beta - 1):
                ck.lt(f"{case}/negative", "convexity fails", val, 0.0, {"z": z})


@scenario("cesaro-starlike-failure", "C_beta of the order-lam Koebe function is not starlike for beta = 2 lam + 1/2",
          "Re(z0 C'(z0)/C(z0)) < 0 for some z0 when beta > 2 lam", lambdas=(0.0, 0.25, 0.5))
def _cesaro_starlike_failure(ck, inputs, cfg):
    for lam in inputs["lambdas"]:
        beta = 2 * lam + 0.5
        case = f"lam={lam:g},beta={beta:g}"
        with ck.guard(case, "starlike margin", {"lam": lam, "beta": beta}):
            rep = membership_margin(cesaro_beta(beta, catalog_build("koebe_order", lam=lam)),
                                    ClassSpec.starlike(0.0), cfg.grid)
            ck.lt(case, "sampled min Re(zC'/C) < 0", rep.margin, 0.0,
                  {"lam": lam, "beta": beta, "witness_z": _z(rep.witness_z)})


@scenario("royster-nonunivalent", "(1-z)^(i-beta) is univalent only for beta = 1",
          "f = z(1-z)^(i-1) in S with C_beta[f] not in S for beta != 1 (Royster)", betas=(0.0, 0.5, 2.0))
def _royster_nonunivalent(ck, inputs, cfg):
    for beta in inputs["betas"]:
        mu = 1j - beta
        ck.equal(f"beta={beta:g}", "royster_univalent(i - beta) is false", royster_univalent(mu), beta == 1.0,
                 {"mu": _z(mu)})
    ck.equal("beta=1", "royster_univalent(i - 1) is true", royster_univalent(1j - 1), True, {"mu": [-1.0, 1.0]})
    for lam, beta, expected in ((0.0, 1.0, True), (0.0, 1.5, False), (0.5, 2.0, True)):
        ck.equal(f"segment/lam={lam:g},beta={beta:g}", "2 lam - 3 <= beta <= 2 lam + 1",
                 royster_segment_univalent(lam, beta), expected, {"lam": lam, "beta": beta})


@scenario("negative-order-remark", "for lam < 0, ||J[g_0]|| > 4 and g_0 has a collision",
          "g_0 not in S for lam < 0", lam_norm=-0.25, lam_collision=-1.0)
def _negative_order_remark(ck, inputs, cfg):
    lam = inputs["lam_norm"]
    with ck.guard("norm", "norm estimate", {"lam": lam}):
        est = norm_estimate(alexander(catalog_build("spiral_extremal", alpha=0.0, lam=lam)), cfg.grid, cfg.workers)
        ck.gt("norm", "||J[g_0]|| > 4 + 0.5", est.value, 4.5, {"lam": lam, "argmax_z": _z(est.argmax_z)})
    lam = inputs["lam_collision"]
    with ck.guard("collision", "univalence_falsify", {"lam": lam}):
        hit = univalence_falsify(catalog_build("spiral_extremal", alpha=0.0, lam=lam), cfg.grid)
        w = {"lam": lam} if hit is None else {"lam": lam, "z1": _z(hit.z1), "z2": _z(hit.z2),
                                              "residual": hit.residual}
        ck.equal("collision", "polished collision for g_0", bool(hit and hit.polished), True, w)


# -- exact predicates -----------------------------------------------------------

@scenario("set-predicates", "exact A(K), A(K(lam)) membership and boundary probes",
          "A(K) = {|g| <= 1/2} U [1/2, 3/2]; A(K(-1/2)) = {|g| <= 1/3} U [1/3, 1]", samples=500)
def _set_predicates(ck, inputs, cfg):
    rng = np.random.default_rng(cfg.seed)
    n = inputs["samples"]
    gammas = np.concatenate([
        rng.uniform(-2, 2, n // 2) + 1j * rng.uniform(-2, 2, n // 2),
        rng.uniform(-0.5, 2.0, n - n // 2) + 0j,  # real axis, crossing the segment
    ])
    disagree = [complex(g) for g in gammas
                if set_membership("A_K_lambda", g, lam=0.0) != set_membership("A_K", g)]
    ck.equal("lam0-agreement", "A_K_lambda(lam=0) agrees with A(K)", len(disagree), 0,
             {"samples": int(gammas.size), "first_disagreement": _z(disagree[0]) if disagree else None})
    for g, exp in ((0.5, True), (1.5, True), (1.5 + 1e-9, False), (1.4, True)):
        ck.equal(f"A_K/gamma={g!r}", "A(K) boundary probe", set_membership("A_K", g), exp, {"gamma": g})
    for g, exp in ((1 / 3, True), (1.0, True), (1.0 + 1e-9, False), (0.9, True)):
        ck.equal(f"A_K(-1/2)/gamma={g!r}", "A(K(-1/2)) boundary probe",
                 set_membership("A_K_lambda", g, lam=-0.5), exp, {"gamma": g, "lam": -0.5})
    ck.equal("A_J_S/gamma=0.6", "A(J(S(0))) excludes 0.6", set_membership("A_J_S_lambda", 0.6, lam=0.0), False)


@scenario("alexander-spiral-univalence", "1 in A(J(S*_alpha(lam))) against both readings of the cosine condition",
          "J(S*_alpha(lam)) subset S iff 1 in A(J(S*_alpha(lam)))",
          alphas=DEFAULT_ALPHAS, lambdas=DEFAULT_LAMBDAS)
def _alexander_spiral_univalence(ck, inputs, cfg):
    for alpha in inputs["alphas"]:
        for lam in inputs["lambdas"]:
            case = f"alpha={alpha:g},lam={lam:g}"
            readings = alexander_spiral_readings(alpha, lam)
            # independent route: disk radius test, plus the real segment when alpha = 0
            c = math.cos(alpha)
            union = c <= 1.0 / (2.0 * (1.0 - lam)) or (alpha == 0 and -0.5 <= lam)
            ck.equal(case, "predicate equals disk-or-segment test", readings["derived"], union,
                     {"alpha": alpha, "lam": lam, "readings": readings,
                      "prose_reading_disagrees": readings["cos <= (1/2)(1-lam)"] != readings["derived"]})


# -- engine oracles -----------------------------------------------------------

def _oracle_catalog():
    return [
        catalog_build("koebe_order", lam=0.0),
        catalog_build("koebe_order", lam=0.25),
        catalog_build("half_plane"),
        catalog_build("neg_log"),
        catalog_build("convex_extremal", lam=0.25),
        catalog_build("spiral_extremal", alpha=0.5, lam=0.25),
        catalog_build("royster_example"),
        catalog_build("identity"),
    ]


def _oracle_operators():
    neg_log = catalog_build("neg_log")
    return {
        "alexander": alexander,
        "hornich-scale": lambda f: hornich_scale(0.5 + 0.25j, f),
        "hornich-add": lambda f: hornich_add(f, neg_log),
        "j-gamma": lambda f: j_gamma(0.75 - 0.2j, f),
        "cesaro": lambda f: cesaro_beta(1.0, f),
    }


def _rel_err(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return float(np.max(np.abs(a - b) / np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))))


@scenario("engine-oracles", "series/quadrature duality, operator identities, finite-difference derivatives",
          "operator definitions; I_a I_b = I_ab; J_g = I_g J; C_beta = J (+) (beta * -log(1-z))", points=20, identity_points=100)
def _engine_oracles(ck, inputs, cfg):
    rng = np.random.default_rng(cfg.seed)
    zs = np.concatenate([_disk_samples(rng, inputs["points"], 0.7), [0.7, 0.7j, -0.7, 0.7 * cmath.exp(2j)]])
    N = cfg.oracle_degree
    for f in _oracle_catalog():
        for op_name, op in _oracle_operators().items():
            case = f"duality/{op_name}/{f.name}{f.params or ''}"
            with ck.guard(case, "series vs quadrature", {"fn": f.name, "op": op_name}):
                t = op(f)
                quad = t.eval_f(zs)
                ser = t.series(N)(zs)
                err = np.abs(quad - ser)
                k = int(np.argmax(err))
                ck.le(case, "|series - quadrature| <= 1e-8 on |z| <= 0.7", float(err[k]), 0.0, 1e-8,
                      {"fn": f.name, "params": f.params, "op": op_name, "degree": N, "worst_z": _z(zs[k])})

    zi = _disk_samples(rng, inputs["identity_points"], 0.9)
    pairs = []
    for f in (catalog_build("koebe_order", lam=0.25), catalog_build("spiral_extremal", alpha=-0.5, lam=0.0)):
        g1, g2 = 0.6 + 0.2j, -0.4 + 0.9j
        pairs.append((f"I_g2 I_g1 = I_g1g2/{f.name}",
                      hornich_scale(g2, hornich_scale(g1, f)), hornich_scale(g1 * g2, f)))
        pairs.append((f"J_g = I_g J/{f.name}", j_gamma(g2, f), hornich_scale(g2, alexander(f))))
        pairs.append((f"C_b = J + b*neglog/{f.name}", cesaro_beta(1.5, f),
                      hornich_add(alexander(f), hornich_scale(1.5, catalog_build("neg_log")))))
        pairs.append((f"C_0 = J/{f.name}", cesaro_beta(0.0, f), alexander(f)))
    for case, lhs, rhs in pairs:
        with ck.guard(f"identity/{case}", "operator identity"):
            e1 = _rel_err(lhs.eval_df(zi), rhs.eval_df(zi))
            e2 = _rel_err(lhs.pre_schwarzian(zi), rhs.pre_schwarzian(zi))
            ck.le(f"identity/{case}", "derivatives and log-derivatives agree to 1e-10", max(e1, e2), 0.0, 1e-10,
                  {"points": int(zi.size), "df_err": e1, "logderiv_err": e2})

    fd_entries = _oracle_catalog() + [
        catalog_build("koebe_order", lam=-1.0),
        catalog_build("convex_extremal", lam=-0.5),
        catalog_build("convex_extremal", lam=0.5),
        catalog_build("spiral_extremal", alpha=-1.2, lam=-0.5),
        catalog_build("power_map", mu=0.5 + 0.5j),
    ]
    zf = _disk_samples(rng, 100, 0.9)
    h = 1e-5
    for f in fd_entries:
        case = f"finite-diff/{f.name}{f.params or ''}"
        with ck.guard(case, "finite differences"):
            fd1 = (f.eval_f(zf + h) - f.eval_f(zf - h)) / (2 * h)
            fd2 = (f.eval_df(zf + h) - f.eval_df(zf - h)) / (2 * h)
            e1 = _rel_err(fd1, f.eval_df(zf))
            e2 = _rel_err(fd2, f.eval_ddf(zf))
            ck.le(case, "central differences match f', f'' to 1e-6 (scaled by max(1,|.|))", max(e1, e2), 0.0, 1e-6,
                  {"df_err": e1, "ddf_err": e2, "h": h})


# -- invariants beyond the acceptance list ------------------------------------------

@scenario("hornich-norm-scaling", "||I_gamma f|| = |gamma| ||f|| and K(lam) = (1-lam) * K",
          "||I_gamma(f)|| = |gamma| ||f||; K(lam) = (1-lam) * K", picks=6)
def _hornich_norm_scaling(ck, inputs, cfg):
    rng = np.random.default_rng(cfg.seed)
    bases = [catalog_build("half_plane"), catalog_build("neg_log"), catalog_build("koebe_order", lam=0.25),
             catalog_build("spiral_extremal", alpha=0.5, lam=0.0)]
    for n in range(inputs["picks"]):
        f = bases[n % len(bases)]
        gamma = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        case = f"scale/{n}"
        with ck.guard(case, "norm scaling", {"fn": f.name, "gamma": _z(gamma)}):
            lhs = norm_estimate(hornich_scale(gamma, f), cfg.grid).value
            rhs = abs(gamma) * norm_estimate(f, cfg.grid).value
            ck.le(case, "relative gap <= 1e-6", abs(lhs - rhs) / rhs, 0.0, 1e-6,
                  {"fn": f.name, "params": f.params, "gamma": _z(gamma), "lhs": lhs, "rhs": rhs})
    for lam in (-1.0, -0.5, 0.25, 0.5):
        case = f"convex-order/lam={lam:g}"
        with ck.guard(case, "(1-lam) * z/(1-z)", {"lam": lam}):
            g = catalog_build("half_plane")
            f = hornich_scale(1 - lam, g)
            rep = membership_margin(f, ClassSpec.convex(lam), cfg.grid)
            ck.gt(f"{case}/member", "(1-lam) * g in K(lam)", rep.margin, -1e-9,
                  {"lam": lam, "witness_z": _z(rep.witness_z)})
            nf = norm_estimate(f, cfg.grid).value
            ng = norm_estimate(g, cfg.grid).value
            ck.close(f"{case}/norm", "||f|| = (1-lam) ||g||", nf, (1 - lam) * ng, 1e-9 * max(1.0, nf), {"lam": lam})


@scenario("kaplan-lower-bound", "Kaplan integral of C_beta[Koebe_lam] >= -(beta - 2 lam) pi",
          "Kaplan integral > (lam - beta/2)(t2 - t1) >= -(beta - 2 lam) pi",
          lambdas=(-0.5, -0.25, 0.0, 0.25, 0.5), betas=DEFAULT_BETAS)
def _kaplan_lower_bound(ck, inputs, cfg):
    for lam in inputs["lambdas"]:
        for beta in inputs["betas"]:
            # the second inequality of the chain needs lam - beta/2 <= 0
            if not 2 * lam <= beta <= 2 * lam + 1:
                continue
            case = f"lam={lam:g},beta={beta:g}"
            with ck.guard(case, "kaplan integral", {"lam": lam, "beta": beta}):
                f = cesaro_beta(beta, catalog_build("koebe_order", lam=lam))
                worst = min(kaplan_profile(f, r)[0] for r in cfg.grid.radius_ladder())
                ck.ge(case, "inf integral >= -(beta - 2 lam) pi", worst, -(beta - 2 * lam) * math.pi, 1e-6,
                      {"lam": lam, "beta": beta})


@scenario("spiral-lemma-identity", "log-derivative identity behind C_beta(S*(lam)) subset S*_alpha(lam - beta/2)",
          "e^{i alpha}(zf'/f - 1) = cos(alpha)(zg'/g - 1 + beta z/(1-z)), exponent e^{-i alpha} cos(alpha)", alphas=(0.0, 0.5, -1.0), lambdas=(0.0, 0.5),
          betas=(0.0, 1.0))
def _spiral_lemma_identity(ck, inputs, cfg):
    rng = np.random.default_rng(cfg.seed)
    zs = _disk_samples(rng, 100, 0.95)
    for alpha in inputs["alphas"]:
        for lam in inputs["lambdas"]:
            for beta in inputs["betas"]:
                case = f"alpha={alpha:g},lam={lam:g},beta={beta:g}"
                with ck.guard(case, "identity", {"alpha": alpha, "lam": lam, "beta": beta}):
                    g = catalog_build("koebe_order", lam=lam)
                    c = cmath.exp(-1j * alpha) * math.cos(alpha)
                    # f(z)/z = [g/(z(1-z)^beta)]^c = (1-z)^(c(2 lam - 2 - beta))
                    f = _z_power(c * (2 * lam - 2 - beta))
                    lhs = cmath.exp(1j * alpha) * (zs * f.eval_df(zs) / f.eval_f(zs) - 1)
                    rhs = math.cos(alpha) * (zs * g.eval_df(zs) / g.eval_f(zs) - 1 + beta * zs / (1 - zs))
                    ck.le(f"{case}/identity", "e^{ia}(zf'/f - 1) = cos a (zg'/g - 1 + beta z/(1-z))",
                          _rel_err(lhs, rhs), 0.0, 1e-9, {"alpha": alpha, "lam": lam, "beta": beta})
                    rep = membership_margin(f, ClassSpec.spirallike(alpha, lam - beta / 2), cfg.grid)
                    ck.gt(f"{case}/member", "f in S*_alpha(lam - beta/2)", rep.margin, -1e-9,
                          {"alpha": alpha, "lam": lam, "beta": beta, "witness_z": _z(rep.witness_z)})


def _z_power(mu):
    """z (1-z)**mu for an arbitrary complex exponent, outside the named catalog."""
    from ..catalog import _z_times_power
    return _z_times_power("z_power", {"mu": complex(mu)}, mu)


# -- running --------------------------------------------------------------------------

def list_scenarios():
    return [{"id": s.id, "description": s.description, "provenance": s.provenance,
             "inputs": {k: list(v) if isinstance(v, tuple) else v for k, v in s.inputs.items()}}
            for s in REGISTRY.values()]


def run_scenario(scenario_id, config: Config = None) -> VerificationReport:
    config = config or Config()
    try:
        sc = REGISTRY[scenario_id]
    except KeyError:
        raise CatalogError(f"unknown scenario {scenario_id!r}") from None
    ck = Checker(sc.id, config)
    inputs = sc.resolved_inputs(config)
    t0 = time.perf_counter()
    try:
        sc.runner(ck, inputs, config)
    except GFTError as exc:
        ck.checks.append(CheckResult(f"{sc.id}/engine", "scenario body", False, error=f"{type(exc).__name__}: {exc}"))
    runtime = time.perf_counter() - t0
    echo = {**config.echo(), "inputs": inputs}
    return VerificationReport(sc.id, sc.description, sc.provenance, ck.checks, echo, runtime)


def run_many(ids, config: Config = None):
    config = config or Config()
    for sid in ids:
        if sid not in REGISTRY:
            raise CatalogError(f"unknown scenario {sid!r}")
    if config.parallel and len(ids) > 1:
        with ProcessPoolExecutor() as pool:
            return list(pool.map(run_scenario, ids, [config] * len(ids)))
    return [run_scenario(sid, config) for sid in ids]
