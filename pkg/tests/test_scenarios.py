import pytest

from gftkit.harness import REGISTRY, Config, run_scenario

INVARIANT_SCENARIOS = [
    "alexander-convex-order",
    "hornich-norm-scaling",
    "kaplan-lower-bound",
    "spiral-lemma-identity",
    "alexander-spiral-univalence",
]


@pytest.mark.parametrize("sid", INVARIANT_SCENARIOS)
def test_invariant_scenario_passes(sid):
    rep = run_scenario(sid, Config())
    bad = [(c.id, c.measured, c.expected, c.witness) for c in rep.checks if c.status != "pass"]
    assert rep.checks and not bad


def test_every_scenario_has_anchor_and_checks():
    cfg = Config(radii=8, angles=64, refine=0)
    for sid, sc in REGISTRY.items():
        assert sc.description and sc.provenance
        rep = run_scenario(sid, cfg)
        assert rep.checks, sid
        assert all(c.id.startswith(sid + "/") for c in rep.checks)
        assert all(c.witness or c.status == "pass" for c in rep.checks), sid


def test_spiral_lemma_exponent_reading():
    # the identity holds with exponent e^{-i alpha} cos alpha; the e^{+i alpha} reading breaks it
    import cmath
    import math

    import numpy as np

    from gftkit.catalog import catalog_build
    from gftkit.harness.scenarios import _z_power

    alpha, lam, beta = 0.5, 0.0, 1.0
    g = catalog_build("koebe_order", lam=lam)
    z = np.array([0.3 + 0.4j, -0.5j, 0.8])
    rhs = math.cos(alpha) * (z * g.eval_df(z) / g.eval_f(z) - 1 + beta * z / (1 - z))
    for sign, holds in ((-1, True), (1, False)):
        c = cmath.exp(sign * 1j * alpha) * math.cos(alpha)
        f = _z_power(c * (2 * lam - 2 - beta))
        lhs = cmath.exp(1j * alpha) * (z * f.eval_df(z) / f.eval_f(z) - 1)
        assert np.allclose(lhs, rhs, rtol=1e-12) is holds
