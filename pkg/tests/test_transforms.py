import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gftkit.analysis import ClassSpec, membership_margin
from gftkit.branch import continuous_log
from gftkit.catalog import AnalyticFn, catalog_build
from gftkit.errors import BranchTrackingError, DomainError, QuadratureError
from gftkit.quadrature import segment_integral
from gftkit.series import TaylorPoly, coeff_allclose
from gftkit.transforms import (
    alexander,
    apply_operator,
    cesaro_beta,
    hornich_add,
    hornich_scale,
    j_gamma,
    path_integral_value,
)

from conftest import disk_points

NEG_LOG = catalog_build("neg_log")
SOURCES = [
    catalog_build("koebe_order", lam=0.0),
    catalog_build("koebe_order", lam=0.25),
    catalog_build("half_plane"),
    NEG_LOG,
    catalog_build("convex_extremal", lam=0.25),
    catalog_build("spiral_extremal", alpha=0.5, lam=0.25),
    catalog_build("royster_example"),
    catalog_build("identity"),
]
SRC_IDS = [f"{f.name}{f.params}" for f in SOURCES]
OPS = {
    "alexander": alexander,
    "hornich-scale": lambda f: hornich_scale(0.5 + 0.25j, f),
    "hornich-add": lambda f: hornich_add(f, NEG_LOG),
    "j-gamma": lambda f: j_gamma(0.75 - 0.2j, f),
    "cesaro": lambda f: cesaro_beta(1.0, f),
}

# (op, source) pairs whose degree-64 series tail at |z| = 0.7 exceeds 1e-8:
# hornich-add with neg_log multiplies f' by 1/(1-z), and z/(1-z)^2 itself
# has a 1.9e-8 tail.  These agree at degree 128 (see the acceptance suite).
DUALITY_64_OUT_OF_REACH = {
    ("hornich-add", "koebe_order{'lam': 0.0}"),
    ("hornich-add", "koebe_order{'lam': 0.25}"),
    ("hornich-add", "spiral_extremal{'alpha': 0.5, 'lam': 0.25}"),
    ("hornich-add", "royster_example{}"),
}


def _duality_cases():
    for op in OPS:
        for f, fid in zip(SOURCES, SRC_IDS):
            marks = []
            if (op, fid) in DUALITY_64_OUT_OF_REACH:
                marks = [pytest.mark.xfail(strict=True, reason="degree-64 truncation tail above 1e-8")]
            yield pytest.param(op, f, id=f"{op}-{fid}", marks=marks)


@pytest.mark.parametrize("op, f", list(_duality_cases()))
def test_series_quadrature_duality_degree64(op, f, rng):
    t = OPS[op](f)
    z = np.concatenate([disk_points(rng, 30, 0.7), [0.7, -0.7, 0.7j]])
    assert np.max(np.abs(t.series(64)(z) - t.eval_f(z))) <= 1e-8


@pytest.mark.parametrize("op", OPS)
@pytest.mark.parametrize("f", SOURCES, ids=SRC_IDS)
def test_normalization_preserved(op, f):
    t = OPS[op](f)
    s = t.series(64)
    assert s.coeffs[0] == 0 and s.coeffs[1] == 1
    assert abs(t.eval_df(0.0) - 1) < 1e-15
    z0 = 1e-9 + 1e-9j
    assert abs(t.eval_f(z0) - z0) < 1e-12
    assert abs(t.eval_f(0.0)) == 0


@pytest.mark.parametrize("op", OPS)
@pytest.mark.parametrize("f", SOURCES, ids=SRC_IDS)
def test_ddf_over_df_matches_pre_schwarzian(op, f, rng):
    t = OPS[op](f)
    z = disk_points(rng, 50, 0.95)
    h = 1e-6
    fd = (t.eval_df(z + h) - t.eval_df(z - h)) / (2 * h) / t.eval_df(z)
    assert np.allclose(t.eval_ddf(z) / t.eval_df(z), t.pre_schwarzian(z), rtol=1e-12, atol=1e-12)
    assert np.max(np.abs(fd - t.pre_schwarzian(z)) / np.maximum(1, np.abs(fd))) < 1e-6


def test_alexander_koebe():
    t = alexander(catalog_build("koebe_order", lam=0.0))
    z = 0.3 - 0.6j
    assert t.eval_df(z) == pytest.approx(1 / (1 - z) ** 2, rel=1e-14)
    assert t.eval_f(z) == pytest.approx(z / (1 - z), rel=1e-13)
    assert path_integral_value(t, 0.5) == pytest.approx(1.0, abs=1e-13)


def test_alexander_coefficients_divide_by_k():
    f = catalog_build("koebe_order", lam=0.25)
    a = f.series(32).coeffs
    j = alexander(f).series(32).coeffs
    assert np.allclose(j[1:], a[1:] / np.arange(1, 33), atol=1e-12)


def test_alexander_identity():
    t = alexander(catalog_build("identity"))
    assert coeff_allclose(t.series(8), TaylorPoly.identity(8))
    assert t.eval_f(0.4 + 0.1j) == pytest.approx(0.4 + 0.1j, abs=1e-15)


@pytest.mark.parametrize("f", SOURCES, ids=SRC_IDS)
def test_hornich_scale_one_is_identity_op(f, rng):
    z = disk_points(rng, 40, 0.9)
    t = hornich_scale(1, f)
    assert np.allclose(t.eval_df(z), f.eval_df(z), rtol=1e-13)
    assert np.allclose(t.eval_f(z), f.eval_f(z), rtol=1e-10, atol=1e-12)


def test_hornich_scale_convex_order_witness(coarse_grid):
    for lam in (-0.5, 0.25, 0.5):
        t = hornich_scale(1 - lam, catalog_build("half_plane"))
        assert membership_margin(t, ClassSpec.convex(lam), coarse_grid).margin >= -1e-9


@pytest.mark.parametrize("f", SOURCES, ids=SRC_IDS)
def test_hornich_add_identity(f, rng):
    z = disk_points(rng, 40, 0.9)
    t = hornich_add(f, catalog_build("identity"))
    assert np.allclose(t.eval_df(z), f.eval_df(z), rtol=1e-13)


def test_hornich_add_log_derivative_sum():
    f, g = catalog_build("koebe_order", lam=0.25), catalog_build("royster_example")
    z = 0.3 + 0.2j
    assert hornich_add(f, g).pre_schwarzian(z) == pytest.approx(f.pre_schwarzian(z) + g.pre_schwarzian(z), rel=1e-14)


@pytest.mark.parametrize("f", SOURCES, ids=SRC_IDS)
def test_j_gamma_special_values(f, rng):
    z = disk_points(rng, 40, 0.9)
    assert np.allclose(j_gamma(1, f).eval_df(z), alexander(f).eval_df(z), rtol=1e-13)
    t0 = j_gamma(0, f)
    assert np.allclose(t0.eval_f(z), z, atol=1e-15)
    assert coeff_allclose(t0.series(16), TaylorPoly.identity(16))


@given(st.builds(complex, st.floats(-2, 2), st.floats(-2, 2)))
def test_j_gamma_koebe_closed_form(gamma):
    z = 0.45 - 0.3j
    got = j_gamma(gamma, catalog_build("koebe_order", lam=0.0)).eval_df(z)
    assert got == pytest.approx(cmath.exp(-2 * gamma * cmath.log(1 - z)), rel=1e-12)


@pytest.mark.parametrize("lam, beta", [(0.25, 1.0), (0.0, 2.0), (-0.5, 0.5), (0.5, 3.0)])
def test_cesaro_koebe_closed_form(lam, beta):
    p = beta - 2 * lam + 1
    t = cesaro_beta(beta, catalog_build("koebe_order", lam=lam))
    for z in (0.7, 0.5 + 0.5j, -0.8j):
        assert t.eval_f(z) == pytest.approx(((1 - z) ** (-p) - 1) / p, rel=1e-10)


def test_cesaro_log_limit():
    t = cesaro_beta(0.0, catalog_build("koebe_order", lam=0.5))
    for z in (0.7, 0.5 + 0.5j, -0.8j):
        assert abs(t.eval_f(z) + cmath.log(1 - z)) < 1e-10


@pytest.mark.parametrize("f", SOURCES, ids=SRC_IDS)
def test_cesaro_zero_is_alexander(f):
    assert coeff_allclose(cesaro_beta(0, f).series(32), alexander(f).series(32))


@pytest.mark.parametrize("beta", [0.0, 0.5, 2.0])
def test_cesaro_convexity_quantity(beta, rng):
    f = catalog_build("spiral_extremal", alpha=0.3, lam=0.1)
    t = cesaro_beta(beta, f)
    z = disk_points(rng, 50, 0.95)
    lhs = 1 + z * t.pre_schwarzian(z)
    rhs = z * f.eval_df(z) / f.eval_f(z) + beta * z / (1 - z)
    assert np.allclose(lhs, rhs, rtol=1e-11)


def test_cesaro_rejects_negative_beta():
    with pytest.raises(DomainError):
        cesaro_beta(-1, catalog_build("half_plane"))
    cesaro_beta(-1, catalog_build("half_plane"), allow_negative=True)


def test_transform_requires_normalized():
    with pytest.raises(DomainError):
        alexander(catalog_build("power_map", mu=2.0))


def test_transform_of_series_and_name():
    s = catalog_build("half_plane").series(32)
    assert coeff_allclose(alexander(s).series(32), alexander("half_plane").series(32))


def test_apply_operator_dispatch():
    f = catalog_build("half_plane")
    assert apply_operator("cesaro", f, beta=0).describe()["operator"] == "cesaro_beta"
    with pytest.raises(DomainError):
        apply_operator("hornich-add", f)
    with pytest.raises(DomainError):
        apply_operator("bogus", f)


@pytest.mark.parametrize("g1, g2", [(0.6 + 0.2j, -0.4 + 0.9j), (2.0, 0.5), (1j, 1j)])
def test_hornich_composition(g1, g2, rng):
    f = catalog_build("spiral_extremal", alpha=-0.5, lam=0.0)
    z = disk_points(rng, 100, 0.9)
    lhs, rhs = hornich_scale(g2, hornich_scale(g1, f)), hornich_scale(g1 * g2, f)
    assert np.allclose(lhs.pre_schwarzian(z), rhs.pre_schwarzian(z), rtol=1e-10, atol=1e-10)
    assert np.allclose(lhs.eval_df(z), rhs.eval_df(z), rtol=1e-10)


# --- quadrature and branch tracking ---------------------------------------

def test_segment_integral_constant():
    z = np.array([0.3 + 0.4j, -0.9, 0.0])
    assert np.allclose(segment_integral(lambda w: np.ones_like(w), z), z, atol=1e-15)


def test_segment_integral_nan_mode():
    bad = lambda w: 1.0 / (w - 0.5)
    with pytest.raises(QuadratureError):
        segment_integral(bad, 0.9)
    out = segment_integral(bad, np.array([0.9, 0.3j]), strict=False)
    assert np.isnan(out[0]) and out[1] == pytest.approx(np.log(1 - 0.6j), rel=1e-10)


def test_segment_integral_reports_depth():
    with pytest.raises(QuadratureError) as exc:
        segment_integral(lambda w: (1 - w) ** -0.999, 0.99999999, max_depth=2)
    assert exc.value.diagnostics["depth"] == 2


def _winding_fn(c):
    # f' = exp(c z) winds around 0 when |c| > pi, so principal log f' jumps
    return AnalyticFn("winding", {"c": c},
                      eval_f=lambda z: (np.exp(c * z) - 1) / c,
                      eval_df=lambda z: np.exp(c * z),
                      eval_ddf=lambda z: c * np.exp(c * z))


def test_branch_tracking_follows_winding():
    c = 12j
    f = _winding_fn(c)
    z = np.array([0.9, -0.9, 0.5 + 0.5j])
    assert np.allclose(continuous_log(f.eval_df, z), c * z, atol=1e-12)
    t = hornich_scale(0.5, f)
    assert np.allclose(t.eval_df(z), np.exp(0.5 * c * z), rtol=1e-12)
    principal = np.exp(0.5 * np.log(f.eval_df(z)))
    assert not np.allclose(principal, t.eval_df(z))


def test_branch_tracking_error_on_zero():
    f = AnalyticFn("with_zero", {}, eval_f=lambda z: z - z * z / 1.0, eval_df=lambda z: 1 - 2 * z,
                   eval_ddf=lambda z: -2 * np.ones_like(z))
    with pytest.raises(BranchTrackingError) as exc:
        hornich_scale(0.5j, f).eval_df(0.9)
    assert exc.value.z is not None
