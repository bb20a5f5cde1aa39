import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

import dhankel as dh
from dhankel.quadrature import weight_constant, weighted_integral
from dhankel.specfun import DomainError, KernelParams, kernel_slope_bounds
from dhankel.transform import ConfigurationError, diff_norm_spectral

ALPHA = 0.5


def mass_oracle(f, radius, alpha):
    """Independent route: adaptive quadrature of f against the weight."""
    ca = weight_constant(alpha)
    pos = quad(lambda x: f(np.array(x)) * x ** (2 * alpha - 1), 0, radius, limit=400)[0]
    neg = quad(lambda x: f(np.array(-x)) * x ** (2 * alpha - 1), 0, radius, limit=400)[0]
    return ca * (pos + neg)


def test_zero_function(grids_default):
    xg, lg = grids_default
    f = dh.FunctionSpec(evaluator=lambda x: np.zeros_like(x), support_radius=1.0)
    assert np.all(dh.forward(f, xg, lg).values == 0.0)


def test_alpha_mismatch():
    xg = dh.build_weighted_grid(0.5, 2.0, 4, 4)
    lg = dh.build_weighted_grid(0.6, 2.0, 4, 4)
    f = dh.FunctionSpec(evaluator=lambda x: np.exp(-x * x), support_radius=4.0)
    with pytest.raises(ConfigurationError):
        dh.forward(f, xg, lg)


def test_spectral_data_length_invariant():
    lg = dh.build_weighted_grid(0.5, 2.0, 4, 4)
    with pytest.raises(ConfigurationError):
        dh.SpectralData(alpha=0.5, lambda_grid=lg, values=np.zeros(3))


@given(a=st.floats(-5, 5), b=st.floats(-5, 5))
def test_linearity(grids_default, a, b):
    xg, lg = grids_default
    f1 = dh.FunctionSpec(evaluator=lambda x: np.exp(-x * x), support_radius=8.0)
    f2 = dh.FunctionSpec(evaluator=lambda x: x * np.exp(-x * x), support_radius=8.0)
    comb = dh.FunctionSpec(
        evaluator=lambda x: a * np.exp(-x * x) + b * x * np.exp(-x * x),
        support_radius=8.0)
    lhs = dh.forward(comb, xg, lg).values
    rhs = a * dh.forward(f1, xg, lg).values + b * dh.forward(f2, xg, lg).values
    assert np.allclose(lhs, rhs, rtol=0, atol=1e-12 * (1 + abs(a) + abs(b)))


def test_sup_norm_dominated_by_l1(grids_default, bump_spec):
    # |B| <= 1 (for this alpha) makes the discrete inequality exact
    xg, lg = grids_default
    spec = dh.forward(bump_spec, xg, lg)
    l1 = dh.weighted_norm(bump_spec(xg.nodes), xg, 1.0)
    assert spec.sup_norm() <= l1 * (1 + 1e-9)


def test_forward_at_low_frequency_is_signed_mass(grids_default, bump_spec):
    xg, lg = grids_default
    mass_grid = weighted_integral(bump_spec.evaluator, xg)
    mass_ind = mass_oracle(bump_spec.evaluator, xg.radius, ALPHA)
    assert abs(mass_grid - mass_ind) < 1e-8
    spec = dh.forward(bump_spec, xg, lg)
    j = np.argmin(np.abs(lg.nodes))
    # |F(lambda) - mass| <= max-slope * |lambda| * first moment of |f|
    _, c_pos = kernel_slope_bounds(ALPHA)
    moment = weighted_integral(lambda x: np.abs(x) * bump_spec(x), xg)
    assert abs(spec.values[j] - mass_ind) < 2.0 * c_pos * abs(lg.nodes[j]) * moment


def test_plancherel_and_refinement(bump_spec):
    ref_err = []
    for panels in (16, 32):
        xg = dh.build_weighted_grid(ALPHA, 20.0, panels, 6)
        lg = dh.build_weighted_grid(ALPHA, 64.0, 2 * panels, 6)
        nf = dh.weighted_norm(bump_spec(xg.nodes), xg, 2.0)
        nF = dh.forward(bump_spec, xg, lg).norm(2.0)
        ref_err.append(abs(nF - nf) / nf)
    assert ref_err[0] <= 1e-3
    assert ref_err[1] <= ref_err[0] / 4.0


def test_round_trip_refinement(bump_spec):
    errs = []
    for panels in (16, 32):
        xg = dh.build_weighted_grid(ALPHA, 20.0, panels, 6)
        lg = dh.build_weighted_grid(ALPHA, 64.0, 2 * panels, 6)
        spec = dh.forward(bump_spec, xg, lg)
        back = dh.inverse(spec, xg)
        nf = dh.weighted_norm(bump_spec(xg.nodes), xg, 2.0)
        errs.append(dh.weighted_norm(back(xg.nodes) - bump_spec(xg.nodes), xg, 2.0) / nf)
    assert errs[0] <= 1e-2
    assert errs[1] <= errs[0] / 4.0


def test_inverse_of_zero(grids_default):
    xg, lg = grids_default
    g = dh.SpectralData(alpha=ALPHA, lambda_grid=lg, values=np.zeros(lg.nodes.size))
    assert np.all(dh.inverse(g, xg)(xg.nodes) == 0.0)


def make_bandlimited(lg, cutoff=1.0):
    vals = np.where(np.abs(lg.nodes) <= cutoff, 1.0, 0.0)
    return dh.SpectralData(alpha=lg.alpha, lambda_grid=lg, values=vals)


def test_tail_energy_basics(grids_default):
    _, lg = grids_default
    g = make_bandlimited(lg)
    # tail misses the support
    assert dh.tail_energy(g, 0.5, 2.0) == 0.0
    # 1/h at or beyond the radius: degenerate empty tail
    assert dh.tail_energy(g, 1.0 / (lg.radius + 1), 2.0) == 0.0
    from dhankel.transform import tail_truncated
    assert tail_truncated(lg, 1.0 / (lg.radius + 1))
    assert not tail_truncated(lg, 1.0)


@given(h=st.floats(min_value=0.02, max_value=0.9),
       factor=st.floats(min_value=1.0, max_value=10.0))
def test_tail_energy_monotone_in_h(grids_default, h, factor):
    _, lg = grids_default
    rng = np.random.default_rng(7)
    g = dh.SpectralData(alpha=ALPHA, lambda_grid=lg,
                        values=rng.uniform(0, 1, lg.nodes.size))
    assert dh.tail_energy(g, h, 2.0) <= dh.tail_energy(g, h * factor, 2.0) + 1e-15


def test_translate_identity_at_zero(grids_resolved_small, bump_spec):
    xg, lg = grids_resolved_small
    t0 = dh.translate(bump_spec, 0.0, xg, lg)
    rt = dh.inverse(dh.forward(bump_spec, xg, lg), xg)
    assert np.allclose(t0(xg.nodes), rt(xg.nodes), rtol=0, atol=1e-12)
    # identity up to round-trip error
    nf = dh.weighted_norm(bump_spec(xg.nodes), xg, 2.0)
    assert dh.weighted_norm(t0(xg.nodes) - bump_spec(xg.nodes), xg, 2.0) < 1e-6 * nf


def test_translate_contraction(grids_resolved_small, bump_spec):
    xg, lg = grids_resolved_small
    nf = dh.weighted_norm(bump_spec(xg.nodes), xg, 2.0)
    for h in (0.05, 0.3, 1.0):
        tf = dh.translate(bump_spec, h, xg, lg)
        assert dh.weighted_norm(tf(xg.nodes), xg, 2.0) <= nf * (1 + 1e-6)


def test_multiplier_identity_via_physical_route(grids_resolved_small, bump_spec):
    # forward(translate(f,h)) recomputed through x space must equal the
    # pointwise multiplication that defines the translation
    xg, lg = grids_resolved_small
    h = 0.125
    spec = dh.forward(bump_spec, xg, lg)
    mult = dh.kernel_B(KernelParams(alpha=ALPHA), lg.nodes * h)
    via_physical = dh.forward(dh.translate(bump_spec, h, xg, lg), xg, lg)
    scale = spec.norm(2.0)
    err = dh.weighted_norm(via_physical.values - mult * spec.values, lg, 2.0)
    assert err < 1e-6 * scale


def test_diff_norm_domain(grids_default, bump_spec):
    xg, lg = grids_default
    with pytest.raises(DomainError):
        dh.diff_norm(bump_spec, 0.1, 1.0, xg, lg)
    with pytest.raises(DomainError):
        dh.diff_norm(bump_spec, 0.1, 2.5, xg, lg)


def test_diff_norm_small_at_zero_h(grids_resolved_small, bump_spec):
    xg, lg = grids_resolved_small
    nf = dh.weighted_norm(bump_spec(xg.nodes), xg, 2.0)
    assert dh.diff_norm(bump_spec, 1e-9, 2.0, xg, lg) < 1e-6 * nf


def test_diff_norm_routes_agree_on_smooth_function(grids_resolved_small, bump_spec):
    xg, lg = grids_resolved_small
    for h in (0.0625, 0.125, 0.25):
        fast = dh.diff_norm(bump_spec, h, 2.0, xg, lg, route="fast")
        phys = dh.diff_norm(bump_spec, h, 2.0, xg, lg, route="physical")
        assert abs(fast - phys) / fast < 1e-6


def test_diff_norm_bandlimited_rate(grids_default):
    # spectrum confined to |lambda| <= 1: the difference norm is O(h) with
    # the constant given by the kernel's near-zero slopes
    _, lg = grids_default
    g = make_bandlimited(lg, cutoff=1.0)
    c_neg, c_pos = kernel_slope_bounds(ALPHA)
    lam = lg.nodes
    total = math.sqrt(float(np.sum(lg.weights * g.values ** 2)))
    for h in (1e-3, 1e-4):
        got = diff_norm_spectral(g, h)
        slopes = np.where(lam >= 0, c_pos, c_neg)
        oracle = math.sqrt(float(np.sum(
            lg.weights * (slopes * np.abs(lam) * h) ** 2 * g.values ** 2)))
        assert abs(got - oracle) / oracle < 0.02
        assert got <= 2.0 * total


def test_spectral_csv_format(grids_default, bump_spec):
    xg, lg = grids_default
    spec = dh.forward(bump_spec, xg, lg)
    text = spec.to_csv()
    lines = text.splitlines()
    assert lines[0] == f"# alpha={ALPHA!r} radius={lg.radius!r}"
    assert lines[1] == "lambda,value"
    lam, val = lines[2].split(",")
    assert float(lam) == lg.nodes[0]
    assert float(val) == spec.values[0]
    assert len(lines) == 2 + lg.nodes.size
