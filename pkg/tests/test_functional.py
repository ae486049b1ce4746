"""Norms, bilinear forms, quotients, Young-type bounds, tail integrals."""

import numpy as np
import pytest

from crhls.core import make_params
from crhls.discretization import (
    KernelMatrix,
    KernelSpec,
    QuadratureGrid,
    assemble_kernel,
    cylinder_grid,
    sphere_grid,
)
from crhls.functional import (
    _clear_tail_cache,
    bilinear_form,
    lp_norm,
    rayleigh_quotient,
    tail_integral_I1,
    young_bound,
)
from conftest import random_sphere_kernel, two_node_fixture


def _apply(K, f):
    # weighted kernel operator (A f)_i = sum_j K_ij f_j w_j
    return np.asarray(K.entries, dtype=np.float64) @ (f * K.grid.weights)


def test_lp_norm_hand_values():
    g = QuadratureGrid(
        kind="sphere",
        n=1,
        weights=np.array([3.0, 4.0]),
        resolution=(2,),
        xi=np.array([[1.0, 0.0], [0.0, 1.0]], dtype=complex),
    )
    f = np.array([1.0, -2.0])
    assert lp_norm(f, g, 1.0) == pytest.approx(11.0, rel=1e-15)
    assert lp_norm(f, g, 2.0) == pytest.approx(np.sqrt(19.0), rel=1e-15)
    assert lp_norm(f, g, 3.0) == pytest.approx((3.0 + 32.0) ** (1.0 / 3.0), rel=1e-15)


def test_lp_norm_validation():
    g = sphere_grid(1, (4, 4, 4))
    f = np.ones(len(g))
    with pytest.raises(ValueError):
        lp_norm(f, g, 0.9)
    with pytest.raises(ValueError):
        lp_norm(f[:-1], g, 2.0)
    bad = f.copy()
    bad[0] = np.nan
    with pytest.raises(ValueError):
        lp_norm(bad, g, 2.0)


def test_bilinear_form_matches_double_sum():
    params = make_params(1, 2.0)
    rng = np.random.default_rng(31)
    grid, K = random_sphere_kernel(9, 0.3, rng, params)
    f = rng.normal(size=len(grid))
    g = rng.normal(size=len(grid))
    w = grid.weights
    explicit = sum(
        f[i] * K.entries[i, j] * g[j] * w[i] * w[j]
        for i in range(len(grid))
        for j in range(len(grid))
    )
    assert bilinear_form(K, f, g) == pytest.approx(explicit, rel=1e-12)
    assert bilinear_form(K, f, g) == pytest.approx(bilinear_form(K, g, f), rel=1e-12)


def test_rayleigh_quotient_scale_invariant():
    params = make_params(1, 2.0)
    rng = np.random.default_rng(77)
    grid, K = random_sphere_kernel(10, 0.3, rng, params)
    f = rng.uniform(0.1, 2.0, size=len(grid))
    base = rayleigh_quotient(K, f, params.p_alpha)
    for c in (1e-6, 0.37, 1.0, 42.0, 1e7):
        assert rayleigh_quotient(K, c * f, params.p_alpha) == pytest.approx(
            base, rel=1e-12
        )
    with pytest.raises(ValueError):
        rayleigh_quotient(K, np.zeros(len(grid)), params.p_alpha)


def _two_node_weighted(params, w0, w1):
    grid = QuadratureGrid(
        kind="sphere",
        n=1,
        weights=np.array([w0, w1]),
        resolution=(2,),
        xi=np.array([[1.0, 0.0], [0.0, 1.0]], dtype=complex),
    )
    K = KernelMatrix(
        entries=np.array([[0.0, 1.0], [1.0, 0.0]]),
        spec=KernelSpec("pure_singular"),
        grid=grid,
        params=params,
    )
    return grid, K


def test_young_bound_hand_value():
    params = make_params(1, 2.0)
    grid, K = _two_node_weighted(params, 2.0, 3.0)
    # entries [[0, 1], [1, 0]]: every row/column r-mass is one weight
    for r in (1.0, 1.5, 2.0, 4.0):
        assert young_bound(K, grid, r) == pytest.approx(3.0 ** (1.0 / r), rel=1e-14)


def test_young_bound_validation():
    params = make_params(1, 2.0)
    grid, K = two_node_fixture(params)
    with pytest.raises(ValueError):
        young_bound(K, grid, 0.5)
    other = sphere_grid(1, (4, 4, 4))
    with pytest.raises(ValueError):
        young_bound(K, other, 2.0)


def test_young_bound_guards_operator_norm():
    # zero confirmed violations of ||A f||_q <= C ||f||_p across random
    # admissible exponent triples 1/q = 1/p + 1/r - 1 on a random grid
    params = make_params(1, 2.0)
    rng = np.random.default_rng(5150)
    grid, K = random_sphere_kernel(24, 0.2, rng, params)
    violations = 0
    worst = 0.0
    for _ in range(100):
        r = float(rng.uniform(1.05, 3.0))
        inv_p = float(rng.uniform(1.0 - 1.0 / r + 0.05, 1.0))
        p = 1.0 / inv_p
        q = 1.0 / (inv_p + 1.0 / r - 1.0)
        C = young_bound(K, grid, r)
        f = rng.normal(size=len(grid))
        lhs = lp_norm(_apply(K, f), grid, q)
        rhs = C * lp_norm(f, grid, p)
        ratio = lhs / rhs
        worst = max(worst, ratio)
        if lhs > rhs * (1.0 + 1e-12):
            violations += 1
    assert violations == 0
    assert worst <= 1.0 + 1e-12


def test_young_bound_guards_bilinear_form():
    # with p = 2r/(2r - 1) the bound controls |B(f, f)| by C ||f||_p^2
    params = make_params(1, 2.0)
    rng = np.random.default_rng(6021)
    grid, K = random_sphere_kernel(20, 0.2, rng, params)
    for _ in range(50):
        r = float(rng.uniform(1.05, 3.0))
        p = 2.0 * r / (2.0 * r - 1.0)
        C = young_bound(K, grid, r)
        f = rng.normal(size=len(grid))
        assert abs(bilinear_form(K, f, f)) <= C * lp_norm(f, grid, p) ** 2 * (
            1.0 + 1e-12
        )


def test_young_bound_blocked_path():
    # more nodes than the row-block size, so the accumulation spans blocks
    params = make_params(1, 2.0)
    grid = sphere_grid(1, (15, 15, 15))
    assert len(grid) > 2**23 // len(grid)
    K = assemble_kernel(grid, KernelSpec("pure_singular"), params, dtype=np.float32)
    C = young_bound(K, grid, 1.5)
    assert np.isfinite(C) and C > 0.0
    f = np.ones(len(grid))
    lhs = lp_norm(np.asarray(K.entries @ (f * grid.weights), dtype=np.float64), grid, 3.0)
    # 1/q = 1/p + 1/r - 1 with r = 1.5, q = 3 gives p = 1
    assert lhs <= C * lp_norm(f, grid, 1.0) * (1.0 + 1e-6)


def test_tail_integral_positive_decreasing():
    params = make_params(1, 2.0)
    res = (8, 6, 8)
    vals = [tail_integral_I1(1.0, R, params, res) for R in (4.0, 6.0, 9.0, 13.5)]
    assert all(v > 0.0 for v in vals)
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_tail_integral_depends_only_on_ratio():
    params = make_params(1, 2.0)
    res = (8, 6, 8)
    a = tail_integral_I1(0.1, 5.0, params, res)
    b = tail_integral_I1(0.2, 10.0, params, res)
    c = tail_integral_I1(1.0, 50.0, params, res)
    assert a == b == c


def test_tail_integral_dyadic_slope_near_minus_Q():
    params = make_params(1, 2.0)
    res = (8, 6, 8)
    _clear_tail_cache()
    vals = [tail_integral_I1(1.0, R, params, res) for R in (8.0, 16.0, 32.0, 64.0)]
    slopes = np.diff(np.log(vals)) / np.log(2.0)
    assert np.all(np.abs(slopes + params.Q) < 0.05 * params.Q)


def test_tail_integral_validation():
    params = make_params(1, 2.0)
    with pytest.raises(ValueError):
        tail_integral_I1(0.0, 4.0, params, (8, 6, 8))
    with pytest.raises(ValueError):
        tail_integral_I1(-1.0, 4.0, params, (8, 6, 8))
    with pytest.raises(ValueError):
        tail_integral_I1(2.0, 2.0, params, (8, 6, 8))
