"""Kernel assembly: symmetry, positivity, the green/pure identity, CSV I/O."""

import numpy as np
import pytest

from crhls.core import make_params
from crhls.discretization import (
    KernelMatrix,
    KernelSpec,
    QuadratureGrid,
    assemble_kernel,
    cylinder_grid,
    load_kernel_csv,
    save_kernel_csv,
    sphere_grid,
)
from conftest import random_sphere_grid


def test_kernel_spec_validation():
    KernelSpec("pure_singular")
    KernelSpec("green_model", mass=np.ones(5), c_w=0.5)
    with pytest.raises(ValueError):
        KernelSpec("unknown_kind")
    with pytest.raises(ValueError):
        KernelSpec("pure_singular", mass=np.ones(5))
    with pytest.raises(ValueError):
        KernelSpec("green_model", mass=np.ones(5), c_w=-0.1)
    with pytest.raises(ValueError):
        KernelSpec("green_model", mass=np.ones((2, 2)))
    with pytest.raises(ValueError):
        KernelSpec("pure_singular", c_w=0.5)


def test_assemble_zero_diagonal_and_symmetry():
    p = make_params(1, 2.0)
    g = sphere_grid(1, (6, 6, 6))
    K = assemble_kernel(g, KernelSpec("pure_singular"), p)
    assert np.all(np.diag(K.entries) == 0.0)
    assert np.array_equal(K.entries, K.entries.T)
    off = K.entries[~np.eye(len(g), dtype=bool)]
    assert np.all(off > 0.0)
    assert len(K) == len(g)


def test_assemble_pure_matches_distance_power():
    p = make_params(1, 2.0)
    rng = np.random.default_rng(9)
    g = random_sphere_grid(12, 0.3, rng)
    K = assemble_kernel(g, KernelSpec("pure_singular"), p)
    from crhls.sphere import sphere_dist

    i, j = 3, 7
    d = sphere_dist(g.node(i), g.node(j))
    assert K.entries[i, j] == pytest.approx(d ** (p.alpha - p.Q), rel=1e-13)


def test_green_model_reduces_to_pure_at_zero_mass():
    # (rho^{-2n} + 0 + 0)^{(Q-alpha)/(Q-2)} = rho^{alpha-Q} for every n, alpha
    g = sphere_grid(1, (5, 5, 5))
    for alpha in (2.0, 1.3):
        p = make_params(1, alpha)
        spec0 = KernelSpec("green_model", mass=np.zeros(len(g)), c_w=0.0)
        K0 = assemble_kernel(g, spec0, p)
        K1 = assemble_kernel(g, KernelSpec("pure_singular"), p)
        assert np.allclose(K0.entries, K1.entries, rtol=1e-12, atol=0)


def test_green_model_mass_monotone():
    p = make_params(1, 2.0)
    g = sphere_grid(1, (5, 5, 5))
    m0 = np.full(len(g), 0.5)
    K0 = assemble_kernel(g, KernelSpec("green_model", mass=m0, c_w=0.0), p)
    K1 = assemble_kernel(g, KernelSpec("green_model", mass=3.0 * m0, c_w=0.0), p)
    off = ~np.eye(len(g), dtype=bool)
    assert np.all(K1.entries[off] > K0.entries[off])


def test_green_model_assembly_requires_mass():
    p = make_params(1, 2.0)
    g = sphere_grid(1, (4, 4, 4))
    with pytest.raises(ValueError):
        assemble_kernel(g, KernelSpec("green_model"), p)
    with pytest.raises(ValueError):
        assemble_kernel(g, KernelSpec("green_model", mass=np.ones(3)), p)


def test_assemble_rejects_coincident_nodes():
    p = make_params(1, 2.0)
    xi = np.array([[1.0, 0.0], [1.0, 0.0], [0.0, 1.0]], dtype=complex)
    g = QuadratureGrid(kind="sphere", n=1, weights=np.ones(3), resolution=(3,), xi=xi)
    with pytest.raises(ValueError):
        assemble_kernel(g, KernelSpec("pure_singular"), p)


def test_assemble_float32_storage():
    p = make_params(1, 2.0)
    g = sphere_grid(1, (5, 5, 5))
    K64 = assemble_kernel(g, KernelSpec("pure_singular"), p)
    K32 = assemble_kernel(g, KernelSpec("pure_singular"), p, dtype=np.float32)
    assert K32.entries.dtype == np.float32
    assert np.allclose(K32.entries, K64.entries.astype(np.float32), rtol=0, atol=0)


def test_assemble_block_rows_independent():
    p = make_params(1, 2.0)
    g = sphere_grid(1, (5, 5, 5))
    K_all = assemble_kernel(g, KernelSpec("pure_singular"), p)
    K_blk = assemble_kernel(g, KernelSpec("pure_singular"), p, block_rows=7)
    assert np.array_equal(K_all.entries, K_blk.entries)


def test_cylinder_kernel_uses_group_distance():
    p = make_params(1, 2.0)
    g = cylinder_grid(1.0, (4, 4, 4), p)
    K = assemble_kernel(g, KernelSpec("pure_singular"), p)
    from crhls.heisenberg import hdist

    i, j = 2, 30
    d = hdist(g.node(i), g.node(j))
    assert K.entries[i, j] == pytest.approx(d ** (p.alpha - p.Q), rel=1e-12)


def test_kernel_matrix_shape_guard():
    p = make_params(1, 2.0)
    g = sphere_grid(1, (4, 4, 4))
    with pytest.raises(ValueError):
        KernelMatrix(entries=np.zeros((3, 3)), spec=KernelSpec("pure_singular"),
                     grid=g, params=p)


def test_kernel_csv_round_trip(tmp_path):
    p = make_params(1, 2.0)
    g = sphere_grid(1, (4, 4, 4))
    spec = KernelSpec("green_model", mass=np.full(len(g), 0.7), c_w=0.2)
    K = assemble_kernel(g, spec, p)
    path = tmp_path / "kernel.csv"
    save_kernel_csv(K, path)
    K2 = load_kernel_csv(path, g, p)
    assert np.array_equal(K2.entries, K.entries)
    assert K2.spec.kind == "green_model"


def test_kernel_csv_rejects_mismatched_grid_or_alpha(tmp_path):
    p = make_params(1, 2.0)
    g = sphere_grid(1, (4, 4, 4))
    K = assemble_kernel(g, KernelSpec("pure_singular"), p)
    path = tmp_path / "kernel.csv"
    save_kernel_csv(K, path)
    other = sphere_grid(1, (5, 5, 5))
    with pytest.raises(ValueError):
        load_kernel_csv(path, other, p)
    with pytest.raises(ValueError):
        load_kernel_csv(path, g, make_params(1, 1.5))
