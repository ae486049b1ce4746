"""Quadrature grids and singular kernel matrices.

Measure conventions carried by the grid weights:

* sphere grids integrate against dV_S = 2^{2n+1} n! (Euclidean surface
  element on S^{2n+1});
* cylinder grids integrate against dV_0 = 2^{2n} n! (Lebesgue measure on
  C^n x R), restricted to the cylinder |z| < R, |t| < R^2.

The cylinder rule is a product rule in per-coordinate polar form: radial
Gauss-Legendre against r^{2n-1} dr, Hopf-type angles on the direction
sphere, and the parabolic substitution t = +/- s^2 with s Gauss-Legendre
on (0, R) in the vertical direction. With that substitution grids at
different R are exact images of each other under the group dilations, so
discrete scaling identities hold to machine precision rather than only in
the refinement limit.

The sphere rule is deliberately not a tensor-product rule. The natural
ball of the CR distance d(zeta, eta)^2 = 2 |1 - zeta . conj(eta)| is
anisotropic (volume ~ r^Q rather than r^3), and a product lattice in Hopf
coordinates places whole families of node pairs along the near
directions of that anisotropy. Summing the singular kernel d^{alpha - Q}
over such a lattice overshoots the continuum integral by several percent
even at 32^3 nodes, and from above. An equidistributed rule with equal
weights avoids those coherent near pairs: nodes are well separated in the
CR metric, the surviving quadrature bias is the dropped diagonal cell,
and singular-kernel quotients then converge to their continuum values
from below, which is the behaviour the downstream experiments rely on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Params
from .heisenberg import HPoint
from .sphere import SpherePoint

__all__ = [
    "QuadratureGrid",
    "sphere_grid",
    "cylinder_grid",
    "cylinder_shell_grid",
    "KernelSpec",
    "KernelMatrix",
    "assemble_kernel",
    "extremal_values",
    "sphere_extremal_values",
    "hnorm_values",
    "distances_from_node",
    "save_grid_csv",
    "load_grid_csv",
    "save_kernel_csv",
    "load_kernel_csv",
]

_GRID_KINDS = ("sphere", "cylinder")
_KERNEL_KINDS = ("pure_singular", "green_model")

# target entries per assembly block, keeps float64 scratch under ~250 MB
_BLOCK_ENTRIES = 2**23


@dataclass(eq=False)
class QuadratureGrid:
    """Nodes and positive weights of a product quadrature rule.

    kind is "sphere" (nodes stored as unit vectors xi in C^{n+1}) or
    "cylinder" (nodes stored as pairs (z, t) with z in C^n). The weights
    already include the CR measure normalization described in the module
    docstring, so plain weighted sums approximate dV_S / dV_0 integrals.
    """

    kind: str
    n: int
    weights: np.ndarray
    resolution: tuple[int, ...]
    xi: np.ndarray | None = None
    z: np.ndarray | None = None
    t: np.ndarray | None = None

    def __post_init__(self) -> None:
        if self.kind not in _GRID_KINDS:
            raise ValueError(f"unknown grid kind {self.kind!r}, expected one of {_GRID_KINDS}")
        self.weights = np.asarray(self.weights, dtype=np.float64)
        if self.weights.ndim != 1 or self.weights.size == 0:
            raise ValueError("weights must be a nonempty 1-d array")
        if not np.all(np.isfinite(self.weights)) or np.any(self.weights <= 0.0):
            raise ValueError("weights must be finite and strictly positive")
        self.resolution = tuple(int(m) for m in self.resolution)
        N = self.weights.size
        if self.kind == "sphere":
            if self.xi is None:
                raise ValueError("sphere grids need node array xi")
            self.xi = np.asarray(self.xi, dtype=np.complex128)
            if self.xi.shape != (N, self.n + 1):
                raise ValueError(f"xi must have shape ({N}, {self.n + 1}), got {self.xi.shape}")
        else:
            if self.z is None or self.t is None:
                raise ValueError("cylinder grids need node arrays z and t")
            self.z = np.asarray(self.z, dtype=np.complex128)
            self.t = np.asarray(self.t, dtype=np.float64)
            if self.z.shape != (N, self.n):
                raise ValueError(f"z must have shape ({N}, {self.n}), got {self.z.shape}")
            if self.t.shape != (N,):
                raise ValueError(f"t must have shape ({N},), got {self.t.shape}")

    def __len__(self) -> int:
        return int(self.weights.size)

    def node(self, i: int):
        """Node i as a SpherePoint or HPoint, matching the grid kind."""
        if self.kind == "sphere":
            return SpherePoint(self.xi[i])
        return HPoint(self.z[i], self.t[i])

    @property
    def nodes(self) -> list:
        """All nodes as point objects. Materializes a list; small grids only."""
        return [self.node(i) for i in range(len(self))]

    @property
    def total_weight(self) -> float:
        return float(np.sum(self.weights))


def _validate_resolution(resolution, length: int) -> tuple[int, ...]:
    res = tuple(int(m) for m in np.atleast_1d(np.asarray(resolution, dtype=np.int64)))
    if len(res) != length:
        raise ValueError(f"resolution must have {length} components, got {res}")
    if any(m < 4 for m in res):
        raise ValueError(f"all resolution components must be >= 4, got {res}")
    return res


def _gauss_legendre(a: float, b: float, m: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(m)
    half = 0.5 * (b - a)
    return a + half * (x + 1.0), half * w


# Kronecker generators for the sphere rule: inverse powers of the plastic
# number, the cubic-irrational pair with the best known joint badly
# approximable behaviour in dimension two.
_PLASTIC = 1.32471795724474602596
_SPHERE_GEN1 = 1.0 / _PLASTIC
_SPHERE_GEN2 = 1.0 / _PLASTIC**2


def sphere_grid(n: int, resolution) -> QuadratureGrid:
    """Equidistributed grid on the CR sphere S^3 in Hopf coordinates.

    Nodes are xi_j = (cos(theta_j) e^{i phi1_j}, sin(theta_j) e^{i phi2_j})
    with sin^2(theta_j) stratified over (0, 1) (midpoint rule in the exact
    measure coordinate, so the cos sin factor is integrated exactly) and
    the two angles following a Kronecker low-discrepancy sequence with
    plastic-number generators. All weights equal 16 pi^2 / N, so the total
    weight is exact, and node pairs stay uniformly separated in the CR
    distance; see the module docstring for why a tensor-product rule is
    unusable for the singular kernels built on top of this grid.

    The three resolution components fix the node budget N = m1 m2 m3, so
    refinement sweeps written against per-axis resolutions keep working.
    Only n = 1 is supported; higher n is covered by cylinder grids.
    """
    if n != 1:
        raise ValueError(f"sphere grids are implemented for n = 1 only, got n = {n}")
    res = _validate_resolution(resolution, 3)
    N = res[0] * res[1] * res[2]
    j = np.arange(N)
    theta = np.arcsin(np.sqrt((j + 0.5) / N))
    phi1 = 2.0 * math.pi * np.mod(0.5 + _SPHERE_GEN1 * (j + 1), 1.0)
    phi2 = 2.0 * math.pi * np.mod(0.5 + _SPHERE_GEN2 * (j + 1), 1.0)
    xi = np.stack(
        [np.cos(theta) * np.exp(1j * phi1), np.sin(theta) * np.exp(1j * phi2)], axis=-1
    )
    # total measure 2^{2n+1} n! vol(S^3) = 16 pi^2, split evenly
    weights = np.full(N, 16.0 * math.pi**2 / N)
    return QuadratureGrid(kind="sphere", n=1, weights=weights, resolution=res, xi=xi)


def _unit_sphere_directions(m: int, m_ang: int) -> tuple[np.ndarray, np.ndarray]:
    """Hopf-type product rule on the unit sphere S^{2m-1} in C^m.

    Returns (omega, w) with omega of shape (M, m) and sum(w) equal to the
    Euclidean surface area 2 pi^m / (m-1)! up to the theta quadrature
    error (exact for m = 1).
    """
    psi = 2.0 * math.pi * np.arange(m_ang) / m_ang
    w_psi = np.full(m_ang, 2.0 * math.pi / m_ang)
    if m == 1:
        return np.exp(1j * psi)[:, None], w_psi.copy()
    theta, w_theta = _gauss_legendre(0.0, 0.5 * math.pi, m_ang)
    axes = [theta] * (m - 1) + [psi] * m
    w_axes = [w_theta] * (m - 1) + [w_psi] * m
    mesh = np.meshgrid(*axes, indexing="ij")
    weight = np.ones(mesh[0].shape)
    for wm in np.meshgrid(*w_axes, indexing="ij"):
        weight = weight * wm
    sin_running = np.ones(mesh[0].shape)
    rho = []
    for j in range(m - 1):
        th = mesh[j]
        rho.append(sin_running * np.cos(th))
        weight = weight * np.cos(th) * np.sin(th) ** (2 * (m - j) - 3)
        sin_running = sin_running * np.sin(th)
    rho.append(sin_running)
    psis = mesh[m - 1 :]
    omega = np.stack([rho[k] * np.exp(1j * psis[k]) for k in range(m)], axis=-1)
    return omega.reshape(-1, m), weight.reshape(-1)


def _vertical_rule(s_lo: float, s_hi: float, m_t: int) -> tuple[np.ndarray, np.ndarray]:
    # parabolic substitution t = +/- s^2, dt = 2 s ds; exact total weight
    s, ws = _gauss_legendre(s_lo, s_hi, m_t)
    t = np.concatenate([s * s, -(s * s)])
    wt = np.concatenate([2.0 * s * ws, 2.0 * s * ws])
    return t, wt


def _cylinder_block(
    r_lo: float, r_hi: float, s_lo: float, s_hi: float, resolution, params: Params
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    m_r, m_ang, m_t = resolution
    n = params.n
    r, wr = _gauss_legendre(r_lo, r_hi, m_r)
    wr = wr * r ** (2 * n - 1)
    omega, wdir = _unit_sphere_directions(n, m_ang)
    t, wt = _vertical_rule(s_lo, s_hi, m_t)
    measure = float(4**n * math.factorial(n))  # 2^{2n} n!

    n_r, n_d, n_t = r.size, wdir.size, t.size
    z = (r[:, None, None] * omega[None, :, :]).reshape(n_r * n_d, 1, n)
    z = np.broadcast_to(z, (n_r * n_d, n_t, n)).reshape(-1, n)
    t_full = np.broadcast_to(t[None, :], (n_r * n_d, n_t)).reshape(-1)
    weights = measure * np.einsum("i,j,k->ijk", wr, wdir, wt).reshape(-1)
    return np.ascontiguousarray(z), np.ascontiguousarray(t_full), weights


def cylinder_grid(R: float, resolution, params: Params) -> QuadratureGrid:
    """Product grid on the cylinder |z| < R, |t| < R^2 in H^n.

    Radial Gauss-Legendre against r^{2n-1} dr, Hopf-type angles on the
    direction sphere of C^n (plain polar angle for n = 1), parabolic
    Gauss-Legendre rule in t. Weights include the measure factor 2^{2n} n!,
    so the total weight equals 2^{2n+1} pi^n R^{2n+2} exactly.
    """
    R = float(R)
    if not R > 0.0:
        raise ValueError(f"cylinder radius must be positive, got R = {R}")
    res = _validate_resolution(resolution, 3)
    z, t, w = _cylinder_block(0.0, R, 0.0, R, res, params)
    return QuadratureGrid(kind="cylinder", n=params.n, weights=w, resolution=res, z=z, t=t)


def cylinder_shell_grid(R1: float, R2: float, resolution, params: Params) -> QuadratureGrid:
    """Quadrature over the shell between the cylinders of radii R1 < R2.

    Decomposed into two product blocks: the z-annulus R1 < |z| < R2 with
    the full vertical range |t| < R2^2, and the inner z-ball |z| < R1 with
    the vertical shell R1^2 < |t| < R2^2. Used for the concentration tail
    integrals, where the integrand is smooth on the shell.
    """
    R1, R2 = float(R1), float(R2)
    if not 0.0 < R1 < R2:
        raise ValueError(f"shell radii must satisfy 0 < R1 < R2, got R1 = {R1}, R2 = {R2}")
    res = _validate_resolution(resolution, 3)
    za, ta, wa = _cylinder_block(R1, R2, 0.0, R2, res, params)
    zb, tb, wb = _cylinder_block(0.0, R1, R1, R2, res, params)
    return QuadratureGrid(
        kind="cylinder",
        n=params.n,
        weights=np.concatenate([wa, wb]),
        resolution=res,
        z=np.concatenate([za, zb]),
        t=np.concatenate([ta, tb]),
    )


def hnorm_values(grid: QuadratureGrid) -> np.ndarray:
    """Gauge norm of every node of a cylinder grid."""
    if grid.kind != "cylinder":
        raise ValueError("hnorm_values needs a cylinder grid")
    zz = np.einsum("ij,ij->i", grid.z, grid.z.conj()).real
    return np.sqrt(np.hypot(zz, grid.t))


def extremal_values(grid: QuadratureGrid, params: Params, eps: float = 1.0) -> np.ndarray:
    """Vectorized concentrating extremal on a cylinder grid.

    Matches extremal_family(eps, node, params) pointwise; the loop-free
    path is what the experiments use on large grids.
    """
    if grid.kind != "cylinder":
        raise ValueError("extremal_values needs a cylinder grid")
    if grid.n != params.n:
        raise ValueError(f"grid has n = {grid.n} but params have n = {params.n}")
    eps = float(eps)
    if not eps > 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    zz = np.einsum("ij,ij->i", grid.z, grid.z.conj()).real
    expo = -0.5 * (params.Q + params.alpha)
    scale = eps**expo
    return scale * np.hypot(1.0 + zz / eps**2, grid.t / eps**2) ** expo


def sphere_extremal_values(grid: QuadratureGrid, pole, params: Params) -> np.ndarray:
    """Vectorized sphere extremal |1 - conj(pole) . xi|^{-(Q+alpha)/2}."""
    if grid.kind != "sphere":
        raise ValueError("sphere_extremal_values needs a sphere grid")
    pole_arr = np.atleast_1d(np.asarray(pole, dtype=np.complex128))
    if pole_arr.shape != (grid.n + 1,):
        raise ValueError(f"pole must have length n + 1 = {grid.n + 1}, got {pole_arr.shape}")
    if not float(np.linalg.norm(pole_arr)) < 1.0:
        raise ValueError("pole must lie strictly inside the unit ball")
    ip = grid.xi @ pole_arr.conj()
    return np.abs(1.0 - ip) ** (-0.5 * (params.Q + params.alpha))


def distances_from_node(grid: QuadratureGrid, i: int) -> np.ndarray:
    """Distance from node i to every node, in the grid's own metric."""
    N = len(grid)
    if not 0 <= i < N:
        raise ValueError(f"node index {i} out of range for grid of size {N}")
    if grid.kind == "sphere":
        ip = grid.xi @ grid.xi[i].conj()
        return np.sqrt(2.0 * np.abs(1.0 - ip))
    dz2 = np.einsum("ij,ij->i", grid.z - grid.z[i], (grid.z - grid.z[i]).conj()).real
    ip = grid.z @ grid.z[i].conj()
    tau = grid.t - grid.t[i] + 2.0 * ip.imag
    return np.sqrt(np.hypot(dz2, tau))


@dataclass(frozen=True, eq=False)
class KernelSpec:
    """Kernel model selector.

    pure_singular: K(x, y) = rho(x, y)^{alpha - Q}.
    green_model:   K(x, y) = (rho^{-2n} + mass(x) + c_w rho)^{(Q-alpha)/(Q-2)},
    with mass given per node and remainder coefficient c_w >= 0. Since
    2n = Q - 2, zero mass and c_w = 0 reduce the model exactly to the pure
    singular kernel.
    """

    kind: str
    mass: np.ndarray | None = None
    c_w: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in _KERNEL_KINDS:
            raise ValueError(f"unknown kernel kind {self.kind!r}, expected one of {_KERNEL_KINDS}")
        object.__setattr__(self, "c_w", float(self.c_w))
        if self.c_w < 0.0:
            raise ValueError(f"c_w must be nonnegative, got {self.c_w}")
        if self.mass is not None:
            if self.kind == "pure_singular":
                raise ValueError("mass is only meaningful for the green_model kernel")
            mass = np.asarray(self.mass, dtype=np.float64)
            if mass.ndim != 1:
                raise ValueError(f"mass must be a 1-d per-node array, got shape {mass.shape}")
            object.__setattr__(self, "mass", mass)
        if self.kind == "pure_singular" and self.c_w != 0.0:
            raise ValueError("c_w is only meaningful for the green_model kernel")


@dataclass(eq=False)
class KernelMatrix:
    """Dense kernel matrix over a grid; diagonal entries are zero.

    The entries contain no quadrature weights. Params used at assembly
    time ride along so downstream consumers (solver window validation,
    serialization headers) need no extra context.
    """

    entries: np.ndarray
    spec: KernelSpec
    grid: QuadratureGrid
    params: Params

    def __post_init__(self) -> None:
        N = len(self.grid)
        if self.entries.shape != (N, N):
            raise ValueError(f"entries must have shape ({N}, {N}), got {self.entries.shape}")

    def __len__(self) -> int:
        return int(self.entries.shape[0])


def _pow_neg(base: np.ndarray, expo: float) -> np.ndarray:
    if expo == -1.0:
        return np.reciprocal(base)
    if expo == -0.5:
        return np.reciprocal(np.sqrt(base))
    return base**expo


def _base_block_sphere(xi: np.ndarray, i0: int, i1: int) -> np.ndarray:
    # squared chordal distance d^2 = 2 |1 - xi_i . conj(xi_j)|
    ip = xi[i0:i1] @ xi.conj().T
    np.subtract(1.0, ip, out=ip)
    return 2.0 * np.abs(ip)


def _base_block_cylinder(
    z: np.ndarray, t: np.ndarray, zz: np.ndarray, i0: int, i1: int
) -> np.ndarray:
    # fourth power of the gauge distance |v^{-1} u|
    ip = z[i0:i1] @ z.conj().T
    dz2 = zz[i0:i1, None] + zz[None, :] - 2.0 * ip.real
    np.maximum(dz2, 0.0, out=dz2)
    tau = t[i0:i1, None] - t[None, :] + 2.0 * ip.imag
    return dz2 * dz2 + tau * tau


def assemble_kernel(
    grid: QuadratureGrid,
    spec: KernelSpec,
    params: Params,
    dtype=np.float64,
    block_rows: int | None = None,
) -> KernelMatrix:
    """Assemble the dense kernel matrix of a KernelSpec over a grid.

    Entries are computed blockwise in float64 and stored in the requested
    dtype (float32 keeps very large grids inside a small memory budget).
    The diagonal is set to zero: the singular self-interaction cell is
    dropped, which biases weighted row sums low by O(h^alpha), so Rayleigh
    quotients built on these matrices converge to their continuum values
    from below.

    Raises ValueError on coincident distinct nodes, and for green_model
    kernels whose base rho^{-2n} + mass + c_w rho is not strictly positive
    at some node pair.
    """
    if grid.n != params.n:
        raise ValueError(f"grid has n = {grid.n} but params have n = {params.n}")
    N = len(grid)
    if spec.kind == "green_model":
        if spec.mass is None:
            raise ValueError("green_model assembly needs per-node mass values")
        if spec.mass.shape != (N,):
            raise ValueError(f"mass must have shape ({N},), got {spec.mass.shape}")

    if grid.kind == "sphere":
        base_block = lambda i0, i1: _base_block_sphere(grid.xi, i0, i1)
        base_power = 0.5  # base is d^2
    else:
        zz = np.einsum("ij,ij->i", grid.z, grid.z.conj()).real
        base_block = lambda i0, i1: _base_block_cylinder(grid.z, grid.t, zz, i0, i1)
        base_power = 0.25  # base is rho^4

    Q, alpha, n = params.Q, params.alpha, params.n
    if block_rows is None:
        block_rows = max(1, min(N, _BLOCK_ENTRIES // N))
    entries = np.empty((N, N), dtype=dtype)

    for i0 in range(0, N, block_rows):
        i1 = min(i0 + block_rows, N)
        base = base_block(i0, i1)
        rows = np.arange(i1 - i0)
        diag = np.arange(i0, i1)
        base[rows, diag] = 1.0  # placeholder, overwritten with 0 below
        flat_min = int(np.argmin(base))
        if base.flat[flat_min] <= 0.0:
            r, c = divmod(flat_min, N)
            raise ValueError(f"coincident nodes at indices ({i0 + r}, {c}): zero distance")
        if spec.kind == "pure_singular":
            block = _pow_neg(base, base_power * (alpha - Q))
        else:
            g = _pow_neg(base, -base_power * 2 * n)
            g += spec.mass[i0:i1, None]
            if spec.c_w != 0.0:
                g += spec.c_w * base ** base_power
            flat_min = int(np.argmin(g))
            if g.flat[flat_min] <= 0.0:
                r, c = divmod(flat_min, N)
                raise ValueError(
                    f"green_model base is nonpositive at node pair ({i0 + r}, {c}): "
                    f"{g.flat[flat_min]:.6e}"
                )
            block = g ** ((Q - alpha) / (Q - 2))
        block[rows, diag] = 0.0
        entries[i0:i1] = block
    return KernelMatrix(entries=entries, spec=spec, grid=grid, params=params)


# ---------------------------------------------------------------------------
# plain-text serialization (CSV, no binary formats)

_FLOAT_FMT = "%.17g"


def save_grid_csv(grid: QuadratureGrid, path) -> None:
    """Write a grid as CSV: a metadata line, a column-name line, data rows.

    Floats are written with 17 significant digits so a load round-trips
    bit for bit.
    """
    res = ";".join(str(m) for m in grid.resolution)
    lines = [f"kind={grid.kind},n={grid.n},resolution={res}"]
    if grid.kind == "sphere":
        cols = [f"xi{k}_{part}" for k in range(grid.n + 1) for part in ("re", "im")]
        cols.append("weight")
        lines.append(",".join(cols))
        data = np.empty((len(grid), 2 * (grid.n + 1) + 1))
        data[:, 0:-1:2] = grid.xi.real
        data[:, 1:-1:2] = grid.xi.imag
        data[:, -1] = grid.weights
    else:
        cols = [f"z{k}_{part}" for k in range(grid.n) for part in ("re", "im")]
        cols += ["t", "weight"]
        lines.append(",".join(cols))
        data = np.empty((len(grid), 2 * grid.n + 2))
        data[:, 0 : 2 * grid.n : 2] = grid.z.real
        data[:, 1 : 2 * grid.n : 2] = grid.z.imag
        data[:, -2] = grid.t
        data[:, -1] = grid.weights
    for row in data:
        lines.append(",".join(_FLOAT_FMT % v for v in row))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_grid_csv(path) -> QuadratureGrid:
    """Load a grid written by save_grid_csv."""
    with open(path) as fh:
        meta_line = fh.readline().strip()
        fh.readline()  # column names carry no extra information
        data = np.loadtxt(fh, delimiter=",", ndmin=2)
    meta = dict(item.split("=", 1) for item in meta_line.split(","))
    kind = meta["kind"]
    n = int(meta["n"])
    resolution = tuple(int(m) for m in meta["resolution"].split(";"))
    if kind == "sphere":
        xi = data[:, 0:-1:2] + 1j * data[:, 1:-1:2]
        return QuadratureGrid(
            kind="sphere", n=n, weights=data[:, -1], resolution=resolution, xi=xi
        )
    z = data[:, 0 : 2 * n : 2] + 1j * data[:, 1 : 2 * n : 2]
    return QuadratureGrid(
        kind="cylinder", n=n, weights=data[:, -1], resolution=resolution, z=z, t=data[:, -2]
    )


def save_kernel_csv(kernel: KernelMatrix, path) -> None:
    """Write a kernel matrix as CSV, row-major, header line "N,kind,alpha".

    Intended for modest N; the file holds N^2 floats in plain text.
    """
    with open(path, "w") as fh:
        fh.write(f"{len(kernel)},{kernel.spec.kind},{_FLOAT_FMT % kernel.params.alpha}\n")
        for row in np.asarray(kernel.entries, dtype=np.float64):
            fh.write(",".join(_FLOAT_FMT % v for v in row) + "\n")


def load_kernel_csv(path, grid: QuadratureGrid, params: Params) -> KernelMatrix:
    """Load a kernel written by save_kernel_csv onto its grid.

    The header is validated against the grid size and params. green_model
    mass values are not stored in the CSV; the loaded spec carries only
    the kind label, the entries themselves are authoritative.
    """
    with open(path) as fh:
        header = fh.readline().strip().split(",")
        entries = np.loadtxt(fh, delimiter=",", ndmin=2)
    N, kind, alpha = int(header[0]), header[1], float(header[2])
    if N != len(grid):
        raise ValueError(f"kernel holds {N} nodes but the grid has {len(grid)}")
    if abs(alpha - params.alpha) > 1e-12:
        raise ValueError(f"kernel was assembled with alpha = {alpha}, params have {params.alpha}")
    return KernelMatrix(entries=entries, spec=KernelSpec(kind=kind), grid=grid, params=params)
