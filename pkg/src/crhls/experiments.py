"""Experiment drivers: truncated lower bounds, mass perturbation, identities.

Each driver returns a small record with plain-type fields; the CLI turns
records into JSON summaries and CSV rows.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .core import Params, make_params, sharp_constant_DH
from .discretization import (
    KernelMatrix,
    KernelSpec,
    QuadratureGrid,
    assemble_kernel,
    cylinder_grid,
    extremal_values,
    sphere_grid,
)
from .functional import lp_norm, rayleigh_quotient
from .solver import continuation, default_p_schedule

__all__ = [
    "LowerBoundResult",
    "EpsInvarianceResult",
    "MassPerturbationResult",
    "lower_bound_experiment",
    "eps_invariance_experiment",
    "mass_perturbation_experiment",
    "conformal_covariance_check",
    "curvature_equation_residual",
]


@dataclass(frozen=True)
class LowerBoundResult:
    """Truncated-extremal Rayleigh quotient against the sharp constant."""

    n: int
    alpha: float
    eps: float
    R: float
    ratio: float
    resolution: tuple[int, ...]
    n_nodes: int
    quotient: float
    sharp_constant: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["resolution"] = list(self.resolution)
        return d

    csv_header = "experiment,n,alpha,eps,R,ratio,n_nodes,quotient,sharp_constant"

    def csv_row(self) -> str:
        return (
            f"lower_bound,{self.n},{self.alpha!r},{self.eps!r},{self.R!r},"
            f"{self.ratio!r},{self.n_nodes},{self.quotient!r},{self.sharp_constant!r}"
        )


def _transported_extremal_values(grid: QuadratureGrid, params: Params, eps: float, R: float) -> np.ndarray:
    """Eps-scale group extremal moved to the sphere, truncated at gauge radius R.

    Pulls each sphere node back through the inverse Cayley map, evaluates the
    eps-scale extremal there, multiplies by the Jacobian power that matches
    the lower sharp exponent, and zeroes nodes whose preimage has gauge norm
    above R. At eps = 1 the untruncated result is constant to rounding.
    """
    if grid.kind != "sphere" or grid.n != 1:
        raise ValueError("transported extremal needs an n = 1 sphere grid")
    Q, al = params.Q, params.alpha
    w = 1.0 + grid.xi[:, 1]
    z = grid.xi[:, 0] / w
    t = ((1.0 - grid.xi[:, 1]) / w).imag
    az2 = np.abs(z) ** 2
    mask = az2**2 + t**2 <= R**4
    # f(C^{-1} xi) * J_{C^{-1}}^{1/q} fused into one bounded ratio
    ratio = ((1.0 + az2) ** 2 + t**2) / ((eps**2 + az2) ** 2 + t**2)
    g = eps ** (0.5 * (Q + al)) * ratio ** (0.25 * (Q + al))
    g *= 2.0 ** (-(Q - 1.0) * (Q + al) / (2.0 * Q))
    return np.where(mask, g, 0.0)


def lower_bound_experiment(eps: float, R: float, resolution, params: Params) -> LowerBoundResult:
    """Quotient of the truncated concentrating extremal at the lower exponent.

    The trial function is the eps-scale extremal restricted to the gauge ball
    of radius R, which bounds the sharp constant from below for every eps and
    R. The quotient is evaluated on the sphere through the Cayley transport
    that leaves it invariant, because the equidistributed sphere rule resolves
    the singular kernel without the coherent near-diagonal pairs a product
    rule on the group would produce. Approaches the sharp constant from below
    as R/eps grows and the mesh refines.
    """
    eps, R = float(eps), float(R)
    if not eps > 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    if not R > eps:
        raise ValueError(f"need eps < R, got eps = {eps}, R = {R}")
    if params.n != 1:
        raise ValueError("lower_bound_experiment is implemented for n = 1 only")
    grid = sphere_grid(params.n, resolution)
    g = _transported_extremal_values(grid, params, eps, R)
    K = assemble_kernel(grid, KernelSpec("pure_singular"), params)
    quotient = rayleigh_quotient(K, g, params.q_alpha)
    return LowerBoundResult(
        n=params.n,
        alpha=params.alpha,
        eps=eps,
        R=R,
        ratio=R / eps,
        resolution=tuple(grid.resolution),
        n_nodes=len(grid),
        quotient=quotient,
        sharp_constant=sharp_constant_DH(params),
    )


@dataclass(frozen=True)
class EpsInvarianceResult:
    """Norm of the concentrating family across eps at a fixed R/eps ratio."""

    n: int
    alpha: float
    ratio: float
    resolution: tuple[int, ...]
    eps_list: tuple[float, ...]
    norms: tuple[float, ...]
    spread_rel: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["resolution"] = list(self.resolution)
        d["eps_list"] = list(self.eps_list)
        d["norms"] = list(self.norms)
        return d

    csv_header = "experiment,n,alpha,ratio,eps,norm"

    def csv_rows(self) -> list[str]:
        return [
            f"eps_invariance,{self.n},{self.alpha!r},{self.ratio!r},{eps!r},{nrm!r}"
            for eps, nrm in zip(self.eps_list, self.norms)
        ]


def eps_invariance_experiment(
    eps_list, ratio: float, resolution, params: Params
) -> EpsInvarianceResult:
    """L^{q_alpha} mass of f_eps on the cylinder of radius ratio * eps.

    The continuum masses agree exactly across eps; the dilation-covariant
    cylinder rule reproduces that agreement at the discrete level, so the
    relative spread measures only floating-point noise.
    """
    ratio = float(ratio)
    if not ratio > 1.0:
        raise ValueError(f"ratio must exceed 1, got {ratio}")
    eps_tuple = tuple(float(e) for e in eps_list)
    if len(eps_tuple) == 0 or any(e <= 0.0 for e in eps_tuple):
        raise ValueError(f"eps_list must hold positive values, got {eps_list}")
    norms = []
    for eps in eps_tuple:
        grid = cylinder_grid(ratio * eps, resolution, params)
        norms.append(lp_norm(extremal_values(grid, params, eps), grid, params.q_alpha))
    lo, hi = min(norms), max(norms)
    return EpsInvarianceResult(
        n=params.n,
        alpha=params.alpha,
        ratio=ratio,
        resolution=tuple(int(m) for m in np.atleast_1d(resolution)),
        eps_list=eps_tuple,
        norms=tuple(norms),
        spread_rel=(hi - lo) / hi,
    )


@dataclass(frozen=True)
class MassPerturbationResult:
    """Critical-limit quotients with and without a positive-mass kernel term."""

    alpha: float
    A0: float
    c_w: float
    resolution: tuple[int, ...]
    n_nodes: int
    p_endpoint: float
    quotient_mass: float
    quotient_pure: float
    delta: float
    all_converged: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["resolution"] = list(self.resolution)
        return d

    csv_header = (
        "experiment,alpha,A0,c_w,n_nodes,p_endpoint,quotient_mass,quotient_pure,delta,converged"
    )

    def csv_row(self) -> str:
        return (
            f"mass_perturbation,{self.alpha!r},{self.A0!r},{self.c_w!r},{self.n_nodes},"
            f"{self.p_endpoint!r},{self.quotient_mass!r},{self.quotient_pure!r},"
            f"{self.delta!r},{self.all_converged}"
        )


def mass_perturbation_experiment(
    A0: float,
    c_w: float,
    alpha: float,
    resolution,
    tol: float = 1e-9,
    max_iter: int = 10000,
) -> MassPerturbationResult:
    """Compare critical-limit quotients of the mass-shifted and pure kernels.

    Runs warm-started continuation down to p = q_alpha + 1e-3 on the CR
    sphere (n = 1) for the green_model kernel with constant mass A0 and
    for the pure singular kernel, and reports both endpoint quotients and
    their difference. A positive mass dominates the pure kernel entrywise,
    so delta > 0 for A0 > 0 and delta = 0 exactly for A0 = 0.
    """
    A0 = float(A0)
    if A0 < 0.0:
        raise ValueError(f"A0 must be nonnegative, got {A0}")
    params = make_params(1, alpha)
    grid = sphere_grid(1, resolution)
    schedule = default_p_schedule(params)
    mass = np.full(len(grid), A0)
    K_mass = assemble_kernel(grid, KernelSpec("green_model", mass=mass, c_w=c_w), params)
    K_pure = assemble_kernel(grid, KernelSpec("pure_singular"), params)
    runs_mass = continuation(K_mass, grid, schedule, tol=tol, max_iter=max_iter)
    runs_pure = continuation(K_pure, grid, schedule, tol=tol, max_iter=max_iter)
    qm = runs_mass[-1].D_estimate
    qp = runs_pure[-1].D_estimate
    return MassPerturbationResult(
        alpha=params.alpha,
        A0=A0,
        c_w=float(c_w),
        resolution=tuple(grid.resolution),
        n_nodes=len(grid),
        p_endpoint=schedule[-1],
        quotient_mass=qm,
        quotient_pure=qp,
        delta=qm - qp,
        all_converged=all(r.converged for r in runs_mass + runs_pure),
    )


def _positive_values(v, N: int, name: str) -> np.ndarray:
    arr = np.asarray(v, dtype=np.float64)
    if arr.shape != (N,):
        raise ValueError(f"{name} must be sampled on all {N} nodes, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise ValueError(f"{name} must be strictly positive and finite")
    return arr


def conformal_covariance_check(
    K: KernelMatrix, grid: QuadratureGrid, phi, u, params: Params
) -> float:
    """Sup-norm defect of the discrete conformal covariance identity.

    The contact-form rescaling by a positive factor phi multiplies the
    exponentiated kernel entries by (phi_i phi_j)^{-(Q-alpha)/(Q-2)} and
    the weights by phi^{2Q/(Q-2)}. Applying the transformed operator to u
    must then agree with

        phi^{-(Q-alpha)/(Q-2)} * (base operator applied to phi^{(Q+alpha)/(Q-2)} u)

    node by node. The identity is algebraic, so the residual is pure
    floating-point noise at any resolution.
    """
    N = len(K)
    if len(grid) != N:
        raise ValueError("grid does not match the kernel")
    Q, alpha = params.Q, params.alpha
    w = grid.weights
    phi_v = _positive_values(phi, N, "phi")
    u_v = np.asarray(u, dtype=np.float64)
    if u_v.shape != (N,):
        raise ValueError(f"u must be sampled on all {N} nodes, got shape {u_v.shape}")
    beta = (Q - alpha) / (Q - 2.0)
    E = np.asarray(K.entries, dtype=np.float64)
    scale = phi_v**-beta
    w_tilde = phi_v ** (2.0 * Q / (Q - 2.0)) * w
    lhs = scale * (E @ (scale * u_v * w_tilde))
    rhs = scale * (E @ (phi_v ** ((Q + alpha) / (Q - 2.0)) * u_v * w))
    return float(np.max(np.abs(lhs - rhs)))


def curvature_equation_residual(
    K: KernelMatrix, grid: QuadratureGrid, phi, params: Params
) -> float:
    """Sup-norm defect of phi^{(Q+alpha)/(Q-alpha)} = (K phi-weighted sum).

    The equation determines phi only up to the constant multiplier that a
    rescaling phi -> lam * phi moves between the two sides; lam is fixed
    by matching the weighted means of both sides before taking the sup.
    For kernels with constant row sums s the constant phi = s^{(Q-alpha)/(2 alpha)}
    solves the equation exactly.
    """
    N = len(K)
    if len(grid) != N:
        raise ValueError("grid does not match the kernel")
    Q, alpha = params.Q, params.alpha
    w = grid.weights
    phi_v = _positive_values(phi, N, "phi")
    s = (Q + alpha) / (Q - alpha)
    E = np.asarray(K.entries, dtype=np.float64)
    applied = E @ (phi_v * w)
    a = float(np.dot(w, phi_v**s))
    b = float(np.dot(w, applied))
    if not (a > 0.0 and b > 0.0):
        raise ValueError("curvature residual needs positive weighted masses on both sides")
    lam = (b / a) ** ((Q - alpha) / (2.0 * alpha))
    phi_hat = lam * phi_v
    return float(np.max(np.abs(phi_hat**s - E @ (phi_hat * w))))
