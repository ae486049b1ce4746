"""Subcritical extremal solver.

For a nonnegative kernel K over a weighted grid and an exponent p in the
subcritical window (q_alpha, 2), the maximizer of B(f, f) / lp_norm(f, p)^2
over nonnegative f solves the stationarity equation

    2 D f_i^{p-1} = sum_j (K_ij + K_ji) f_j w_j.

The fixed-point map inverts that relation and renormalizes:

    f  <-  normalize_p( (S f)^{1/(p-1)} ),   S = weighted (K + K^T)/2 action.

Each step maximizes the bilinear form against the previous iterate, so the
quotient never decreases (up to roundoff); this is tracked in the result's
quotient history. Approaching p -> q_alpha from above is done by warm-started
continuation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .core import Params
from .discretization import KernelMatrix, QuadratureGrid, distances_from_node
from .functional import lp_norm

__all__ = [
    "SubcriticalResult",
    "BlowupReport",
    "solve_subcritical",
    "continuation",
    "default_p_schedule",
    "blowup_diagnostic",
    "result_to_dict",
    "save_result_json",
]


@dataclass
class SubcriticalResult:
    """Outcome of one subcritical solve.

    residual is the sup-norm defect of the stationarity equation at the
    returned iterate; quotient_history records the quotient after every
    iteration (nondecreasing up to roundoff). converged = False signals
    max_iter was hit, it is not an error.
    """

    p: float
    D_estimate: float
    f: np.ndarray
    iterations: int
    residual: float
    converged: bool
    quotient_history: np.ndarray


@dataclass
class BlowupReport:
    """Concentration diagnostics of a subcritical maximizer.

    mu_p = f_max^{-(2-p)/alpha} is the predicted concentration scale. The
    profile holds the maximizer rescaled by its peak, sampled at nodes
    within radius_factor * mu_p of the peak node, against the rescaled
    gauge radius; profile value 1 at radius 0 is exact by construction.
    profile_deviation is the sup distance to the model bubble profile
    (1 + s^2)^{-(Q+alpha)/2}, the |z|-axis section of the extremal; flat
    near-constant maximizers therefore score a large deviation.
    """

    mu_p: float
    center_index: int
    radii: np.ndarray
    profile: np.ndarray
    profile_deviation: float


def _check_grid(K: KernelMatrix, grid: QuadratureGrid) -> None:
    if grid is K.grid:
        return
    if len(grid) != len(K.grid) or not np.array_equal(grid.weights, K.grid.weights):
        raise ValueError("grid does not match the kernel's assembly grid")


def solve_subcritical(
    K: KernelMatrix,
    grid: QuadratureGrid,
    p: float,
    tol: float = 1e-9,
    max_iter: int = 10000,
    f0=None,
) -> SubcriticalResult:
    """Run the normalized fixed-point iteration at a subcritical exponent.

    Starts from the normalized constant unless a warm start f0 is given.
    Converged means both the relative quotient change and the stationarity
    defect dropped below tol (the defect scaled by 1 + D). Hitting
    max_iter returns converged = False rather than raising.
    """
    p = float(p)
    q_alpha = K.params.q_alpha
    if not q_alpha < p < 2.0:
        raise ValueError(
            f"p must lie in the subcritical window (q_alpha, 2) = ({q_alpha:.6f}, 2), got p = {p}"
        )
    _check_grid(K, grid)
    if not float(tol) > 0.0:
        raise ValueError(f"tol must be positive, got {tol}")
    if int(max_iter) < 1:
        raise ValueError(f"max_iter must be at least 1, got {max_iter}")
    E = K.entries
    if not np.any(E > 0):
        raise ValueError("kernel has no positive entries, the quotient is identically zero")
    w = grid.weights
    N = len(grid)

    if f0 is None:
        f = np.ones(N)
    else:
        f = np.asarray(f0, dtype=np.float64).copy()
        if f.shape != (N,):
            raise ValueError(f"f0 must have shape ({N},), got {f.shape}")
        if np.any(f < 0.0) or not np.any(f > 0.0):
            raise ValueError("warm start must be nonnegative and not identically zero")
    f = f / lp_norm(f, grid, p)

    def action(fv: np.ndarray) -> np.ndarray:
        v = (fv * w).astype(E.dtype, copy=False)
        return 0.5 * (
            np.asarray(E @ v, dtype=np.float64) + np.asarray(E.T @ v, dtype=np.float64)
        )

    inv_exp = 1.0 / (p - 1.0)
    history: list[float] = []
    iterations = 0
    D_prev = None

    y = action(f)
    D = float(np.dot(f * w, y))
    defect = float(np.max(np.abs(2.0 * D * f ** (p - 1.0) - 2.0 * y)))
    history.append(D)
    converged = False
    stall = 0
    averaged = False
    while True:
        if (
            D_prev is not None
            and abs(D - D_prev) <= tol * max(1.0, abs(D))
            and defect <= tol * (1.0 + D)
        ):
            converged = True
            break
        if iterations >= max_iter:
            break
        D_prev = D
        peak = float(np.max(y))
        if peak <= 0.0:
            raise ValueError("iteration collapsed: the kernel maps the iterate to zero")
        g = (y / peak) ** inv_exp
        g = g / lp_norm(g, grid, p)
        # The raw step is not always ascent for p < 2. First damp
        # geometrically toward the current iterate until the quotient stops
        # decreasing. The quotient is quadratically flat at the maximum, so
        # a residual oscillation can hide below its rounding floor; once the
        # quotient stagnates with the defect still high, switch permanently
        # to fixed averaging, which contracts any neutral oscillation mode.
        if averaged:
            cand = f ** (2.0 / 3.0) * g ** (1.0 / 3.0)
            cand = cand / lp_norm(cand, grid, p)
            y_c = action(cand)
            D_c = float(np.dot(cand * w, y_c))
        else:
            theta = 1.0
            while True:
                if theta == 1.0:
                    cand = g
                else:
                    cand = f ** (1.0 - theta) * g**theta
                    cand = cand / lp_norm(cand, grid, p)
                y_c = action(cand)
                D_c = float(np.dot(cand * w, y_c))
                if D_c >= D or theta < 1e-6:
                    break
                theta *= 0.5
        f, y, D = cand, y_c, D_c
        iterations += 1
        defect = float(np.max(np.abs(2.0 * D * f ** (p - 1.0) - 2.0 * y)))
        history.append(D)
        if abs(D - D_prev) <= tol * max(1.0, abs(D)) and defect > tol * (1.0 + D):
            stall += 1
            if stall >= 25:
                averaged = True
        else:
            stall = 0

    return SubcriticalResult(
        p=p,
        D_estimate=D,
        f=f,
        iterations=iterations,
        residual=defect,
        converged=converged,
        quotient_history=np.asarray(history),
    )


def default_p_schedule(params: Params, endpoint_offset: float = 1e-3) -> list[float]:
    """Decreasing exponent schedule from mid-window down to q_alpha + offset."""
    q = params.q_alpha
    if not 0.0 < endpoint_offset < 2.0 - q:
        raise ValueError(f"endpoint_offset must lie in (0, {2.0 - q:.6f}), got {endpoint_offset}")
    endpoint = q + endpoint_offset
    schedule = [q + (2.0 - q) * fr for fr in (0.7, 0.4, 0.175, 0.04)]
    schedule = [p for p in schedule if p > endpoint * (1.0 + 1e-12)]
    schedule.append(endpoint)
    return schedule


def continuation(
    K: KernelMatrix,
    grid: QuadratureGrid,
    p_schedule,
    tol: float = 1e-9,
    max_iter: int = 10000,
) -> list[SubcriticalResult]:
    """Warm-started solves along a strictly decreasing exponent schedule.

    Each stage starts from the previous maximizer; stages that fail to
    converge still seed the next one, and carry converged = False.
    """
    schedule = [float(p) for p in p_schedule]
    if len(schedule) == 0:
        raise ValueError("p_schedule must not be empty")
    q_alpha = K.params.q_alpha
    for p in schedule:
        if not q_alpha < p < 2.0:
            raise ValueError(
                f"schedule entry {p} outside the subcritical window ({q_alpha:.6f}, 2)"
            )
    if any(b >= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError(f"p_schedule must be strictly decreasing, got {schedule}")
    results: list[SubcriticalResult] = []
    f_warm = None
    for p in schedule:
        res = solve_subcritical(K, grid, p, tol=tol, max_iter=max_iter, f0=f_warm)
        results.append(res)
        f_warm = res.f
    return results


def blowup_diagnostic(
    result: SubcriticalResult,
    grid: QuadratureGrid,
    params: Params,
    radius_factor: float = 8.0,
) -> BlowupReport:
    """Rescale a maximizer around its peak and compare to the model bubble.

    The peak node (lowest index on ties) is the center; mu_p is the
    concentration scale f_max^{-(2-p)/alpha}. Nodes within
    radius_factor * mu_p of the center enter the profile at rescaled
    radius dist/mu_p with value f/f_max, sorted by radius.
    """
    if not float(radius_factor) > 0.0:
        raise ValueError(f"radius_factor must be positive, got {radius_factor}")
    f = np.asarray(result.f, dtype=np.float64)
    if f.shape != (len(grid),):
        raise ValueError(f"result holds {f.shape} values but the grid has {len(grid)} nodes")
    center = int(np.argmax(f))
    f_max = float(f[center])
    if not f_max > 0.0:
        raise ValueError("maximizer peak must be positive")
    mu = f_max ** (-(2.0 - result.p) / params.alpha)
    radii = distances_from_node(grid, center) / mu
    mask = radii <= radius_factor
    order = np.argsort(radii[mask], kind="stable")
    rad = radii[mask][order]
    prof = (f[mask] / f_max)[order]
    model = (1.0 + rad**2) ** (-0.5 * (params.Q + params.alpha))
    return BlowupReport(
        mu_p=float(mu),
        center_index=center,
        radii=rad,
        profile=prof,
        profile_deviation=float(np.max(np.abs(prof - model))),
    )


def result_to_dict(result: SubcriticalResult) -> dict:
    """Plain-types view of a result, ready for JSON emission."""
    return {
        "p": float(result.p),
        "D": float(result.D_estimate),
        "residual": float(result.residual),
        "iterations": int(result.iterations),
        "converged": bool(result.converged),
        "f": [float(v) for v in result.f],
    }


def save_result_json(result: SubcriticalResult, path) -> None:
    with open(path, "w") as fh:
        fh.write(json.dumps(result_to_dict(result), indent=2, sort_keys=True) + "\n")
