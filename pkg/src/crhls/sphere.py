"""CR sphere S^{2n+1} in C^{n+1}: chordal distance, Cayley transform, extremals.

The Cayley transform is the CR analogue of stereographic projection: it
maps H^n onto the sphere minus the south pole (0, ..., 0, -1), carries the
Heisenberg gauge distance to the sphere distance up to explicit conformal
factors, and has Jacobian 2^{2n+1} / ((1 + |z|^2)^2 + t^2)^{n+1} relative
to Lebesgue and Euclidean surface measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Params
from .heisenberg import HPoint

__all__ = [
    "SpherePoint",
    "sphere_dist",
    "cayley",
    "cayley_inv",
    "cayley_jacobian",
    "sphere_extremal",
]

# below this the inverse Cayley chart's denominator 1 + xi_{n+1} is treated
# as singular (the south pole is not in the chart)
_POLE_TOL = 1e-12


@dataclass(frozen=True)
class SpherePoint:
    """Unit vector in C^{n+1}; renormalized on construction."""

    xi: np.ndarray

    def __post_init__(self) -> None:
        arr = np.atleast_1d(np.asarray(self.xi, dtype=np.complex128))
        if arr.ndim != 1 or arr.size < 2:
            raise ValueError(
                f"xi must be a complex vector with at least 2 components, got shape {arr.shape}"
            )
        norm = float(np.linalg.norm(arr))
        if not norm > 0.0:
            raise ValueError("cannot normalize the zero vector to the sphere")
        object.__setattr__(self, "xi", arr / norm)

    @property
    def n(self) -> int:
        return int(self.xi.size - 1)


def sphere_dist(a: SpherePoint, b: SpherePoint) -> float:
    """Chordal CR distance, d(a, b)^2 = 2 |1 - a.xi . conj(b.xi)|.

    Symmetric, zero on the diagonal, maximal value 2 at antipodes.
    """
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: points live on S^{2*a.n+1} and S^{2*b.n+1}")
    ip = complex(np.vdot(b.xi, a.xi))
    return math.sqrt(2.0 * abs(1.0 - ip))


def cayley(u: HPoint) -> SpherePoint:
    """Cayley transform H^n -> S^{2n+1} minus the south pole.

    C(z, t) = (2z / w, (1 - |z|^2 - it) / w) with w = 1 + |z|^2 + it.
    The image is unit length identically, and the origin maps to the
    north pole (0, ..., 0, 1).
    """
    zz = float(np.real(np.vdot(u.z, u.z)))
    w = complex(1.0 + zz, u.t)
    xi = np.empty(u.n + 1, dtype=np.complex128)
    xi[: u.n] = 2.0 * u.z / w
    xi[u.n] = complex(1.0 - zz, -u.t) / w
    return SpherePoint(xi)


def cayley_inv(p: SpherePoint) -> HPoint:
    """Inverse Cayley transform.

    z_k = xi_k / (1 + xi_{n+1}) and t = Im((1 - xi_{n+1}) / (1 + xi_{n+1})).
    Raises ValueError within 1e-12 of the south pole, where the chart is
    singular.
    """
    last = complex(p.xi[p.n])
    denom = 1.0 + last
    if abs(denom) < _POLE_TOL:
        raise ValueError(
            "inverse Cayley transform is singular at the south pole "
            f"(|1 + xi_{{n+1}}| = {abs(denom):.3e} < {_POLE_TOL:.0e})"
        )
    z = p.xi[: p.n] / denom
    t = ((1.0 - last) / denom).imag
    return HPoint(z, t)


def cayley_jacobian(u: HPoint) -> float:
    """Jacobian of the Cayley transform, 2^{2n+1} / ((1+|z|^2)^2 + t^2)^{n+1}.

    Relative to Lebesgue measure on C^n x R upstream and Euclidean surface
    measure on S^{2n+1} downstream; decays like hnorm(u)^{-2Q}.
    """
    zz = float(np.real(np.vdot(u.z, u.z)))
    return 2.0 ** (2 * u.n + 1) * math.hypot(1.0 + zz, u.t) ** (-2 * (u.n + 1))


def sphere_extremal(p: SpherePoint, pole, params: Params) -> float:
    """Extremal family on the sphere, |1 - conj(pole) . xi|^{-(Q+alpha)/2}.

    The pole ranges over the open unit ball of C^{n+1}; pole = 0 gives the
    constant function 1. Poles approaching the boundary concentrate the
    mass near the boundary point.
    """
    if p.n != params.n:
        raise ValueError(f"point lives on S^{2*p.n+1} but params have n = {params.n}")
    pole_arr = np.atleast_1d(np.asarray(pole, dtype=np.complex128))
    if pole_arr.shape != (params.n + 1,):
        raise ValueError(
            f"pole must be a complex vector of length n + 1 = {params.n + 1}, "
            f"got shape {pole_arr.shape}"
        )
    pole_norm = float(np.linalg.norm(pole_arr))
    if not pole_norm < 1.0:
        raise ValueError(f"pole must lie strictly inside the unit ball, got |pole| = {pole_norm}")
    ip = complex(np.vdot(pole_arr, p.xi))
    return abs(1.0 - ip) ** (-0.5 * (params.Q + params.alpha))
