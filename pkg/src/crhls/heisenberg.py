"""Heisenberg group H^n: group law, gauge norm, dilations, model extremal.

Points are pairs (z, t) with z in C^n and t real. The group product twists
the t component by the symplectic form 2 Im(z . conj(z')), the anisotropic
dilations scale z linearly and t quadratically, and the gauge norm
|(z, t)| = (|z|^4 + t^2)^{1/4} is homogeneous of degree one under them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Params

__all__ = [
    "HPoint",
    "group_mul",
    "group_inv",
    "hnorm",
    "hdist",
    "dilate",
    "extremal_H",
    "extremal_family",
]


def _as_complex_vector(z) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError(f"z must be a nonempty 1-d complex vector, got shape {arr.shape}")
    return arr


@dataclass(frozen=True)
class HPoint:
    """Point (z, t) of H^n; z is a length-n complex vector, t is real."""

    z: np.ndarray
    t: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", _as_complex_vector(self.z))
        object.__setattr__(self, "t", float(self.t))

    @property
    def n(self) -> int:
        return int(self.z.size)


def _check_same_n(u: HPoint, v: HPoint) -> None:
    if u.n != v.n:
        raise ValueError(f"dimension mismatch: points live on H^{u.n} and H^{v.n}")


def group_mul(u: HPoint, v: HPoint) -> HPoint:
    """Group product (z, t)(z', t') = (z + z', t + t' + 2 Im(z . conj(z')))."""
    _check_same_n(u, v)
    # vdot conjugates its first argument, so this is sum_k u.z[k] * conj(v.z[k])
    twist = 2.0 * float(np.imag(np.vdot(v.z, u.z)))
    return HPoint(u.z + v.z, u.t + v.t + twist)


def group_inv(u: HPoint) -> HPoint:
    """Group inverse (-z, -t); group_mul(u, group_inv(u)) is the identity."""
    return HPoint(-u.z, -u.t)


def hnorm(u: HPoint) -> float:
    """Gauge norm (|z|^4 + t^2)^{1/4}."""
    zz = float(np.real(np.vdot(u.z, u.z)))
    return math.sqrt(math.hypot(zz, u.t))


def hdist(u: HPoint, v: HPoint) -> float:
    """Left-invariant gauge distance |v^{-1} u|.

    Left invariance hdist(wu, wv) = hdist(u, v) is exact by construction.
    No symmetry in (u, v) is asserted.
    """
    _check_same_n(u, v)
    return hnorm(group_mul(group_inv(v), u))


def dilate(r: float, u: HPoint) -> HPoint:
    """Anisotropic dilation (z, t) -> (r z, r^2 t) for r > 0."""
    r = float(r)
    if not r > 0.0:
        raise ValueError(f"dilation factor must be positive, got {r}")
    return HPoint(r * u.z, (r * r) * u.t)


def extremal_H(u: HPoint, params: Params) -> float:
    """Model extremal ((1 + |z|^2)^2 + t^2)^{-(Q+alpha)/4}.

    Peak value 1 at the group identity, strictly decreasing along the |z|
    and |t| axes, decaying like hnorm(u)^{-(Q+alpha)} at infinity.
    """
    if u.n != params.n:
        raise ValueError(f"point lives on H^{u.n} but params have n = {params.n}")
    zz = float(np.real(np.vdot(u.z, u.z)))
    return math.hypot(1.0 + zz, u.t) ** (-0.5 * (params.Q + params.alpha))


def extremal_family(eps: float, u: HPoint, params: Params) -> float:
    """Concentrating family eps^{-(Q+alpha)/2} * extremal_H(dilate(1/eps, u)).

    Normalized so that every member has the same L^{q_alpha} mass as the
    eps = 1 profile; mass concentrates at scale eps as eps -> 0.
    """
    eps = float(eps)
    if not eps > 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    scale = eps ** (-0.5 * (params.Q + params.alpha))
    return scale * extremal_H(dilate(1.0 / eps, u), params)
