"""Minkowski-space linear algebra.

R^{d+1} carries the symmetric bilinear form of signature (d, 1),

    <x, y> = x_1 y_1 + ... + x_d y_d - x_{d+1} y_{d+1},

with the future cone F = {x : <x,x> < 0, x_{d+1} > 0} and the unit
hyperboloid H^d = {x in F : <x,x> = -1}.  This module provides the form,
causal classification, hyperboloid normalization, hyperbolic distance,
and space-like support planes together with deterministic orthonormal
frames inside them.  Everything is a pure function on plain numpy
arrays; nothing here mutates shared state.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

# Tolerance for the light-like boundary in causal classification.
LIGHT_TOL = 1e-10
# Tolerance for geometric predicates (unit norms, orthogonality checks).
GEOM_TOL = 1e-9
# arccosh inputs in [1 - ACOSH_CLAMP, 1] clamp to 1; smaller inputs are errors.
ACOSH_CLAMP = 1e-12

from .errors import GeometryError


def form_matrix(dim: int) -> np.ndarray:
    """Matrix J = diag(1, ..., 1, -1) of the bilinear form on R^{dim+1}."""
    J = np.eye(dim + 1)
    J[-1, -1] = -1.0
    return J


def bilinear(x, y) -> float:
    """Evaluate <x, y> = x_1 y_1 + ... + x_d y_d - x_{d+1} y_{d+1}.

    Accepts arrays with matching trailing dimension; broadcasts over
    leading axes.  Raises GeometryError on a dimension mismatch.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape[-1] != y.shape[-1]:
        raise GeometryError(f"dimension mismatch: {x.shape[-1]} vs {y.shape[-1]}")
    s = np.sum(x[..., :-1] * y[..., :-1], axis=-1) - x[..., -1] * y[..., -1]
    return float(s) if np.ndim(s) == 0 else s


def norm2(x):
    """Self-pairing <x, x>."""
    return bilinear(x, x)


class CausalClass(enum.Enum):
    FUTURE_TIMELIKE = "future-timelike"
    PAST_TIMELIKE = "past-timelike"
    FUTURE_LIGHTLIKE = "future-lightlike"
    PAST_LIGHTLIKE = "past-lightlike"
    SPACELIKE = "spacelike"
    ZERO = "zero"


def classify(x, tol: float = LIGHT_TOL) -> CausalClass:
    """Causal class of a vector by the sign of <x,x> and of its last entry.

    The light-like boundary carries tolerance `tol`; the classification
    is invariant under positive rescaling away from that band.
    """
    x = np.asarray(x, dtype=float)
    if np.max(np.abs(x)) <= tol:
        return CausalClass.ZERO
    q = norm2(x)
    scale = float(np.dot(x, x))  # Euclidean, for a scale-aware light band
    future = x[-1] > 0
    if abs(q) <= tol * max(1.0, scale):
        return CausalClass.FUTURE_LIGHTLIKE if future else CausalClass.PAST_LIGHTLIKE
    if q < 0:
        return CausalClass.FUTURE_TIMELIKE if future else CausalClass.PAST_TIMELIKE
    return CausalClass.SPACELIKE


def is_future_timelike(x, tol: float = LIGHT_TOL) -> bool:
    return classify(x, tol) is CausalClass.FUTURE_TIMELIKE


def to_hyperboloid(x) -> np.ndarray:
    """Rescale a future time-like vector onto H^d (so <x,x> = -1).

    Idempotent on unit vectors; raises GeometryError off the future cone.
    """
    x = np.asarray(x, dtype=float)
    q = norm2(x)
    if q >= 0 or x[-1] <= 0:
        raise GeometryError("to_hyperboloid requires a future time-like vector")
    return x / np.sqrt(-q)


def acosh_clamped(c: float) -> float:
    """arccosh with the documented clamp: [1 - ACOSH_CLAMP, 1] maps to 0."""
    if c < 1.0 - ACOSH_CLAMP:
        raise GeometryError(f"arccosh argument {c!r} below the clamp window")
    return float(np.arccosh(max(c, 1.0)))


def _require_unit_future(x, name: str) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x[-1] <= 0 or abs(norm2(x) + 1.0) > GEOM_TOL:
        raise GeometryError(f"{name} must be unit future time-like (on H^d)")
    return x


def hyp_distance(u, v) -> float:
    """Hyperbolic distance between two points of H^d: cosh d = -<u, v>."""
    u = _require_unit_future(u, "u")
    v = _require_unit_future(v, "v")
    return acosh_clamped(-bilinear(u, v))


def spacelike_frame(eta) -> np.ndarray:
    """Deterministic orthonormal space-like frame spanning eta-perp.

    Gram-Schmidt of the ambient standard basis projected onto the
    orthogonal complement of the unit future time-like vector eta,
    skipping near-parallel candidates.  Identical inputs give identical
    frames, so facet coordinates are reproducible across runs.
    Returns a (d, d+1) array of rows e_a with <e_a, e_b> = delta_ab and
    <e_a, eta> = 0.
    """
    eta = _require_unit_future(eta, "eta")
    d = eta.shape[0] - 1
    frame = []
    for basis_vec in np.eye(d + 1):
        # project onto eta-perp: v = e - <e,eta>/<eta,eta> eta = e + <e,eta> eta
        v = basis_vec + bilinear(basis_vec, eta) * eta
        for f in frame:
            v = v - bilinear(v, f) * f
        q = norm2(v)
        if q > 1e-12:
            frame.append(v / np.sqrt(q))
        if len(frame) == d:
            break
    if len(frame) != d:
        raise GeometryError("frame construction failed (degenerate eta)")
    return np.array(frame)


@dataclass(frozen=True)
class SupportPlane:
    """Space-like affine hyperplane {x : <x, normal> = -offset}.

    normal  -- unit future time-like inward normal
    offset  -- support number h > 0
    foot    -- h * normal, the foot of the perpendicular from the origin
    frame   -- (d, d+1) orthonormal space-like basis of the direction space
    """

    normal: np.ndarray
    offset: float
    foot: np.ndarray
    frame: np.ndarray

    @property
    def dim(self) -> int:
        return self.frame.shape[0]

    def point(self, coords) -> np.ndarray:
        """Ambient point foot + sum_a coords_a * frame_a."""
        coords = np.atleast_1d(np.asarray(coords, dtype=float))
        return self.foot + coords @ self.frame

    def points(self, coords) -> np.ndarray:
        """Vectorized `point` for an (m, d) coordinate array."""
        coords = np.asarray(coords, dtype=float)
        return self.foot + coords @ self.frame

    def coords(self, x) -> np.ndarray:
        """Frame coordinates of an ambient point of the plane."""
        rel = np.asarray(x, dtype=float) - self.foot
        return np.array([bilinear(rel, f) for f in self.frame])


def support_plane(eta, h: float) -> SupportPlane:
    """Support plane {x : <x, eta> = -h} with its deterministic frame."""
    eta = _require_unit_future(eta, "eta")
    h = float(h)
    if h <= 0:
        raise GeometryError(f"support number must be positive, got {h!r}")
    return SupportPlane(normal=eta, offset=h, foot=h * eta, frame=spacelike_frame(eta))
