"""RRP-3(SS) mechanism description and the pose model of its RRP open chain.

The base frame has its x axis on the first revolute axis.  At the home
configuration the common perpendicular of the two revolute axes lies on the
z axis, the second revolute axis ``n2`` is obtained by rotating ``n1`` by
``alpha`` about z, and the sliding direction ``m`` makes the angle ``beta``
with ``n2`` in the plane spanned by ``n2`` and z.  The platform frame is
parallel to the base frame at home, with origin at the point Q on the second
revolute axis, ``zeta`` above the base origin.  ``sigma = 0`` is the home
position of the prismatic joint.
"""
from dataclasses import dataclass

import numpy as np

from .errors import GeometryError

K_AXIS = np.array([0.0, 0.0, 1.0])


def _frozen(values, shape, name):
    arr = np.array(values, dtype=float)
    if arr.shape != shape:
        raise GeometryError(f"{name} must have shape {shape}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise GeometryError(f"{name} must be finite")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class MechanismGeometry:
    """Fixed parameters of one RRP-3(SS) structure.

    Angles are in radians.  ``base_anchors[j]`` holds the base-frame
    coordinates of A_{j+1}; ``platform_anchors[j]`` holds the platform-frame
    coordinates of B_{j+1}.
    """

    alpha: float
    beta: float
    zeta: float
    base_anchors: np.ndarray
    platform_anchors: np.ndarray
    leg_lengths: np.ndarray

    def __post_init__(self):
        for name in ("alpha", "beta", "zeta"):
            value = float(getattr(self, name))
            if not np.isfinite(value):
                raise GeometryError(f"{name} must be finite")
            object.__setattr__(self, name, value)
        if not -np.pi < self.beta <= np.pi:
            raise GeometryError("beta must lie in (-pi, pi]")
        object.__setattr__(self, "base_anchors", _frozen(self.base_anchors, (3, 3), "base_anchors"))
        object.__setattr__(
            self, "platform_anchors", _frozen(self.platform_anchors, (3, 3), "platform_anchors")
        )
        lengths = _frozen(self.leg_lengths, (3,), "leg_lengths")
        if np.any(lengths <= 0):
            raise GeometryError("leg lengths must be positive")
        object.__setattr__(self, "leg_lengths", lengths)

    @classmethod
    def from_degrees(cls, alpha_deg, beta_deg, zeta, base_anchors, platform_anchors, leg_lengths):
        return cls(np.deg2rad(alpha_deg), np.deg2rad(beta_deg), zeta,
                   base_anchors, platform_anchors, leg_lengths)

    @property
    def length_scale(self):
        """Radius bounding the physically plausible |sigma|."""
        return (1.0 + self.leg_lengths.max() + abs(self.zeta)
                + np.linalg.norm(self.base_anchors, axis=1).max()
                + np.linalg.norm(self.platform_anchors, axis=1).max())

    def translated_base(self, offset):
        return MechanismGeometry(self.alpha, self.beta, self.zeta,
                                 self.base_anchors + np.asarray(offset, dtype=float),
                                 self.platform_anchors, self.leg_lengths)


@dataclass(frozen=True)
class PoseParams:
    """Joint variables of the RRP chain: two revolute angles (rad) and a slide."""

    theta1: float
    theta2: float
    sigma: float

    def __post_init__(self):
        for name in ("theta1", "theta2", "sigma"):
            value = float(getattr(self, name))
            if not np.isfinite(value):
                raise GeometryError(f"{name} must be finite")
            object.__setattr__(self, name, value)

    @classmethod
    def from_degrees(cls, theta1_deg, theta2_deg, sigma):
        return cls(np.deg2rad(theta1_deg), np.deg2rad(theta2_deg), sigma)


def axis_vectors(geom):
    """Return ``(n1, n2, m)`` as unit 3-vectors."""
    ca, sa = np.cos(geom.alpha), np.sin(geom.alpha)
    cb, sb = np.cos(geom.beta), np.sin(geom.beta)
    n1 = np.array([1.0, 0.0, 0.0])
    n2 = np.array([ca, sa, 0.0])
    m = np.array([ca * cb, sa * cb, sb])
    return n1, n2, m


def skew(n):
    return np.array([[0.0, -n[2], n[1]],
                     [n[2], 0.0, -n[0]],
                     [-n[1], n[0], 0.0]])


def rotation_basis(n):
    """Split a rotation about unit axis ``n`` as ``P + sin(t) S + cos(t) C``.

    Returns the stacked array ``[P, S, C]`` of shape (3, 3, 3).
    """
    n = np.asarray(n, dtype=float)
    P = np.outer(n, n)
    return np.array([P, skew(n), np.eye(3) - P])


def _check_unit(n):
    n = np.asarray(n, dtype=float)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > 1e-12:
        raise GeometryError("rotation axis must be a unit 3-vector")
    return n


def rodrigues(n, theta):
    """Rotation matrix for angle ``theta`` about unit axis ``n``.

    ``theta`` may be an array, in which case the result has shape
    ``theta.shape + (3, 3)``.
    """
    basis = rotation_basis(_check_unit(n))
    theta = np.asarray(theta, dtype=float)
    s, c = np.sin(theta)[..., None, None], np.cos(theta)[..., None, None]
    return basis[0] + s * basis[1] + c * basis[2]


def rodrigues_derivative(n, theta):
    """Derivative of :func:`rodrigues` with respect to the angle."""
    basis = rotation_basis(_check_unit(n))
    theta = np.asarray(theta, dtype=float)
    s, c = np.sin(theta)[..., None, None], np.cos(theta)[..., None, None]
    return c * basis[1] - s * basis[2]


def pose_rotations(pose, geom):
    n1, n2, _ = axis_vectors(geom)
    return rodrigues(n1, pose.theta1), rodrigues(n2, pose.theta2)


def pose_rotation(pose, geom):
    """Orientation of the platform frame relative to the base frame."""
    R1, R2 = pose_rotations(pose, geom)
    return R1 @ R2


def point_Q(pose, geom):
    R1, R2 = pose_rotations(pose, geom)
    _, _, m = axis_vectors(geom)
    return geom.zeta * (R1 @ K_AXIS) + pose.sigma * (R1 @ (R2 @ m))


def platform_points(pose, geom):
    """Base-frame coordinates of B_1..B_3 as a (3, 3) array (one row per anchor)."""
    R1, R2 = pose_rotations(pose, geom)
    _, _, m = axis_vectors(geom)
    local = pose.sigma * m + geom.platform_anchors
    return geom.zeta * (R1 @ K_AXIS) + local @ (R1 @ R2).T


def leg_vectors(pose, geom):
    """B_j - A_j for each leg, one row per leg."""
    return platform_points(pose, geom) - geom.base_anchors
