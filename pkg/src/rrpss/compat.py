"""Leg-length compatibility equations and their polynomial coefficients.

Each leg contributes ``E_j(theta1, theta2, sigma) = 0`` with

    E_j = a_j' R1 R2 (sigma m + b_j) + zeta a_j' R1 k - zeta k' R2 (sigma m + b_j)
          - sigma m' b_j - (sigma^2 + |a_j|^2 + |b_j|^2 + zeta^2 - L_j^2) / 2

which equals ``-(|B_j - A_j|^2 - L_j^2) / 2``.  The solver works on the
reduced set ``{E_1, E_2 - E_1, E_3 - E_1}`` so that sigma^2 only survives in
the first equation.
"""
from dataclasses import dataclass

import numpy as np

from .geometry import (K_AXIS, axis_vectors, leg_vectors, rodrigues,
                       rodrigues_derivative, rotation_basis)

# Trig monomial index k <-> (sin exponent, cos exponent).
TRIG_MONOMIALS = ((0, 0), (1, 0), (0, 1))

# Row k: the factor (1 + t^2) * {1, sin, cos} as coefficients of 1, t, t^2.
_HALF_ANGLE = np.array([[1.0, 0.0, 1.0],
                        [0.0, 2.0, 0.0],
                        [1.0, 0.0, -1.0]])


def _leg_index(j):
    if j not in (1, 2, 3):
        raise ValueError(f"leg index must be 1, 2 or 3, got {j!r}")
    return j - 1


def residual_squared(pose, geom, j):
    """|B_j - A_j|^2 - L_j^2 for leg ``j`` (1-based)."""
    i = _leg_index(j)
    d = leg_vectors(pose, geom)[i]
    return float(d @ d - geom.leg_lengths[i] ** 2)


def canonical_system(theta1, theta2, sigma, geom):
    """Evaluate all three ``E_j`` and their Jacobian.

    Inputs broadcast against each other.  Returns ``(E, J)`` with shapes
    ``S + (3,)`` and ``S + (3, 3)`` where ``J[..., j, :]`` is the gradient of
    ``E_j`` with respect to ``(theta1, theta2, sigma)``.
    """
    theta1, theta2, sigma = np.broadcast_arrays(
        np.asarray(theta1, float), np.asarray(theta2, float), np.asarray(sigma, float))
    n1, n2, m = axis_vectors(geom)
    a, b, L = geom.base_anchors, geom.platform_anchors, geom.leg_lengths
    zeta = geom.zeta
    R1, dR1 = rodrigues(n1, theta1), rodrigues_derivative(n1, theta1)
    R2, dR2 = rodrigues(n2, theta2), rodrigues_derivative(n2, theta2)
    s = sigma[..., None, None]

    v = s * m + b                                   # S + (leg, 3)
    w = np.einsum("...xy,...jy->...jx", R2, v)      # R2 v_j
    dw = np.einsum("...xy,...jy->...jx", dR2, v)
    R1k, dR1k = R1 @ K_AXIS, dR1 @ K_AXIS
    R2m = R2 @ m

    a_R1w = np.einsum("jx,...xy,...jy->...j", a, R1, w)
    const = 0.5 * (np.sum(a * a, axis=1) + np.sum(b * b, axis=1) + zeta ** 2 - L ** 2)
    E = (a_R1w + zeta * (a @ R1k[..., None])[..., 0] - zeta * w[..., 2]
         - sigma[..., None] * (b @ m) - 0.5 * sigma[..., None] ** 2 - const)

    J = np.empty(E.shape + (3,))
    J[..., 0] = np.einsum("jx,...xy,...jy->...j", a, dR1, w) + zeta * np.einsum("jx,...x->...j", a, dR1k)
    J[..., 1] = np.einsum("jx,...xy,...jy->...j", a, R1, dw) - zeta * dw[..., 2]
    R1R2m = np.einsum("...xy,...y->...x", R1, R2m)
    J[..., 2] = (np.einsum("jx,...x->...j", a, R1R2m) - zeta * R2m[..., 2:3]
                 - (b @ m) - sigma[..., None])
    return E, J


def residual_canonical(pose, geom, j):
    """``E_j`` at ``pose``; equals ``-residual_squared / 2``."""
    i = _leg_index(j)
    E, _ = canonical_system(pose.theta1, pose.theta2, pose.sigma, geom)
    return float(E[i])


def reduce_system(E):
    """Map ``(E1, E2, E3)`` on the last axis to ``(E1, E2 - E1, E3 - E1)``."""
    E = np.asarray(E)
    out = E.copy()
    out[..., 1:] -= E[..., :1]
    return out


@dataclass(frozen=True)
class TrigCoefficients:
    """Coefficients ``e[j, k1, k2, w]`` of the reduced equations.

    Equation ``j`` (0-based) reads
    ``sum e[j, k1, k2, w] phi_k1(theta1) phi_k2(theta2) sigma^w = 0`` with
    ``phi = (1, sin, cos)``.  ``node_radius`` is the sigma scale of the
    geometry the coefficients came from.
    """

    values: np.ndarray
    node_radius: float = 1.0

    def e(self, j, p, q, u, v):
        """sigma-coefficients of ``s1^p c1^q s2^u c2^v`` in equation ``j`` (1-based)."""
        return self.values[_leg_index(j), TRIG_MONOMIALS.index((p, q)), TRIG_MONOMIALS.index((u, v))]

    def evaluate(self, theta1, theta2, sigma):
        phi1 = np.array([1.0, np.sin(theta1), np.cos(theta1)])
        phi2 = np.array([1.0, np.sin(theta2), np.cos(theta2)])
        powers = np.array([1.0, sigma, sigma * sigma])
        return np.einsum("jklw,k,l,w->j", self.values, phi1, phi2, powers)


@dataclass(frozen=True)
class RationalizedCoefficients:
    """Coefficients ``f[j, p, q, w]`` of ``sum f t1^p t2^q sigma^w = 0``.

    ``t_i = tan(theta_i / 2)``; every equation was multiplied by
    ``(1 + t1^2)(1 + t2^2)``.  ``w`` runs to 2 but only equation 0 uses it.
    """

    values: np.ndarray
    node_radius: float = 1.0

    def degree(self, j):
        """sigma-degree bound of equation ``j`` (1-based)."""
        return 2 if _leg_index(j) == 0 else 1

    def at(self, sigma):
        """f_{jpq}(sigma) as a (3, 3, 3) array; ``sigma`` may be complex or an array."""
        sigma = np.asarray(sigma)
        powers = np.stack([np.ones_like(sigma), sigma, sigma * sigma], axis=-1)
        return np.einsum("jpqw,...w->...jpq", self.values, powers)

    def derivative_at(self, sigma):
        """d f_{jpq} / d sigma."""
        sigma = np.asarray(sigma)
        powers = np.stack([np.ones_like(sigma), 2 * sigma], axis=-1)
        return np.einsum("jpqw,...w->...jpq", self.values[..., 1:], powers)

    def evaluate(self, t1, t2, sigma):
        f = self.at(sigma)
        return np.einsum("jpq,p,q->j", f, np.array([1, t1, t1 * t1]), np.array([1, t2, t2 * t2]))

    def rescaled(self, scale):
        """Coefficients for ``sigma' = sigma / scale`` with all lengths divided by ``scale``."""
        factors = scale ** (np.arange(3) - 2.0)
        return RationalizedCoefficients(self.values * factors, self.node_radius / scale)


def extract_trig_coefficients(geom):
    """Closed-form coefficients of the reduced trigonometric system."""
    n1, n2, m = axis_vectors(geom)
    P1, P2 = rotation_basis(n1), rotation_basis(n2)
    R12 = np.einsum("kxy,lyz->klxz", P1, P2)
    zeta = geom.zeta
    e = np.zeros((3, 3, 3, 3))
    for j in range(3):
        a, b, L = geom.base_anchors[j], geom.platform_anchors[j], geom.leg_lengths[j]
        e[j, :, :, 1] += np.einsum("x,klxz,z->kl", a, R12, m)
        e[j, :, :, 0] += np.einsum("x,klxz,z->kl", a, R12, b)
        e[j, :, 0, 0] += zeta * np.einsum("x,kxz,z->k", a, P1, K_AXIS)
        e[j, 0, :, 1] -= zeta * np.einsum("lxz,z->lx", P2, m)[:, 2]
        e[j, 0, :, 0] -= zeta * np.einsum("lxz,z->lx", P2, b)[:, 2]
        e[j, 0, 0, 1] -= m @ b
        e[j, 0, 0, 2] -= 0.5
        e[j, 0, 0, 0] -= 0.5 * (a @ a + b @ b + zeta ** 2 - L ** 2)
    return TrigCoefficients(reduce_system(e.transpose(1, 2, 3, 0)).transpose(3, 0, 1, 2),
                            geom.length_scale)


def rationalize(tc):
    """Apply the tangent half-angle substitution and clear denominators."""
    f = np.einsum("kp,lq,jklw->jpqw", _HALF_ANGLE, _HALF_ANGLE, tc.values)
    return RationalizedCoefficients(f, tc.node_radius)
