"""Shared builders and comparison helpers for the test suite."""
import numpy as np
from scipy.optimize import linear_sum_assignment

from rrpss import MechanismGeometry, PoseParams, TriceptType2Geometry, platform_points
from reference_values import EXAMPLE1, EXAMPLE2


def example1():
    g = EXAMPLE1
    return MechanismGeometry.from_degrees(g["alpha_deg"], g["beta_deg"], g["zeta"],
                                          g["A"], g["B"], g["L"])


def example2():
    return TriceptType2Geometry(EXAMPLE2["r_base"], EXAMPLE2["r_platform"], tuple(EXAMPLE2["L"]))


def random_pose(rng, sigma_range=2.0):
    return PoseParams(rng.uniform(-np.pi, np.pi), rng.uniform(-np.pi, np.pi),
                      rng.uniform(-sigma_range, sigma_range))


def random_geometry(rng, feasible=False):
    """Anchors and zeta uniform in [-2, 2], alpha and beta uniform angles.

    Infeasible-allowed instances draw L in [1, 6]; feasible ones take L from
    a random pose so that at least one real assembly exists.
    """
    A = rng.uniform(-2, 2, (3, 3))
    B = rng.uniform(-2, 2, (3, 3))
    alpha, beta = rng.uniform(-np.pi, np.pi, 2)
    zeta = rng.uniform(-2, 2)
    if not feasible:
        return MechanismGeometry(alpha, beta, zeta, A, B, rng.uniform(1, 6, 3))
    probe = MechanismGeometry(alpha, beta, zeta, A, B, [1.0, 1.0, 1.0])
    L = np.linalg.norm(platform_points(random_pose(rng), probe) - A, axis=1)
    return MechanismGeometry(alpha, beta, zeta, A, B, L)


def random_type2(rng):
    return TriceptType2Geometry(rng.uniform(1, 6), rng.uniform(1, 6), tuple(rng.uniform(1, 12, 3)))


def match_complex(found, expected):
    """Optimal one-to-one matching; returns the worst per-part error."""
    found, expected = np.asarray(found, complex), np.asarray(expected, complex)
    assert found.size == expected.size
    diff = found[:, None] - expected[None, :]
    cost = np.maximum(np.abs(diff.real), np.abs(diff.imag))
    r, c = linear_sum_assignment(cost)
    return float(cost[r, c].max())


def wrapped(d):
    return np.abs((np.asarray(d) + np.pi) % (2 * np.pi) - np.pi)


def pose_distance(x, y):
    """max of wrapped angle difference and sigma difference between (th1, th2, sigma) triples."""
    x, y = np.asarray(x, float), np.asarray(y, float)
    return max(wrapped(x[0] - y[0]), wrapped(x[1] - y[1]), abs(x[2] - y[2]))


def unmatched(points, others, tol):
    """Members of ``points`` with no partner in ``others`` within ``tol``."""
    return [p for p in points if not any(pose_distance(p, o) <= tol for o in others)]


def table_row_errors(config, row):
    """(sigma error, worst angle error in degrees, worst coordinate error) against a reference row."""
    sigma, th1, th2, *points = row
    d_sigma = abs(config.sigma - sigma)
    d_angle = max(abs(config.theta1_deg - th1), abs(config.theta2_deg - th2))
    d_point = float(np.abs(config.platform_world - np.array(points)).max())
    return d_sigma, d_angle, d_point
