"""Brute-force real assembly finder used to cross-check the elimination solver.

Damped Newton is started from every point of a (theta1, theta2, sigma) grid
and the converged points are deduplicated.  It shares nothing with the
elimination path except the compatibility equations themselves.
"""
from dataclasses import dataclass

import numpy as np

from .compat import canonical_system


@dataclass(frozen=True)
class OracleGrid:
    n_theta1: int = 24
    n_theta2: int = 24
    n_sigma: int = 21
    sigma_radius: float = None
    max_iter: int = 50
    dedup_radius: float = 1e-6

    def __post_init__(self):
        if min(self.n_theta1, self.n_theta2, self.n_sigma) < 2:
            raise ValueError("grid sample counts must be >= 2")
        if self.sigma_radius is not None and not self.sigma_radius > 0:
            raise ValueError("sigma_radius must be positive")

    def seeds(self, geom):
        rho = self.sigma_radius or geom.length_scale
        t1 = np.linspace(-np.pi, np.pi, self.n_theta1, endpoint=False)
        t2 = np.linspace(-np.pi, np.pi, self.n_theta2, endpoint=False)
        s = np.linspace(-rho, rho, self.n_sigma)
        return np.stack(np.meshgrid(t1, t2, s, indexing="ij"), axis=-1).reshape(-1, 3)


def wrap_angle(theta):
    """Map angles to (-pi, pi]."""
    theta = np.asarray(theta, dtype=float)
    out = np.pi - np.mod(np.pi - theta, 2 * np.pi)
    return out if out.ndim else float(out)


def residual_tolerance(geom):
    return 1e-11 * (1.0 + geom.leg_lengths.max()) ** 2


def damped_newton(geom, x0, max_iter=50, max_halvings=20):
    """Damped Newton on the three compatibility equations for a batch of seeds.

    ``x0`` has shape (n, 3) holding ``(theta1, theta2, sigma)``.  A step is
    halved until the residual norm decreases; a seed that cannot decrease is
    abandoned.  Returns ``(x, converged)``.
    """
    x = np.array(x0, dtype=float, copy=True).reshape(-1, 3)
    n = x.shape[0]
    tol = residual_tolerance(geom)
    converged = np.zeros(n, dtype=bool)
    active = np.ones(n, dtype=bool)

    def norms(y):
        E, _ = canonical_system(y[:, 0], y[:, 1], y[:, 2], geom)
        return np.abs(E).max(axis=1)

    for _ in range(max_iter):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        E, J = canonical_system(x[idx, 0], x[idx, 1], x[idx, 2], geom)
        res = np.abs(E).max(axis=1)
        done = res <= tol
        converged[idx[done]] = True
        active[idx[done]] = False
        idx, E, J, res = idx[~done], E[~done], J[~done], res[~done]
        if idx.size == 0:
            break
        scale = np.prod(np.linalg.norm(J, axis=2), axis=1)
        regular = np.abs(np.linalg.det(J)) > 1e-14 * scale
        active[idx[~regular]] = False
        idx, E, J, res = idx[regular], E[regular], J[regular], res[regular]
        step = np.linalg.solve(J, -E[..., None])[..., 0]

        lam = np.ones(idx.size)
        pending = np.ones(idx.size, dtype=bool)
        for _ in range(max_halvings + 1):
            k = np.flatnonzero(pending)
            if k.size == 0:
                break
            trial = x[idx[k]] + lam[k, None] * step[k]
            ok = norms(trial) < res[k]
            x[idx[k[ok]]] = trial[ok]
            pending[k[ok]] = False
            lam[k[~ok]] *= 0.5
        active[idx[pending]] = False

    idx = np.flatnonzero(active)
    if idx.size:
        converged[idx] = norms(x[idx]) <= tol
    x[:, :2] = wrap_angle(x[:, :2])
    return x, converged


def deduplicate(points, radius):
    """Drop points within ``radius`` (wrapped angles, max-norm) of an earlier one."""
    kept = []
    for p in points[np.argsort(points[:, 2], kind="stable")]:
        if not any(max(abs(wrap_angle(p[0] - q[0])), abs(wrap_angle(p[1] - q[1])),
                       abs(p[2] - q[2])) <= radius for q in kept):
            kept.append(p)
    return kept


def multistart(geom, grid=None):
    """All distinct real solutions reached from the seed grid, sorted by sigma.

    Returns a list of ``(theta1, theta2, sigma)`` tuples, angles in radians.
    """
    grid = grid or OracleGrid()
    x, ok = damped_newton(geom, grid.seeds(geom), grid.max_iter)
    if not ok.any():
        return []
    # one more full step sharpens every converged point to rounding level
    pts = x[ok]
    E, J = canonical_system(pts[:, 0], pts[:, 1], pts[:, 2], geom)
    try:
        pts = pts + np.linalg.solve(J, -E[..., None])[..., 0]
    except np.linalg.LinAlgError:
        pass
    pts[:, :2] = wrap_angle(pts[:, :2])
    # cluster loosely first so that near-identical copies collapse
    kept = deduplicate(pts, max(grid.dedup_radius, 1e-9))
    return [tuple(float(v) for v in p) for p in kept]
