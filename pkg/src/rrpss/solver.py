"""Full position analysis: elimination, root finding and back-substitution."""
from dataclasses import dataclass, field

import numpy as np

from . import elimination
from .compat import canonical_system, extract_trig_coefficients, rationalize
from .errors import AmbiguousNullSpace, RefinementDiverged, RootAtInfinity
from .geometry import PoseParams, platform_points, point_Q, pose_rotation
from .oracle import damped_newton, deduplicate, wrap_angle
from .polyroots import TOL_REAL, all_roots, classify_real, make_rootset

INFINITY_TOL = 1e-8
GAP_TOL = 1e-6
# Newton converges only linearly at a singular assembly, so copies of one
# solution spread well beyond rounding level
FALLBACK_CLUSTER = 1e-4


@dataclass(frozen=True)
class AssemblyConfiguration:
    pose: PoseParams
    t1: float
    t2: float
    rotation: np.ndarray
    q_point: np.ndarray
    platform_world: np.ndarray
    residual_max: float
    refined: bool = False
    source: str = "elimination"
    iterations: int = 0

    @property
    def sigma(self):
        return self.pose.sigma

    @property
    def theta1_deg(self):
        return float(np.rad2deg(self.pose.theta1))

    @property
    def theta2_deg(self):
        return float(np.rad2deg(self.pose.theta2))

    def as_vector(self):
        return np.array([self.pose.theta1, self.pose.theta2, self.pose.sigma])


@dataclass(frozen=True)
class SolutionSet:
    geometry: object
    roots: np.ndarray
    real_roots: list
    configurations: tuple
    polynomial: elimination.UnivariatePolynomial
    diagnostics: dict = field(default_factory=dict, compare=False)
    sigma_squared: np.ndarray = None

    def __len__(self):
        return len(self.configurations)

    def __iter__(self):
        return iter(self.configurations)


def leg_residuals(pose, geom):
    """``|B_j - A_j| - L_j`` for the three legs."""
    d = platform_points(pose, geom) - geom.base_anchors
    return np.linalg.norm(d, axis=1) - geom.leg_lengths


def back_substitute(rc, sigma, full_output=False):
    """Half-angle tangents ``(t1, t2)`` of the configuration at root ``sigma``.

    The null vector of ``M(sigma)`` is scaled to a unit first component; its
    2nd and 7th entries are ``t1`` and ``t2``.  With ``full_output`` an info
    dict (singular values, monomial-consistency score) is also returned.
    """
    scale = rc.node_radius / 2.0
    M = elimination.build_M(rc.rescaled(scale), sigma / scale)
    if np.isrealobj(M) or np.all(M.imag == 0):
        M = M.real
    _, sv, vh = np.linalg.svd(M)
    v = vh[-1].conj()
    info = {"singular_values": sv, "gap": (sv[-2] - sv[-1]) / sv[0]}
    if abs(v[0]) <= INFINITY_TOL * np.linalg.norm(v):
        raise RootAtInfinity(f"null vector at sigma={sigma} has vanishing first component")
    if info["gap"] < GAP_TOL:
        raise AmbiguousNullSpace(f"M(sigma) has a multi-dimensional null space at sigma={sigma}")
    tau = v / v[0]
    t1, t2 = tau[elimination.column_index(1, 0)], tau[elimination.column_index(0, 1)]
    if np.isrealobj(M):
        t1, t2 = float(t1.real), float(t2.real)
    expected = elimination.monomial_vector(t1, t2)
    info["consistency"] = float(np.max(np.abs(tau - expected) / np.maximum(1.0, np.abs(expected))))
    if full_output:
        return t1, t2, info
    return t1, t2


def _configuration(geom, theta1, theta2, sigma, **kw):
    pose = PoseParams(wrap_angle(theta1), wrap_angle(theta2), sigma)
    return AssemblyConfiguration(
        pose=pose,
        t1=float(np.tan(pose.theta1 / 2)),
        t2=float(np.tan(pose.theta2 / 2)),
        rotation=pose_rotation(pose, geom),
        q_point=point_Q(pose, geom),
        platform_world=platform_points(pose, geom),
        residual_max=float(np.abs(leg_residuals(pose, geom)).max()),
        **kw,
    )


def assemble(geom, sigma, t1, t2, source="elimination"):
    """Configuration from a root and its half-angle tangents."""
    return _configuration(geom, 2 * np.arctan(t1), 2 * np.arctan(t2), float(sigma), source=source)


def refine(config, geom, max_iter=50):
    """Newton polish of a configuration on the compatibility equations."""
    scale = 1.0 + geom.leg_lengths.max()
    if not config.residual_max < 0.1 * scale:
        raise ValueError("configuration is too far from an assembly to refine")
    target = 1e-12 * scale ** 2
    x = config.as_vector()
    residual = config.residual_max
    growth = 0
    it = 0
    while residual > target and it < max_iter:
        E, J = canonical_system(x[0], x[1], x[2], geom)
        x = x + np.linalg.solve(J, -E)
        it += 1
        new = float(np.abs(leg_residuals(PoseParams(*x), geom)).max())
        growth = growth + 1 if new > residual else 0
        if growth >= 3:
            raise RefinementDiverged(f"residual grew for 3 steps (now {new:.2e})")
        residual = new
    # one extra step takes the pose from the stopping threshold to rounding level
    E, J = canonical_system(x[0], x[1], x[2], geom)
    trial = x + np.linalg.solve(J, -E)
    if np.abs(leg_residuals(PoseParams(*trial), geom)).max() < residual:
        x = trial
    return _configuration(geom, *x, refined=True, source=config.source, iterations=it)


def _local_search(geom, sigma, seeds_theta):
    """Newton from angle seeds at fixed starting sigma; used where the tangents blow up."""
    seeds = np.column_stack([seeds_theta, np.full(len(seeds_theta), sigma)])
    x, ok = damped_newton(geom, seeds)
    near = x[ok & (np.abs(x[:, 2] - sigma) <= 1e-4 * (1 + abs(sigma)))]
    return deduplicate(near, FALLBACK_CLUSTER) if near.size else []


def _pi_seeds(n=12):
    grid = np.linspace(-np.pi, np.pi, n, endpoint=False)
    return np.array([(np.pi, g) for g in grid] + [(g, np.pi) for g in grid])


def _grid_seeds(n=12):
    grid = np.linspace(-np.pi, np.pi, n, endpoint=False)
    return np.array([(a, b) for a in grid for b in grid])


def configurations_from_roots(geom, rc, sigmas, refine_configs=True):
    """Back-substitute, assemble and refine one configuration per real root."""
    configs, records = [], []
    for sigma in sigmas:
        record = {"sigma": float(sigma)}
        found = []
        try:
            t1, t2, info = back_substitute(rc, sigma, full_output=True)
            record.update(status="ok", gap=float(info["gap"]), consistency=info["consistency"])
            found.append(assemble(geom, sigma, t1, t2))
        except RootAtInfinity:
            record["status"] = "root_at_infinity"
            for p in _local_search(geom, sigma, _pi_seeds()):
                found.append(_configuration(geom, *p, source="fallback"))
        except AmbiguousNullSpace:
            record["status"] = "ambiguous_null_space"
            for p in _local_search(geom, sigma, _grid_seeds()):
                found.append(_configuration(geom, *p, source="fallback"))
        if refine_configs:
            polished = []
            for c in found:
                try:
                    polished.append(refine(c, geom))
                except (ValueError, RefinementDiverged, np.linalg.LinAlgError) as exc:
                    record["refine_error"] = str(exc)
                    polished.append(c)
            found = polished
        record["count"] = len(found)
        configs.extend(found)
        records.append(record)
    return configs, records


def _dedupe_sorted(configs):
    configs = sorted(configs, key=lambda c: (c.sigma, c.pose.theta1, c.pose.theta2))
    out = []
    for c in configs:
        if not any(np.max(np.abs(wrap_angle(c.as_vector()[:2] - o.as_vector()[:2]))) < 1e-8
                   and abs(c.sigma - o.sigma) < 1e-8 for o in out):
            out.append(c)
    return tuple(out)


def solve(geom, tol_real=TOL_REAL, refine=True, want_complex=False):
    """All assembly configurations of ``geom``.

    Returns a :class:`SolutionSet` with every complex sigma-root and the
    real configurations sorted by sigma, then theta1, then theta2.
    """
    rc = rationalize(extract_trig_coefficients(geom))
    poly = elimination.det_polynomial(rc)
    rootset = all_roots(poly, tol_real)
    roots, polish_iterations = elimination.polish_roots(rc, rootset.roots)
    rootset = make_rootset(roots, rootset.residuals, tol_real, rootset.method)
    reals, pairs = classify_real(rootset, tol_real)
    configs, records = configurations_from_roots(geom, rc, reals, refine)
    diagnostics = {
        "collapse_ratio": poly.diagnostics["collapse_ratio"],
        "holdout_error": poly.diagnostics["holdout_error"],
        "imag_ratio": poly.diagnostics["imag_ratio"],
        "root_method": rootset.method,
        "polish_iterations": polish_iterations,
        "near_multiple": rootset.near_multiple,
        "roots": records,
    }
    if want_complex:
        tangents = []
        for r, _ in pairs:
            try:
                tangents.append((r,) + back_substitute(rc, r))
            except (RootAtInfinity, AmbiguousNullSpace):
                tangents.append((r, None, None))
        diagnostics["complex_tangents"] = tangents
    return SolutionSet(geom, rootset.roots, reals, _dedupe_sorted(configs), poly, diagnostics)
