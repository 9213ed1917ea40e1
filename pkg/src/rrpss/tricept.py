"""Tricept forward kinematics through the UP-3(SS) structure.

With the prismatic actuators frozen, the parallel stage of a Tricept is an
RRP-3(SS) structure with ``alpha = beta = 90 deg`` and ``zeta = 0``, base
and platform anchors on equilateral triangles centred on the U-joint.  In the
type-II arrangement the first revolute axis is parallel to a side of the base
triangle; every assembly then has a mirror image in the base plane, so the
degree-28 polynomial only contains even powers of sigma.
"""
from dataclasses import dataclass

import numpy as np

from . import elimination
from .compat import extract_trig_coefficients, rationalize
from .errors import GeometryError, NotSupported, OddCoefficientLeak
from .geometry import MechanismGeometry
from .polyroots import TOL_REAL, all_roots, classify_real, make_rootset
from .solver import SolutionSet, _configuration, _dedupe_sorted, configurations_from_roots

TOL_ODD = 1e-8


def unit_directions(offset_deg=-150.0):
    """In-plane unit vectors at ``i * 120 deg + offset`` for i = 1, 2, 3."""
    ang = np.deg2rad(np.arange(1, 4) * 120.0 + offset_deg)
    return np.column_stack([np.cos(ang), np.sin(ang), np.zeros(3)])


@dataclass(frozen=True)
class _TriceptGeometry:
    base_circumradius: float
    platform_circumradius: float
    leg_lengths: tuple

    _offset_deg = -150.0

    def __post_init__(self):
        if not (self.base_circumradius > 0 and self.platform_circumradius > 0):
            raise GeometryError("circumradii must be positive")
        lengths = tuple(float(x) for x in self.leg_lengths)
        if len(lengths) != 3 or min(lengths) <= 0:
            raise GeometryError("three positive leg lengths are required")
        object.__setattr__(self, "leg_lengths", lengths)

    def to_general(self):
        u = unit_directions(self._offset_deg)
        return MechanismGeometry(np.pi / 2, np.pi / 2, 0.0, self.base_circumradius * u,
                                 self.platform_circumradius * u, self.leg_lengths)


class TriceptType2Geometry(_TriceptGeometry):
    """First revolute axis parallel to the side A_1 A_3 of the base triangle."""


class TriceptType1Geometry(_TriceptGeometry):
    """First revolute axis through the base vertex A_1 (not solvable here)."""

    _offset_deg = -120.0


def to_general(tg):
    return tg.to_general()


def is_type2(geom, tol=1e-12):
    return (abs(geom.alpha - np.pi / 2) < tol and abs(geom.beta - np.pi / 2) < tol
            and abs(geom.zeta) < tol and np.all(np.abs(geom.base_anchors[:, 2]) < tol)
            and np.all(np.abs(geom.platform_anchors[:, 2]) < tol))


def mirror(config, geom):
    """Assembly mirrored in the base plane: ``(sigma, th1, th2) -> (-sigma, -th1, -th2)``."""
    if not is_type2(geom):
        raise GeometryError("mirror symmetry needs a type-II UP-3(SS) geometry")
    theta1, theta2, sigma = config.as_vector()
    return _configuration(geom, -theta1, -theta2, -sigma, refined=config.refined,
                          source=config.source, iterations=config.iterations)


def solve_type2(tg, tol_real=TOL_REAL, refine=True):
    """Forward kinematics of a type-II structure via the degree-14 polynomial in sigma^2."""
    if isinstance(tg, TriceptType1Geometry):
        raise NotSupported("type-I Tricept structures are outside this elimination scheme; "
                           "they need a dedicated 24-solution procedure")
    geom = tg.to_general()
    rc = rationalize(extract_trig_coefficients(geom))
    poly = elimination.det_polynomial(rc)
    h = poly.scaled_coeffs
    odd = np.abs(h[1::2]).max() / np.abs(h).max()
    if odd > TOL_ODD:
        raise OddCoefficientLeak(f"odd coefficients reach {odd:.2e} of the largest one")

    squares = all_roots(poly.even_part(), tol_real).roots
    # polish +sqrt(s) and -sqrt(s) together so the full 28-root set stays consistent
    root = np.sqrt(squares.astype(complex))
    sigmas, polish_iterations = elimination.polish_roots(rc, np.concatenate([root, -root]))
    n = squares.size
    squares = 0.5 * (sigmas[:n] ** 2 + sigmas[n:] ** 2)
    sq_set = make_rootset(squares, tol_real=tol_real)
    s_real, s_pairs = classify_real(sq_set, tol_real)

    real_sigmas = []
    for s in s_real:
        if abs(s) <= tol_real:
            # one search at sigma = 0 finds every assembly there, however many roots coincide
            if 0.0 not in real_sigmas:
                real_sigmas.append(0.0)
        elif s > 0:
            real_sigmas.extend([-np.sqrt(s), np.sqrt(s)])
    configs, records = configurations_from_roots(geom, rc, sorted(real_sigmas), refine)
    diagnostics = {
        "odd_ratio": float(odd),
        "collapse_ratio": poly.diagnostics["collapse_ratio"],
        "holdout_error": poly.diagnostics["holdout_error"],
        "polish_iterations": polish_iterations,
        "roots": records,
    }
    rootset = make_rootset(sigmas, tol_real=tol_real)
    return SolutionSet(geom, rootset.roots, sorted(real_sigmas), _dedupe_sorted(configs),
                       poly, diagnostics, sigma_squared=sq_set.roots)


def solve_tricept(tg, tol_real=TOL_REAL, refine=True):
    return solve_type2(tg, tol_real, refine)


def mirror_pairs(solutions, tol=1e-8):
    """Group configurations into ``(upper, lower)`` mirror pairs.

    ``upper`` has the positive sigma; a configuration without partner (sigma = 0)
    is returned as ``(config, None)``.
    """
    geom = solutions.geometry
    remaining = list(solutions.configurations)
    pairs = []
    while remaining:
        c = remaining.pop()
        image = mirror(c, geom).platform_world
        match = next((k for k, o in enumerate(remaining)
                      if np.abs(o.platform_world - image).max() <= tol), None)
        if match is None:
            pairs.append((c, None))
            continue
        o = remaining.pop(match)
        pairs.append((c, o) if c.sigma > o.sigma else (o, c))
    return sorted(pairs, key=lambda p: abs(p[0].sigma))
