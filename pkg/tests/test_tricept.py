import numpy as np
import pytest

from rrpss import (GeometryError, NotSupported, OddCoefficientLeak, PoseParams,
                   TriceptType1Geometry, TriceptType2Geometry, mirror, mirror_pairs,
                   platform_points, solve, solve_type2)
from rrpss import tricept
from rrpss.solver import leg_residuals
from rrpss.tricept import is_type2, unit_directions
from reference_values import EX2_UPPER_CONFIGS, mirrored, example2_squares, example2_configs
from support import example1, example2, match_complex, random_type2, table_row_errors


@pytest.fixture(scope="module")
def sol2():
    return solve_type2(example2())


def test_to_general_layout():
    g = example2().to_general()
    assert g.alpha == pytest.approx(np.pi / 2)
    assert g.beta == pytest.approx(np.pi / 2)
    assert g.zeta == 0.0
    np.testing.assert_allclose(g.base_anchors[0], [2 * np.sqrt(3), -2, 0], atol=1e-14)
    np.testing.assert_allclose(g.platform_anchors[2], [-1.5 * np.sqrt(3), -1.5, 0], atol=1e-14)
    np.testing.assert_allclose(g.leg_lengths, [6, 7, 7])
    sides = np.linalg.norm(g.base_anchors - np.roll(g.base_anchors, 1, axis=0), axis=1)
    np.testing.assert_allclose(sides, 4 * np.sqrt(3))
    # first revolute axis (x) is parallel to the side A1 A3
    side = g.base_anchors[2] - g.base_anchors[0]
    assert abs(side[1]) <= 1e-14 and abs(side[2]) <= 1e-14
    assert is_type2(g)
    assert not is_type2(example1())


def test_unit_directions():
    u = unit_directions()
    np.testing.assert_allclose(np.linalg.norm(u, axis=1), 1.0)
    np.testing.assert_allclose(u.sum(axis=0), 0.0, atol=1e-15)


def test_geometry_validation():
    with pytest.raises(GeometryError):
        TriceptType2Geometry(0.0, 3.0, (6, 7, 7))
    with pytest.raises(GeometryError):
        TriceptType2Geometry(4.0, 3.0, (6, -7, 7))
    with pytest.raises(GeometryError):
        TriceptType2Geometry(4.0, 3.0, (6, 7))


def test_squares_match_reference(sol2):
    assert sol2.sigma_squared.size == 14
    assert match_complex(sol2.sigma_squared, example2_squares()) <= 1e-8


def test_configurations_match_reference(sol2):
    rows = example2_configs()
    assert len(sol2) == len(rows) == 12
    for c, row in zip(sol2.configurations, rows):
        d_sigma, d_angle, d_point = table_row_errors(c, row)
        assert d_sigma <= 1e-8 and d_angle <= 1e-7 and d_point <= 1e-8


def test_full_root_set_is_symmetric(sol2):
    roots = sol2.roots
    assert roots.size == 28
    assert match_complex(roots, -roots) <= 1e-9


def test_same_as_general_solver(sol2):
    general = solve(example2().to_general())
    assert len(general) == len(sol2)
    for a, b in zip(general, sol2):
        assert np.abs(a.platform_world - b.platform_world).max() <= 1e-9


@pytest.mark.parametrize("k", [0, 1])
def test_mirror_of_reference_row(k):
    geom = example2().to_general()
    upper = EX2_UPPER_CONFIGS[k]
    c = solve_type2(example2()).configurations
    match = min(c, key=lambda x: abs(x.sigma - upper[0]))
    image = mirror(match, geom)
    lower = mirrored(upper)
    d_sigma, d_angle, d_point = table_row_errors(image, lower)
    assert d_sigma <= 1e-8 and d_angle <= 1e-7 and d_point <= 1e-8
    np.testing.assert_allclose(image.platform_world[:, 2], -match.platform_world[:, 2], atol=1e-14)


def test_mirror_is_involution_and_closes():
    rng = np.random.default_rng(31)
    geom = example2().to_general()
    for c in solve_type2(example2()):
        back = mirror(mirror(c, geom), geom)
        np.testing.assert_allclose(back.as_vector(), c.as_vector(), atol=1e-14)
        assert np.abs(leg_residuals(mirror(c, geom).pose, geom)).max() <= 1e-12
    pose = PoseParams(*rng.uniform(-2, 2, 3))
    from rrpss.solver import _configuration
    c = _configuration(geom, pose.theta1, pose.theta2, pose.sigma)
    m = mirror(c, geom)
    np.testing.assert_allclose(m.platform_world * [1, 1, -1], c.platform_world, atol=1e-13)


def test_mirror_requires_type2():
    from rrpss.solver import _configuration
    g = example1()
    with pytest.raises(GeometryError):
        mirror(_configuration(g, 0.1, 0.2, 0.3), g)


def test_mirror_pairs(sol2):
    pairs = mirror_pairs(sol2)
    assert len(pairs) == 6
    for upper, lower in pairs:
        assert upper.sigma > 0
        assert lower.sigma == pytest.approx(-upper.sigma, abs=1e-12)
    np.testing.assert_allclose([p[0].sigma for p in pairs], [r[0] for r in EX2_UPPER_CONFIGS],
                               atol=1e-8)


def _planar_pose_lengths(theta1, theta2):
    g = TriceptType2Geometry(4.0, 3.0, (1.0, 1.0, 1.0)).to_general()
    pose = PoseParams(theta1, theta2, 0.0)
    return tuple(np.linalg.norm(platform_points(pose, g) - g.base_anchors, axis=1))


def test_sigma_zero_not_duplicated():
    sol = solve_type2(TriceptType2Geometry(4.0, 3.0, _planar_pose_lengths(0.4, -0.7)))
    assert sol.real_roots.count(0.0) == 1
    at_zero = sorted((c for c in sol if abs(c.sigma) <= 1e-8), key=lambda c: c.theta1_deg)
    # the planted pose and its mirror both sit at sigma = 0
    assert len(at_zero) == 2
    np.testing.assert_allclose(at_zero[1].as_vector()[:2], [0.4, -0.7], atol=1e-8)
    np.testing.assert_allclose(at_zero[0].as_vector()[:2], [-0.4, 0.7], atol=1e-8)
    assert len(sol) == len({tuple(np.round(c.as_vector(), 6)) for c in sol})


def test_singular_home_pose_reported_once():
    # the concentric planar pose is a singular assembly
    sol = solve_type2(TriceptType2Geometry(4.0, 3.0, _planar_pose_lengths(0.0, 0.0)))
    near_home = [c for c in sol if np.abs(c.as_vector()).max() <= 1e-4]
    assert len(near_home) == 1


def test_type1_not_supported():
    with pytest.raises(NotSupported):
        solve_type2(TriceptType1Geometry(4.0, 3.0, (6, 7, 7)))


def test_type1_layout_differs():
    g1 = TriceptType1Geometry(4.0, 3.0, (6, 7, 7)).to_general()
    np.testing.assert_allclose(g1.base_anchors[0], [4, 0, 0], atol=1e-14)


def test_odd_leak_reported(monkeypatch):
    monkeypatch.setattr(tricept, "TOL_ODD", -1.0)
    with pytest.raises(OddCoefficientLeak):
        solve_type2(example2())


def test_random_type2_properties():
    rng = np.random.default_rng(32)
    for _ in range(8):
        tg = random_type2(rng)
        sol = solve_type2(tg)
        assert sol.diagnostics["odd_ratio"] <= 1e-8
        assert len(sol) <= 28
        geom = sol.geometry
        for c in sol:
            assert np.abs(leg_residuals(c.pose, geom)).max() <= 1e-9 * (1 + max(tg.leg_lengths))
        positive = [c for c in sol if c.sigma > 1e-8]
        negative = [c for c in sol if c.sigma < -1e-8]
        assert len(positive) == len(negative)


def test_odd_coefficients_vanish_on_random_instances():
    from rrpss import det_polynomial, extract_trig_coefficients, rationalize
    rng = np.random.default_rng(33)
    worst = 0.0
    for _ in range(50):
        poly = det_polynomial(rationalize(extract_trig_coefficients(random_type2(rng).to_general())))
        h = poly.scaled_coeffs
        worst = max(worst, np.abs(h[1::2]).max() / np.abs(h).max())
    assert worst <= 1e-8
