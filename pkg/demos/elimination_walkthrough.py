"""
Step by step through the elimination
====================================

The three compatibility equations are rewritten in the half-angle tangents
t1, t2, multiplied by t1^u t2^v and collected in a 24 x 24 matrix M(sigma)
acting on the power products t1^p t2^q.  det M(sigma) is the polynomial
whose roots are the sigma values of the assemblies.
"""

import numpy as np
import rrpss
from rrpss.elimination import monomial_vector

geom = rrpss.MechanismGeometry.from_degrees(
    80, 115, 1,
    [[-1, 2, -1], [-1, -1, 1], [2, 0, 2]],
    [[-1, 1, 0], [0, -1, 1], [1, -1, 1]],
    [3, 4, 5])

# coefficients of the equations in (1, sin, cos) of each angle and powers of sigma
tc = rrpss.extract_trig_coefficients(geom)
print("trigonometric coefficients:", tc.values.shape)

# half-angle substitution: biquadratic in t1, t2 with polynomial coefficients in sigma
rc = rrpss.rationalize(tc)
print("rationalized coefficients:", rc.values.shape, " degrees in sigma:",
      [rc.degree(j) for j in (1, 2, 3)])

# the matrix at an arbitrary sigma, and its sparsity
M = rrpss.build_M(rc, 0.7)
print("M(0.7):", M.shape, "nonzeros:", np.count_nonzero(M))

# the determinant is interpolated on circles; coefficients past degree 28 collapse
poly = rrpss.det_polynomial(rc)
print("degree:", poly.degree, " tail ratio:", poly.diagnostics["collapse_ratio"])

roots = rrpss.all_roots(poly)
reals, pairs = rrpss.classify_real(roots)
print(len(reals), "real roots,", len(pairs), "conjugate pairs")

# at a real root M is singular; its null vector is the list of power products
sigma = reals[4]
t1, t2 = rrpss.back_substitute(rc, sigma)
tau = monomial_vector(t1, t2)
print(f"sigma={sigma:.12f}  t1={t1:.10f}  t2={t2:.10f}")
print("|M tau| / |M| |tau| =", np.linalg.norm(rrpss.build_M(rc, sigma) @ tau)
      / np.linalg.norm(rrpss.build_M(rc, sigma)) / np.linalg.norm(tau))

c = rrpss.refine(rrpss.assemble(geom, sigma, t1, t2), geom)
print("angles (deg):", c.theta1_deg, c.theta2_deg, " residual:", c.residual_max)
