"""
Assembly configurations of a general RRP-3(SS) structure
=========================================================

Solve a structure with skew revolute axes and print every real assembly.
"""

import numpy as np
import rrpss

# two revolute pairs (alpha, beta), a prismatic offset zeta, three spherical legs
geom = rrpss.MechanismGeometry.from_degrees(
    80, 115, 1,
    [[-1, 2, -1], [-1, -1, 1], [2, 0, 2]],
    [[-1, 1, 0], [0, -1, 1], [1, -1, 1]],
    [3, 4, 5])

sol = rrpss.solve(geom)

# the univariate polynomial in sigma always has 28 complex roots
print("roots:", len(sol.roots), " real:", len(sol.real_roots))
for r in sol.roots:
    print(f"  {r.real: .12f} {r.imag:+.12f}j")

# every real root gives one configuration; B_i are the platform points in the base frame
for c in sol:
    print(f"sigma={c.sigma: .10f}  theta1={c.theta1_deg: 10.5f}  theta2={c.theta2_deg: 10.5f}")
    print("   B =", np.array2string(c.platform_world, precision=6).replace("\n", "\n       "))

# leg lengths are reproduced to rounding level
worst = max(c.residual_max for c in sol)
print("worst leg-length residual:", worst)
