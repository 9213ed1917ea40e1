"""
Forward kinematics of a type-II Tricept
=======================================

With the three actuators locked, the parallel stage of a Tricept is a
UP-3(SS) structure.  In the type-II arrangement its polynomial is even, so
it is solved in sigma^2 and every assembly comes with a mirror image.
"""

import numpy as np
import rrpss

tg = rrpss.TriceptType2Geometry(4.0, 3.0, (6.0, 7.0, 7.0))
geom = tg.to_general()
print("base anchors:\n", geom.base_anchors)

sol = rrpss.solve_type2(tg)

# odd coefficients vanish up to rounding
print("odd/even coefficient ratio:", sol.diagnostics["odd_ratio"])
print("sigma^2 values:")
for s in sol.sigma_squared:
    print(f"  {s.real: .10f} {s.imag:+.10f}j")

# pairs (sigma, theta1, theta2) and (-sigma, -theta1, -theta2)
for upper, lower in rrpss.mirror_pairs(sol):
    print(f"sigma=±{upper.sigma:.10f}  theta1={upper.theta1_deg: .6f}  theta2={upper.theta2_deg: .6f}")
    print("   z of B_i:", upper.platform_world[:, 2], "mirror:", lower.platform_world[:, 2])

# the general solver finds the same assemblies without using the symmetry
general = rrpss.solve(geom)
gap = max(np.abs(a.platform_world - b.platform_world).max() for a, b in zip(general, sol))
print("general vs. type-II solver:", gap)

# a type-I Tricept is refused
try:
    rrpss.solve_type2(rrpss.TriceptType1Geometry(4.0, 3.0, (6.0, 7.0, 7.0)))
except rrpss.NotSupported as exc:
    print("type-I:", exc)
