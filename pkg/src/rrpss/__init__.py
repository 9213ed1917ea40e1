"""Position analysis of RRP-3(SS) multi-loop spatial structures.

The compatibility equations of the structure are reduced by dialytic
elimination to one univariate polynomial of degree 28 in the prismatic
joint variable; every real root is back-substituted into a full assembly
configuration.  Type-II Tricept structures are handled through the even
polynomial in sigma^2.
"""
from .compat import (RationalizedCoefficients, TrigCoefficients, extract_trig_coefficients,
                     rationalize, residual_canonical, residual_squared)
from .elimination import UnivariatePolynomial, build_M, det_polynomial, polish_roots
from .errors import (AmbiguousNullSpace, CollapseFailure, GeometryError, NonConvergence,
                     NotSupported, OddCoefficientLeak, RefinementDiverged, RootAtInfinity,
                     SingularGeometry, SolverError, UnpairedComplexRoot)
from .geometry import (MechanismGeometry, PoseParams, axis_vectors, platform_points, point_Q,
                       pose_rotation, rodrigues)
from .oracle import OracleGrid, multistart
from .polyroots import RootSet, all_roots, classify_real
from .solver import AssemblyConfiguration, SolutionSet, assemble, back_substitute, refine, solve
from .tricept import (TriceptType1Geometry, TriceptType2Geometry, mirror, mirror_pairs,
                      solve_type2)

__version__ = "0.1.0"
