"""Exception types raised by the solver pipeline."""


class GeometryError(ValueError):
    """Invalid mechanism parameters."""


class SolverError(RuntimeError):
    """Base class for numerical failures of the elimination pipeline."""


class CollapseFailure(SolverError):
    """Interpolated determinant has significant coefficients above degree 28."""


class SingularGeometry(SolverError):
    """det M(sigma) vanishes identically (architecturally singular instance)."""


class NonConvergence(SolverError):
    """Root finder failed to meet its residual bound."""


class UnpairedComplexRoot(SolverError):
    """A non-real root has no conjugate partner."""


class RootAtInfinity(SolverError):
    """The null vector of M has a vanishing first component (a joint angle near pi)."""


class AmbiguousNullSpace(SolverError):
    """M(sigma) has a null space of dimension > 1 at this root."""


class RefinementDiverged(SolverError):
    """Newton refinement increased the residual for three consecutive steps."""


class OddCoefficientLeak(SolverError):
    """Odd-power coefficients of a type-II polynomial failed to vanish."""


class NotSupported(Exception):
    """The requested structure cannot be solved by this elimination scheme."""
