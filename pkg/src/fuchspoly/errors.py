"""Exception types shared across the package."""


class GeometryError(ValueError):
    """Invalid geometric input (wrong dimension, causal type, or scale)."""


class EmptyFacetError(GeometryError):
    """A requested facet has empty interior: the support vector lies
    outside the admissible open cone of the normal family."""

    def __init__(self, rep_index, message=None):
        self.rep_index = rep_index
        super().__init__(message or f"facet {rep_index} is empty: support vector "
                         "outside the admissible cone")


class CutoffOverflowError(GeometryError):
    """The orbit cutoff certificate was not reached within the maximum
    enumeration radius."""

    def __init__(self, radius, detail=""):
        self.radius = radius
        super().__init__(f"orbit cutoff certificate not reached at radius {radius:g}"
                         + (f": {detail}" if detail else ""))


class FanMismatchError(GeometryError):
    """Arguments do not share the required normal fan (strong-isomorphy class)."""


class NonConvergenceError(RuntimeError):
    """Newton iteration failed to reach the requested residual."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"solver did not converge in {report.iterations} iterations; "
                         f"final residual {report.residual_history[-1]:.3e}")


class DomainEscapeError(RuntimeError):
    """No backtracking step length kept the iterate inside the admissible cone."""
