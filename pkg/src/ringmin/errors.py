"""Exception types shared across the package.

Two families matter for the CLI exit-code contract: `DataError` covers
inputs that violate a documented invariant (exit code 2), `ObstructionError`
covers geometric obstructions met while building a surface (exit code 3).
"""


class DataError(ValueError):
    """Input data violates a documented invariant."""


class EllipticityError(DataError):
    """sup |nu| >= 1: the second Beltrami equation is not uniformly elliptic."""


class GaussVectorError(DataError):
    """A prescribed normal is not a unit vector in C x R."""


class SlopeError(DataError):
    """A prescribed normal does not point into the northern hemisphere."""


class ObstructionError(ValueError):
    """Geometric obstruction discovered while building a surface."""


class PeriodError(ObstructionError):
    """The height differential has a nonzero period; no single-valued lift."""

    def __init__(self, defect, message=None):
        self.defect = float(defect)
        super().__init__(
            message or f"height lift obstructed: period defect {self.defect:.6g}"
        )


class BranchError(ObstructionError):
    """No continuous single-valued square root along the curve."""


class CompatibilityError(ObstructionError):
    """Slope data violates the tangential compatibility inequality."""

    def __init__(self, theta, margin):
        self.theta = float(theta)
        self.margin = float(margin)
        super().__init__(
            f"slope compatibility violated at theta={self.theta:.6f} "
            f"(margin {self.margin:.3e})"
        )


class MoveContourError(ValueError):
    """The integrand vanishes on the contour; integrate on a nearby circle."""


class CriticalPointError(ValueError):
    """Both Wirtinger derivatives vanish; the surface normal is undefined."""


class OrientationError(ValueError):
    """Nonpositive Jacobian where an orientation-preserving map is required."""
