"""Exception hierarchy shared by every module of the package."""


class DeltaShapeError(Exception):
    """Base class for all package errors."""


class DimensionError(DeltaShapeError, ValueError):
    """A cell has the wrong dimension for the requested operation."""


class ConstructionError(DeltaShapeError, ValueError):
    """A complex cannot be built from the supplied cells."""


class KindViolationError(DeltaShapeError, ValueError):
    """An operation would produce a cell forbidden by the complex kind."""


class ChainError(DeltaShapeError, RuntimeError):
    """No spoke chain of the requested depth exists."""


class EmptinessError(DeltaShapeError, ValueError):
    """The input has no 2-cells."""


class DomainError(DeltaShapeError, ValueError):
    """A parameter lies outside the domain of a spline or knot vector."""


class InsufficientKeypointsError(DeltaShapeError):
    """Fewer than three distinct keypoints were detected."""


class DegeneracyError(DeltaShapeError, ValueError):
    """Input points are all collinear."""


class ConfigurationError(DeltaShapeError, ValueError):
    """A relation or pipeline was configured inconsistently."""


class ExtractionError(DeltaShapeError, ValueError):
    """A feature could not be extracted (cell outside the image)."""


class ConsistencyError(DeltaShapeError, ValueError):
    """Inputs to the renderer do not describe the same mesh."""
