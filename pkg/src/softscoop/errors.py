"""Exception types shared across the package."""


class SoftscoopError(Exception):
    """Base class for all package errors."""


class DegenerateRank(SoftscoopError):
    """Point set is collinear or coincident; no unique plane."""


class DuplicateAbscissa(SoftscoopError):
    """Two parabola anchors share the same u coordinate."""


class DegenerateCurvature(SoftscoopError):
    """Fitted curvature is (numerically) zero; anchors are collinear."""


class BadSampleCount(SoftscoopError):
    """Resampling needs at least 3 waypoints."""


class NotSymmetric(SoftscoopError):
    """Matrix handed to the symmetric eigensolver is not symmetric."""


class BadResolution(SoftscoopError):
    """Mesh generation needs at least 3 rings."""


class Diverged(SoftscoopError):
    """Simulation state became non-finite or left the sane domain."""


class ResolutionTooCoarse(SoftscoopError):
    """Height-field cell size too large for the container dimensions."""


class NoContour(SoftscoopError):
    """An iso-height level intersects no closed cavity contour."""


class RayMiss(SoftscoopError):
    """A compass ray leaves the contour polygon without intersecting it."""


class IncompleteSkeleton(SoftscoopError):
    """Skeleton is missing a control point needed for the seed path."""


class DegenerateSegment(SoftscoopError):
    """Consecutive waypoints coincide; no motion direction."""


class Timeout(SoftscoopError):
    """Rollout would exceed the maximum simulated time."""


class NonFiniteLoss(SoftscoopError):
    """A candidate evaluation produced a non-finite loss."""


class ConfigError(SoftscoopError):
    """Scenario or catalog configuration is invalid (CLI exit code 2)."""
