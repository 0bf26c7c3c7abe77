"""Exception types shared across the package."""


class NetcurvError(Exception):
    """Base class for all package errors."""


class EdgeListParseError(NetcurvError):
    """Malformed edge-list or faces input; carries the offending line number."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class GraphValidationError(NetcurvError):
    """A Network/Face/MetricContext invariant is violated."""


class DegenerateTriangleError(NetcurvError):
    """Metric triple is collinear: the circumscribed circle degenerates.

    Raised instead of returning an infinity so aggregations fail loudly.
    """


class GeometryDomainError(NetcurvError):
    """Side lengths fall outside the admissible domain of the background geometry."""


class CurvatureDomainError(NetcurvError):
    """Curvature formula evaluated outside its domain (e.g. path shorter than chord)."""


class UnsupportedVariantError(NetcurvError):
    """Measure not defined for this kind of network (e.g. Forman on directed input)."""


class UnreachableError(NetcurvError):
    """Vertex pair has no connecting path within the requested scope."""


class TransportInfeasibleError(NetcurvError):
    """No feasible coupling exists over finite-cost pairs."""
