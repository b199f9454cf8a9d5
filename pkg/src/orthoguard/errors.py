"""Exception hierarchy shared by every module of the package."""


class GeometryError(ValueError):
    """Base class for all errors raised by orthoguard."""


class ValidationError(GeometryError):
    """A vertex list does not describe a valid orthogonal polygon.

    ``index`` names the offending vertex or edge (edge ``i`` runs from
    vertex ``i`` to vertex ``i + 1``) in the caller's original ordering.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class OddVertexCount(ValidationError):
    pass


class NonAlternatingEdges(ValidationError):
    pass


class SelfIntersection(ValidationError):
    pass


class ZeroLengthEdge(ValidationError):
    pass


class PointOutsidePolygon(GeometryError):
    pass


class NotAnEdge(GeometryError):
    pass


class UnsupportedPolygon(GeometryError):
    """The polygon is valid but outside the class an operation accepts."""


class NotXMonotone(UnsupportedPolygon):
    pass


class NotOrthoconvex(UnsupportedPolygon):
    pass


class NotHistogram(UnsupportedPolygon):
    pass


class NotBalanced(UnsupportedPolygon):
    pass


class NoHorizontalSpanner(GeometryError):
    pass


class NoVerticalSpanner(GeometryError):
    pass


class EmptyIntersection(GeometryError):
    pass


class CapExceeded(GeometryError):
    pass


class NoSolutionWithinLimit(GeometryError):
    pass


class InvalidSpec(GeometryError):
    pass
