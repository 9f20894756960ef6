"""Exception hierarchy shared by every module."""

from __future__ import annotations


class PolyCoordsError(ValueError):
    """Base class for all rejections raised by this package."""


class InvalidWeightError(PolyCoordsError):
    """A weight or operator fell outside its admissible interval."""


class InvalidPolygonError(PolyCoordsError):
    """The vertex list is not a strictly convex counterclockwise polygon."""


class InvalidDecompositionError(PolyCoordsError):
    """A chord set is not a valid non-crossing chordal decomposition."""


class PointOutsideError(PolyCoordsError):
    """A query point lies outside the polygon (or triangle) it was asked about.

    ``witness`` is the oriented segment ``(j, k)`` whose areal function is
    negative at the point.
    """

    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness
