"""Exact planar primitives on strictly convex polygons.

Vertex labels are 1-based throughout, matching ``v_1 .. v_n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .algebra import ONE, ZERO, RationalLike, as_rational
from .errors import InvalidPolygonError, PointOutsideError, PolyCoordsError


class Point2(NamedTuple):
    x: Fraction
    y: Fraction


def point(x: RationalLike, y: RationalLike) -> Point2:
    return Point2(as_rational(x), as_rational(y))


class OrientedSegment(NamedTuple):
    """The directed segment from vertex ``j`` to vertex ``k``."""

    j: int
    k: int

    def reversed(self) -> "OrientedSegment":
        return OrientedSegment(self.k, self.j)

    def __str__(self) -> str:
        return f"{self.j}^{self.k}"


class OrientedTriangle(NamedTuple):
    """Three vertex labels listed counterclockwise."""

    i1: int
    i2: int
    i3: int

    def edges(self) -> tuple[OrientedSegment, OrientedSegment, OrientedSegment]:
        return (
            OrientedSegment(self.i1, self.i2),
            OrientedSegment(self.i2, self.i3),
            OrientedSegment(self.i3, self.i1),
        )

    def __str__(self) -> str:
        return f"{self.i1}^{self.i2}^{self.i3}"


def signed_area(v0: Sequence[Fraction], v1: Sequence[Fraction], v2: Sequence[Fraction]) -> Fraction:
    """Half the determinant of ``[v1 - v0, v2 - v0]``; positive iff counterclockwise."""
    det = (v1[0] - v0[0]) * (v2[1] - v0[1]) - (v1[1] - v0[1]) * (v2[0] - v0[0])
    return Fraction(det) / 2


def sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def standard_order(labels: Iterable[int], n: int) -> list[int]:
    """Order a label set: increasing, except that ``{1, n}`` reads ``n < 1``."""
    s = set(labels)
    if len(s) < 2:
        raise PolyCoordsError("standard order needs at least two labels")
    if not all(1 <= i <= n for i in s):
        raise PolyCoordsError(f"labels {sorted(s)} not within 1..{n}")
    if s == {1, n}:
        return [n, 1]
    return sorted(s)


@dataclass(frozen=True)
class Polygon:
    """A strictly convex polygon with counterclockwise vertices.

    Construction validates; an instance always satisfies the invariants.
    """

    vertices: tuple[Point2, ...]
    _area: Fraction = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        pts = tuple(p if isinstance(p, Point2) else point(*p) for p in self.vertices)
        object.__setattr__(self, "vertices", pts)
        n = len(pts)
        if n < 3:
            raise InvalidPolygonError(f"a polygon needs at least 3 vertices, got {n}")
        if len(set(pts)) != n:
            raise InvalidPolygonError("polygon has repeated vertices")
        for i in range(n):
            a, b, c = pts[i], pts[(i + 1) % n], pts[(i + 2) % n]
            s = signed_area(a, b, c)
            if s == 0:
                raise InvalidPolygonError(
                    f"collinear vertices {i + 1}, {(i + 1) % n + 1}, {(i + 2) % n + 1}"
                )
            if s < 0:
                raise InvalidPolygonError(
                    f"clockwise or reflex turn at vertex {(i + 1) % n + 1}"
                )
        # Local left turns allow star polygons; require every vertex strictly
        # left of every edge it is not on.
        for i in range(n):
            a, b = pts[i], pts[(i + 1) % n]
            for k in range(n):
                if k in (i, (i + 1) % n):
                    continue
                if signed_area(pts[k], a, b) <= 0:
                    raise InvalidPolygonError(
                        f"vertex {k + 1} is not strictly inside edge {i + 1}^{(i + 1) % n + 1}"
                    )
        area = sum(
            (signed_area(pts[0], pts[i], pts[i + 1]) for i in range(1, n - 1)), ZERO
        )
        object.__setattr__(self, "_area", area)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def area(self) -> Fraction:
        return self._area

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex(self, label: int) -> Point2:
        if not 1 <= label <= self.n:
            raise PolyCoordsError(f"vertex label {label} not within 1..{self.n}")
        return self.vertices[label - 1]

    def edges(self) -> list[OrientedSegment]:
        """Boundary edges ``i^(i+1)`` read cyclically, so the last is ``n^1``."""
        return [OrientedSegment(i, i % self.n + 1) for i in range(1, self.n + 1)]

    def outside_witness(self, x: Sequence[Fraction]) -> OrientedSegment | None:
        """First boundary edge with ``x`` strictly on its right, or ``None``."""
        for seg in self.edges():
            if areal_value(x, seg, self) < 0:
                return seg
        return None

    def contains(self, x: Sequence[Fraction]) -> bool:
        return self.outside_witness(x) is None

    def require_inside(self, x: Sequence[Fraction]) -> None:
        seg = self.outside_witness(x)
        if seg is not None:
            raise PointOutsideError(
                f"point ({x[0]}, {x[1]}) lies outside the polygon across edge {seg}",
                witness=tuple(seg),
            )


def validate_polygon(points: Iterable[Sequence[RationalLike]]) -> Polygon:
    return Polygon(tuple(point(*p) for p in points))


def areal_value(x: Sequence[Fraction], seg: Sequence[int], poly: Polygon) -> Fraction:
    """Signed area of ``(x, v_j, v_k)``; reversing the segment negates it."""
    j, k = seg
    if j == k:
        raise PolyCoordsError("segment endpoints must differ")
    return signed_area(x, poly.vertex(j), poly.vertex(k))


def side_of(x: Sequence[Fraction], seg: Sequence[int], poly: Polygon) -> int:
    """+1 left of the directed line ``v_j -> v_k``, 0 on it, -1 right of it."""
    return sign(areal_value(x, seg, poly))


def raw_triangle_coords(
    x: Sequence[Fraction], tri: Sequence[int], poly: Polygon
) -> tuple[Fraction, Fraction, Fraction]:
    """Areal coordinates of ``x`` w.r.t. ``tri`` without any containment check.

    Entries may be negative for points outside the triangle.
    """
    v = [poly.vertex(i) for i in tri]
    total = signed_area(v[0], v[1], v[2])
    if total <= 0:
        raise PolyCoordsError(f"triangle {tuple(tri)} is not counterclockwise")
    return tuple(  # type: ignore[return-value]
        signed_area(v[(i - 1) % 3], x, v[(i + 1) % 3]) / total for i in range(3)
    )


def in_triangle(x: Sequence[Fraction], tri: Sequence[int], poly: Polygon) -> bool:
    """Closed containment: ``x`` on or left of all three oriented edges."""
    a, b, c = tri
    return (
        areal_value(x, (a, b), poly) >= 0
        and areal_value(x, (b, c), poly) >= 0
        and areal_value(x, (c, a), poly) >= 0
    )


def triangle_coords(
    x: Sequence[Fraction], tri: Sequence[int], poly: Polygon
) -> tuple[Fraction, Fraction, Fraction]:
    """Areal coordinates of a point of the closed triangle ``tri``."""
    coords = raw_triangle_coords(x, tri, poly)
    a, b, c = tri
    for seg in ((a, b), (b, c), (c, a)):
        if areal_value(x, seg, poly) < 0:
            raise PointOutsideError(
                f"point ({x[0]}, {x[1]}) lies outside triangle {a}^{b}^{c}",
                witness=seg,
            )
    assert sum(coords, ZERO) == ONE
    return coords
